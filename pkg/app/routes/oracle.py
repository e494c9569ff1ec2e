"""
oracle command: brute-force orbit decomposition for a Gram matrix
"""

from app.schemas.lattice import GroupKind
from app.services.lattice_service import LatticeService
from app.utils.validation import parse_gram, positive_int


def oracle_orbits(args):
    group = LatticeService.group(args.gram, GroupKind(args.group))
    orbits = LatticeService.orbit_decomposition(args.gram, group, args.norm, primitive_only=not args.all)
    return [orbit.model_dump(mode="json") for orbit in orbits]


def register(subparsers, common):
    parser = subparsers.add_parser("oracle", help="explicit lattice computations")
    commands = parser.add_subparsers(dest="action", required=True)

    orbits = commands.add_parser("orbits", parents=[common], help="orbits of vectors of a given norm")
    orbits.add_argument("--gram", type=parse_gram, required=True, help="JSON rows, e.g. '[[2,1],[1,2]]'")
    orbits.add_argument("--norm", type=positive_int, required=True)
    orbits.add_argument("--group", choices=[g.value for g in GroupKind], required=True)
    orbits.add_argument("--all", action="store_true", help="include imprimitive vectors")
    orbits.set_defaults(handler=oracle_orbits, columns=["representative", "size", "norm", "divisibility"])
