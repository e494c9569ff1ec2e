"""
theta command: theta series, primitive counts and orbit series
"""

from app.schemas.lattice import DefiniteLatticeId, GroupKind
from app.services.theta_service import ThetaService
from app.utils.validation import positive_int


def theta(args):
    lattice_id = DefiniteLatticeId(args.lattice)
    if args.orbits:
        series = ThetaService.orbit_series(lattice_id, GroupKind(args.orbits), args.prec)
        return [[k, b] for k, b in enumerate(series.counts, start=1)]
    coefficients = ThetaService.theta_coefficients(lattice_id, args.prec)
    if args.primitive:
        coefficients = ThetaService.primitive_counts(coefficients)
    return [[k, value] for k, value in enumerate(coefficients)]


def register(subparsers, common):
    parser = subparsers.add_parser("theta", parents=[common], help="q-expansions of the definite rank 2 lattices")
    parser.add_argument("--lattice", choices=[i.value for i in DefiniteLatticeId], required=True)
    parser.add_argument("--prec", type=positive_int, required=True)
    parser.add_argument("--primitive", action="store_true", help="Möbius-invert to primitive counts")
    parser.add_argument("--orbits", choices=[g.value for g in GroupKind], help="orbit counts b(k) under O or SO")
    parser.set_defaults(handler=theta, columns=["k", "value"])
