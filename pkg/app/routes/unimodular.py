"""
unimodular commands: isometries of unimodular lattices
"""

from app.schemas.genus import Parity
from app.schemas.isometry import IsometryInvariants
from app.services.unimodular_service import UnimodularService
from app.utils.validation import parse_pair, positive_int


def _invariants(args) -> IsometryInvariants:
    l_plus, l_minus = args.sig
    s_plus, s_minus = args.s
    return IsometryInvariants(
        p=args.p,
        l_plus=l_plus,
        l_minus=l_minus,
        parity=Parity.from_text(args.parity),
        s_plus=s_plus,
        s_minus=s_minus,
        n=args.n,
    )


def unimodular_exists(args):
    inv = _invariants(args)
    exists = UnimodularService.isometry_exists(inv)
    return {"exists": exists, "m": inv.m if exists else None}


def unimodular_count(args):
    inv = _invariants(args)
    collections = UnimodularService.enumerate_signature_collections(inv.p, inv.s_plus, inv.s_minus)
    invariant = UnimodularService.invariant_genus(inv)
    return {
        "classes": UnimodularService.count_conjugacy_classes(inv),
        "signature_collections": [[list(slot) for slot in c.slots] for c in collections],
        "invariant_genus": str(invariant) if invariant else None,
    }


def register(subparsers, common):
    parser = subparsers.add_parser("unimodular", help="isometries of unimodular lattices")
    commands = parser.add_subparsers(dest="action", required=True)

    for name, handler, help_text in (
        ("exists", unimodular_exists, "existence of an isometry with these invariants"),
        ("count", unimodular_count, "number of conjugacy classes"),
    ):
        command = commands.add_parser(name, parents=[common], help=help_text)
        command.add_argument("--parity", required=True, help="even or odd")
        command.add_argument("--sig", type=parse_pair, required=True, metavar="L+,L-")
        command.add_argument("--p", type=positive_int, required=True)
        command.add_argument("--s", type=parse_pair, required=True, metavar="S+,S-")
        command.add_argument("--n", type=int, required=True)
        command.set_defaults(handler=handler)
