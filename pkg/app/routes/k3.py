"""
k3 commands: non-symplectic automorphisms of K3 surfaces
"""

from app.schemas.ihs import ROW_COLUMNS
from app.services.ihs_service import IHSService
from app.services.unimodular_service import UnimodularService
from app.utils.validation import positive_int


def k3_classify(args):
    return [row.to_record() for row in IHSService.k3_rows(args.p)]


def k3_exists(args):
    return {"p": args.p, "r": args.r, "a": args.a, "exists": UnimodularService.k3_exists(args.p, args.r, args.a)}


def register(subparsers, common):
    parser = subparsers.add_parser("k3", help="K3 surfaces")
    commands = parser.add_subparsers(dest="action", required=True)

    classify = commands.add_parser("classify", parents=[common], help="all (p, r, a) for a prime p")
    classify.add_argument("--p", type=positive_int, required=True)
    classify.set_defaults(handler=k3_classify, columns=ROW_COLUMNS)

    exists = commands.add_parser("exists", parents=[common], help="existence of one triple")
    exists.add_argument("--p", type=positive_int, required=True)
    exists.add_argument("--r", type=int, required=True)
    exists.add_argument("--a", type=int, required=True)
    exists.set_defaults(handler=k3_exists)
