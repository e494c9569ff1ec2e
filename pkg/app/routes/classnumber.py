"""
hminus command: relative class numbers
"""

from app.services.classnumber_service import ClassNumberService
from app.utils.validation import positive_int


def hminus(args):
    return {"p": args.p, "hminus": ClassNumberService.relative_class_number(args.p)}


def register(subparsers, common):
    parser = subparsers.add_parser("hminus", parents=[common], help="relative class number of Q(zeta_p)")
    parser.add_argument("--p", type=positive_int, required=True)
    parser.set_defaults(handler=hminus)
