"""
ihs commands: automorphisms of IHS manifolds of known deformation types
"""

from app.schemas.ihs import ROW_COLUMNS, DeformationTypeName
from app.services.ihs_service import IHSService
from app.utils.validation import positive_int

TYPE_CHOICES = [t.value for t in DeformationTypeName]


def ihs_classify(args):
    rows = IHSService.classify(DeformationTypeName(args.type), args.p, args.n)
    return [row.to_record() for row in rows]


def ihs_ambiguous(args):
    found = IHSService.ambiguous_n(DeformationTypeName(args.type), args.p, args.r, args.a, args.div, args.nmax)
    return {"type": args.type, "p": args.p, "r": args.r, "a": args.a, "div": args.div, "n": found}


def ihs_induced(args):
    realizable = IHSService.induced_realizable(DeformationTypeName(args.type), args.p, args.r, args.a)
    return {"type": args.type, "p": args.p, "r": args.r, "a": args.a, "realizable": realizable}


def ihs_tables(args):
    return [entry.model_dump(mode="json") for entry in IHSService.ambiguity_table(args.type, args.nmax)]


def register(subparsers, common):
    parser = subparsers.add_parser("ihs", help="IHS manifolds")
    commands = parser.add_subparsers(dest="action", required=True)

    classify = commands.add_parser("classify", parents=[common], help="existing (p, r, a, div) rows")
    classify.add_argument("--type", choices=TYPE_CHOICES, required=True)
    classify.add_argument("--p", type=positive_int, required=True)
    classify.add_argument("--n", type=positive_int)
    classify.set_defaults(handler=ihs_classify, columns=ROW_COLUMNS)

    ambiguous = commands.add_parser("ambiguous", parents=[common], help="ambiguous indices n")
    ambiguous.add_argument("--type", choices=["K3n", "Kumn"], required=True)
    ambiguous.add_argument("--p", type=positive_int, required=True)
    ambiguous.add_argument("--r", type=int, required=True)
    ambiguous.add_argument("--a", type=int, required=True)
    ambiguous.add_argument("--div", type=positive_int)
    ambiguous.add_argument("--nmax", type=positive_int, required=True)
    ambiguous.set_defaults(handler=ihs_ambiguous)

    induced = commands.add_parser("induced", parents=[common], help="realizable by induced automorphisms")
    induced.add_argument("--type", choices=["K3n", "Kumn"], required=True)
    induced.add_argument("--p", type=positive_int, required=True)
    induced.add_argument("--r", type=int, required=True)
    induced.add_argument("--a", type=int, required=True)
    induced.set_defaults(handler=ihs_induced)

    tables = commands.add_parser("tables", parents=[common], help="ambiguous indices for every row, p <= 23")
    tables.add_argument("--type", choices=["K3n", "Kumn"], required=True)
    tables.add_argument("--nmax", type=positive_int, required=True)
    tables.set_defaults(handler=ihs_tables, columns=["type", "p", "r", "a", "div", "n"])
