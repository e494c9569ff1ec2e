"""
genus commands: existence of p-elementary genera
"""

from app.schemas.genus import Parity
from app.services.discform_service import DiscriminantFormService
from app.utils.validation import parse_genus, parse_pair, positive_int


def genus_exists(args):
    return {"genus": str(args.symbol), "exists": DiscriminantFormService.genus_exists(args.symbol)}


def genus_eps(args):
    l_plus, l_minus = args.sig
    choice = DiscriminantFormService.forced_eps(Parity.from_text(args.parity), l_plus, l_minus, args.p, args.n)
    return {"eps": choice.value}


def register(subparsers, common):
    parser = subparsers.add_parser("genus", help="p-elementary genus symbols")
    commands = parser.add_subparsers(dest="action", required=True)

    exists = commands.add_parser("exists", parents=[common], help="is the genus nonempty")
    exists.add_argument("symbol", type=parse_genus, help="e.g. 'II_(2,2)5^-1'")
    exists.set_defaults(handler=genus_exists)

    eps = commands.add_parser("eps", parents=[common], help="signs of eps with a nonempty genus")
    eps.add_argument("--parity", required=True)
    eps.add_argument("--sig", type=parse_pair, required=True, metavar="L+,L-")
    eps.add_argument("--p", type=positive_int, required=True)
    eps.add_argument("--n", type=int, required=True)
    eps.set_defaults(handler=genus_eps)
