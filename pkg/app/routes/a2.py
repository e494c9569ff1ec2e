"""
a2 command: primitive embeddings of A2(-1)
"""

from app.services.embedding_service import EmbeddingService
from app.utils.validation import parse_eps, positive_int


def a2_embeds(args):
    return {"embeds": EmbeddingService.a2_embeds(args.lminus, args.p, args.eps, args.n, args.div)}


def register(subparsers, common):
    parser = subparsers.add_parser("a2", help="A2(-1) in II_(3,l-) p^(eps n)")
    commands = parser.add_subparsers(dest="action", required=True)

    embeds = commands.add_parser("embeds", parents=[common])
    embeds.add_argument("--lminus", type=int, required=True)
    embeds.add_argument("--p", type=positive_int, required=True)
    embeds.add_argument("--eps", type=parse_eps, required=True)
    embeds.add_argument("--n", type=int, required=True)
    embeds.add_argument("--div", type=positive_int, required=True)
    embeds.set_defaults(handler=a2_embeds)
