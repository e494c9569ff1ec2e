"""
vector commands: primitive vectors in p-elementary lattices
"""

from app.schemas.embedding import EmbeddingQuery
from app.services.embedding_service import EmbeddingService
from app.utils.validation import parse_genus, positive_int


def _query(args) -> EmbeddingQuery:
    return EmbeddingQuery(genus=args.genus, k=args.k, div=args.div)


def vector_exists(args):
    verdict = EmbeddingService.vector_exists(_query(args))
    return {"genus": str(args.genus), "k": args.k, "div": args.div, "exists": verdict.value}


def vector_orbits(args):
    report = EmbeddingService.vector_orbits(_query(args))
    return {"genus": str(args.genus), "k": args.k, "div": args.div, **report.model_dump(mode="json")}


def register(subparsers, common):
    parser = subparsers.add_parser("vector", help="primitive vectors of given square and divisibility")
    commands = parser.add_subparsers(dest="action", required=True)

    for name, handler in (("exists", vector_exists), ("orbits", vector_orbits)):
        command = commands.add_parser(name, parents=[common])
        command.add_argument("--genus", type=parse_genus, required=True, help="e.g. 'II_(2,2)5^-1'")
        command.add_argument("--k", type=positive_int, required=True, help="the square x^2")
        command.add_argument("--div", type=positive_int, required=True)
        command.set_defaults(handler=handler)
