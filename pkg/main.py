"""
isoclass command-line entry point
Odd prime order isometries of lattices, K3 and IHS classification tables
"""

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from pydantic import ValidationError

from config import settings
from app.middleware.performance import PerformanceMonitor
from app.routes import ROUTERS
from app.schemas.output import OutputEnvelope, OutputFormat
from app.utils.errors import (
    ArgumentError,
    ConsistencyError,
    DomainPreconditionError,
    IsoclassError,
    UnsupportedRangeError,
    UsageError,
)

logger = logging.getLogger("isoclass")

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_PRECONDITION = 4

# Most specific class first
EXIT_CODES = [
    (UsageError, EXIT_USAGE),
    (UnsupportedRangeError, EXIT_UNSUPPORTED),
    (ArgumentError, EXIT_PRECONDITION),
    (DomainPreconditionError, EXIT_PRECONDITION),
    (ConsistencyError, EXIT_INTERNAL),
]


def exit_code_for(exc: IsoclassError) -> int:
    for error_class, code in EXIT_CODES:
        if isinstance(exc, error_class):
            return code
    return EXIT_INTERNAL


def configure_logging(level: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """One stderr handler on the root logger; stdout is reserved for payload"""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_isoclass", False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(stream or sys.stderr)
    handler._isoclass = True
    handler.setFormatter(logging.Formatter(settings.LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel((level or settings.LOG_LEVEL).upper())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
        help="output encoding (csv only for tabular commands)",
    )
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="diagnostics on stderr")

    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="Existence and class counts for odd prime order isometries of lattices",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for router in ROUTERS:
        router.register(subparsers, common)
    return parser


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Execute one command; returns the exit code"""
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    configure_logging(args.log_level, stderr)
    logger.info("command: %s", " ".join(argv))

    try:
        with PerformanceMonitor(argv, settings.SLOW_COMMAND_THRESHOLD):
            payload = args.handler(args)
            envelope = OutputEnvelope(
                command=argv,
                payload=payload,
                format=OutputFormat(args.format),
                columns=getattr(args, "columns", None),
            )
            text = envelope.render()
    except IsoclassError as exc:
        code = exit_code_for(exc)
        logger.debug("exit %d after %s", code, type(exc).__name__)
        stderr.write(f"{settings.APP_NAME}: error: {exc}\n")
        return code
    except ValidationError as exc:
        stderr.write(f"{settings.APP_NAME}: error: invalid input: {exc.errors()[0]['msg']}\n")
        return EXIT_USAGE
    except Exception as exc:
        logger.exception("unexpected failure")
        if settings.DEBUG:
            raise
        stderr.write(f"{settings.APP_NAME}: internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL

    stdout.write(text + "\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
