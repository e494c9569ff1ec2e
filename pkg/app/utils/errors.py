"""
Exception hierarchy shared by all services

The CLI maps each class to an exit code; see ``main.EXIT_CODES``.
"""


class IsoclassError(Exception):
    """Base class for every error raised by isoclass"""


class UsageError(IsoclassError):
    """Malformed input text: genus symbols, Gram JSON, output format"""


class ArgumentError(IsoclassError, ValueError):
    """An argument is outside an operation's precondition"""


class DomainPreconditionError(IsoclassError):
    """The queried object does not exist (e.g. a nonexistent (p, r, a) triple)"""


class UnsupportedRangeError(IsoclassError):
    """The query lies outside the supported computational range"""


class UnsupportedClassificationError(UnsupportedRangeError):
    """Classification of this deformation type is not implemented"""


class ConsistencyError(IsoclassError, AssertionError):
    """An internal cross-check failed"""
