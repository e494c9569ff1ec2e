"""
Utility functions for isoclass
"""

from .errors import (
    ArgumentError,
    ConsistencyError,
    DomainPreconditionError,
    IsoclassError,
    UnsupportedClassificationError,
    UnsupportedRangeError,
    UsageError,
)

__all__ = [
    "IsoclassError",
    "UsageError",
    "ArgumentError",
    "DomainPreconditionError",
    "UnsupportedRangeError",
    "UnsupportedClassificationError",
    "ConsistencyError",
]
