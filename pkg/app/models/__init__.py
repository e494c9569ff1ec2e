"""
Fixed lattice data: definite classes and IHS deformation types
"""

from .definite import classes_in_genus, gram_lattice
from .deformation import DEFORMATION_TYPES, deformation_type

__all__ = [
    "classes_in_genus",
    "gram_lattice",
    "DEFORMATION_TYPES",
    "deformation_type",
]
