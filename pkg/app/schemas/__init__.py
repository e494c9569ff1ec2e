"""
Pydantic schemas for lattice data and command results
"""

from .genus import (
    CaseTag, ComplementDecomposition, EpsChoice, GenusSymbol, Parity,
    ScaleBlock, TorsionForm
)
from .isometry import IsometryInvariants, SignatureCollection
from .embedding import EmbeddingQuery, ExistenceVerdict, OrbitCount, OrbitReport
from .lattice import (
    DefiniteLatticeId, GramLattice, GroupKind, IntMatrix, IntVector,
    OrbitSeries, VectorOrbit
)
from .ihs import (
    AmbiguityTableEntry, AmbiguityVerdict, ClassificationRow, DeformationType,
    DeformationTypeName, ExcessLattice
)
from .output import OutputEnvelope, OutputFormat

__all__ = [
    # Genus symbols and discriminant forms
    "Parity", "EpsChoice", "GenusSymbol", "ScaleBlock", "TorsionForm",
    "CaseTag", "ComplementDecomposition",

    # Isometry invariants
    "IsometryInvariants", "SignatureCollection",

    # Primitive vectors
    "EmbeddingQuery", "ExistenceVerdict", "OrbitCount", "OrbitReport",

    # Explicit lattices
    "DefiniteLatticeId", "GroupKind", "GramLattice", "IntMatrix", "IntVector",
    "VectorOrbit", "OrbitSeries",

    # IHS manifolds
    "DeformationTypeName", "ExcessLattice", "DeformationType", "AmbiguityVerdict",
    "ClassificationRow", "AmbiguityTableEntry",

    # Output
    "OutputFormat", "OutputEnvelope",
]
