"""
Deformation types of IHS manifolds and classification rows
"""

import enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from app.schemas.embedding import OrbitCount
from app.schemas.genus import GenusSymbol
from app.schemas.lattice import GroupKind

ROW_COLUMNS = ["type", "p", "r", "a", "div", "exists", "orbits", "ambiguous", "steinitz"]


class DeformationTypeName(str, enum.Enum):
    """Known deformation types"""
    K3 = "K3"
    K3N = "K3n"
    KUMN = "Kumn"
    OG6 = "OG6"
    OG10 = "OG10"


class ExcessLattice(str, enum.Enum):
    """The lattice V with M = Lambda + V"""
    NONE = "none"
    RANK1_MINUS = "<2n-2>"
    RANK1_PLUS = "<2n+2>"
    DIAGONAL_TWO = "<2>+<2>"
    A2 = "A2(-1)"

    def square(self, n: int) -> int:
        """x^2 for a generator x of a rank one V on a manifold of index n"""
        if self == ExcessLattice.RANK1_MINUS:
            return 2 * n - 2
        if self == ExcessLattice.RANK1_PLUS:
            return 2 * n + 2
        raise ValueError(f"{self.value} is not a rank one lattice")


class DeformationType(BaseModel):
    """One row of the monodromy table: ambient genus M, excess lattice V, orbit group"""
    model_config = ConfigDict(frozen=True)

    name: DeformationTypeName
    ambient_signature: Tuple[int, int]
    excess: ExcessLattice
    group: Optional[GroupKind] = None

    @property
    def ambient(self) -> str:
        l_plus, l_minus = self.ambient_signature
        return f"II_({l_plus},{l_minus})"

    @property
    def invariant_positive(self) -> int:
        """l+ of the invariant lattice M^g; the coinvariant always has s+ = 2"""
        return self.ambient_signature[0] - 2


class AmbiguityVerdict(BaseModel):
    """Whether numerical invariants fail to determine the lattice-theoretic orbit"""
    model_config = ConfigDict(frozen=True)

    lattice_orbit_ambiguous: bool
    steinitz_factor: int = Field(..., ge=1)


class ClassificationRow(BaseModel):
    """An existing triple (p, r, a), optionally refined by div(V)"""
    model_config = ConfigDict(frozen=True)

    type: DeformationTypeName
    p: int
    r: int
    a: int
    div: Optional[int] = None
    exists: bool = True
    orbits: Optional[OrbitCount] = None
    ambiguous: Optional[bool] = None
    steinitz: int = Field(1, ge=1)
    genus: Optional[GenusSymbol] = Field(None, exclude=True)

    @property
    def verdict(self) -> Optional[AmbiguityVerdict]:
        if self.ambiguous is None:
            return None
        return AmbiguityVerdict(lattice_orbit_ambiguous=self.ambiguous, steinitz_factor=self.steinitz)

    def to_record(self) -> Dict[str, Any]:
        data = self.model_dump(mode="json")
        return {column: data[column] for column in ROW_COLUMNS}


class AmbiguityTableEntry(BaseModel):
    """Ambiguous manifold indices n for one (p, r, a, div)"""
    model_config = ConfigDict(frozen=True)

    type: DeformationTypeName
    p: int
    r: int
    a: int
    div: Optional[int] = None
    n: List[int]
