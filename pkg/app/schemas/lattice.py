"""
Explicit Gram-matrix lattices and their vector orbits
"""

import enum
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import Matrix

IntVector = Tuple[int, ...]
IntMatrix = Tuple[Tuple[int, ...], ...]


class DefiniteLatticeId(str, enum.Enum):
    """The positive definite rank two invariant lattices"""
    A2NEG = "A2neg"
    K7 = "K7"
    F23A = "F23a"
    F23B = "F23b"


class GroupKind(str, enum.Enum):
    """Full isometry group or its orientation preserving part"""
    O = "O"
    SO = "SO"


class GramLattice(BaseModel):
    """A lattice given by a symmetric nondegenerate integer Gram matrix"""
    model_config = ConfigDict(frozen=True)

    gram: IntMatrix

    @field_validator("gram")
    @classmethod
    def validate_gram(cls, v):
        size = len(v)
        if size == 0 or any(len(row) != size for row in v):
            raise ValueError("Gram matrix must be square and nonempty")
        for i in range(size):
            for j in range(i + 1, size):
                if v[i][j] != v[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        if Matrix(v).det() == 0:
            raise ValueError("Gram matrix must be nondegenerate")
        return v

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.int64)

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    @property
    def determinant(self) -> int:
        return int(Matrix(self.gram).det())

    def inner(self, x: IntVector, y: IntVector) -> int:
        return sum(x[i] * self.gram[i][j] * y[j] for i in range(self.rank) for j in range(self.rank))

    def norm(self, x: IntVector) -> int:
        return self.inner(x, x)


class VectorOrbit(BaseModel):
    """One orbit of lattice vectors, labeled by its lexicographically minimal member"""
    model_config = ConfigDict(frozen=True)

    representative: IntVector
    size: int = Field(..., ge=1)
    norm: int
    divisibility: int = Field(..., ge=1)

    @model_validator(mode="after")
    def validate_divisibility(self):
        if self.norm % self.divisibility:
            raise ValueError("divisibility must divide the norm")
        return self


class OrbitSeries(BaseModel):
    """b(k) = number of G-orbits of primitive vectors of norm 2k, k = 1..kmax"""
    model_config = ConfigDict(frozen=True)

    lattice: DefiniteLatticeId
    group: GroupKind
    group_order: int = Field(..., ge=1)
    counts: List[int]
    exceptional: List[int] = Field(default_factory=list, description="S_G, values k with a fixed line of norm 2k")

    def count(self, k: int) -> int:
        return self.counts[k - 1]

    def nonzero_terms(self) -> List[Tuple[int, int]]:
        return [(k, b) for k, b in enumerate(self.counts, start=1) if b]
