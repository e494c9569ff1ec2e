"""
Primitive vector embedding queries and orbit reports
"""

import enum
from typing import List, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.schemas.genus import GenusSymbol

OrbitCount = Union[int, Literal["unknown"]]


class ExistenceVerdict(str, enum.Enum):
    """Tri-state answer: conditions are only necessary when l+ = 1 or l- = 0"""
    YES = "yes"
    NO = "no"
    NECESSARY_ONLY = "necessary_only"


class EmbeddingQuery(BaseModel):
    """A primitive vector x in a lattice of the given genus with x^2 = k and div(x) = div"""
    model_config = ConfigDict(frozen=True)

    genus: GenusSymbol
    k: int = Field(..., gt=0)
    div: int = Field(..., ge=1)


class OrbitReport(BaseModel):
    """Existence and number of O(L)-orbits of primitive vectors"""
    model_config = ConfigDict(frozen=True)

    exists: ExistenceVerdict
    orbit_count: OrbitCount
    special_case: bool = False
    l1_set: List[int] = Field(default_factory=list)
    l0_set: List[int] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_consistency(self):
        if self.orbit_count in (1, 2) and self.exists != ExistenceVerdict.YES:
            raise ValueError("a positive orbit count requires existence")
        if self.special_case and self.orbit_count != 2:
            raise ValueError("the special case always has two orbits")
        return self
