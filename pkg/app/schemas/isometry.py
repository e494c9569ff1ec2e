"""
Invariants of odd prime order isometries of unimodular lattices
"""

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from app.schemas.genus import Parity


class IsometryInvariants(BaseModel):
    """(p, l+-, parity, s+-, n) for an isometry f of a unimodular lattice

    s+- is the signature of the coinvariant lattice L_f and det L_f = +-p^n.
    Deliberately unvalidated beyond types: existence checks return False on
    malformed data so that sweeps can pass raw ranges.
    """
    model_config = ConfigDict(frozen=True)

    p: int
    l_plus: int
    l_minus: int
    parity: Parity = Parity.EVEN
    s_plus: int
    s_minus: int
    n: int

    @property
    def coinvariant_rank(self) -> int:
        return self.s_plus + self.s_minus

    @property
    def invariant_signature(self) -> Tuple[int, int]:
        return self.l_plus - self.s_plus, self.l_minus - self.s_minus

    @property
    def m(self) -> Optional[int]:
        """m with s+ + s- = (n + 2m)(p - 1), or None if not a nonnegative integer"""
        if self.p < 3:
            return None
        total, remainder = divmod(self.coinvariant_rank, self.p - 1)
        if remainder or total < self.n or (total - self.n) % 2:
            return None
        return (total - self.n) // 2


class SignatureCollection(BaseModel):
    """Signatures (k_i+, k_i-) of f on the (p-1)/2 eigenspace pairs"""
    model_config = ConfigDict(frozen=True)

    slots: Tuple[Tuple[int, int], ...]

    @field_validator("slots")
    @classmethod
    def validate_slots(cls, v):
        if not v:
            raise ValueError("a signature collection has at least one slot")
        totals = {k_plus + k_minus for k_plus, k_minus in v}
        if len(totals) != 1:
            raise ValueError("k_i+ + k_i- must be independent of i")
        for k_plus, k_minus in v:
            if k_plus < 0 or k_minus < 0 or k_plus % 2 or k_minus % 2:
                raise ValueError("signature entries must be even and nonnegative")
        return v

    @property
    def signature(self) -> Tuple[int, int]:
        return sum(k for k, _ in self.slots), sum(k for _, k in self.slots)

    def flattened(self) -> Tuple[int, ...]:
        return tuple(x for slot in self.slots for x in slot)
