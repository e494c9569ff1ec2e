"""
Genus symbols and torsion quadratic forms of p-elementary lattices
"""

import enum
import re
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.utils.arith import is_odd_prime, legendre, minus_one_power
from app.utils.errors import UsageError

GENUS_SYMBOL_PATTERN = re.compile(r"^(II|I)_\((0|[1-9]\d*),(0|[1-9]\d*)\)([1-9]\d*)\^([+-])(0|[1-9]\d*)$")


class Parity(str, enum.Enum):
    """Parity of a lattice, spelled as in genus symbols"""
    EVEN = "II"
    ODD = "I"

    @classmethod
    def from_text(cls, text: str) -> "Parity":
        lowered = text.strip().lower()
        if lowered in ("even", "ii"):
            return cls.EVEN
        if lowered in ("odd", "i"):
            return cls.ODD
        raise UsageError(f"unknown parity '{text}'; use even or odd")


class EpsChoice(str, enum.Enum):
    """Outcome of solving the sign congruence for epsilon"""
    PLUS = "+1"
    MINUS = "-1"
    NONE = "none"
    BOTH = "both"

    @property
    def sign(self) -> Optional[int]:
        return {EpsChoice.PLUS: 1, EpsChoice.MINUS: -1}.get(self)


class GenusSymbol(BaseModel):
    """The genus II_(l+,l-) p^(eps n) or I_(l+,l-) p^(eps n)"""
    model_config = ConfigDict(frozen=True)

    parity: Parity
    l_plus: int = Field(..., ge=0)
    l_minus: int = Field(..., ge=0)
    p: int
    eps: int = 1
    n: int = Field(0, ge=0)

    @field_validator("p")
    @classmethod
    def validate_prime(cls, v):
        if not is_odd_prime(v):
            raise ValueError(f"{v} is not an odd prime")
        return v

    @field_validator("eps")
    @classmethod
    def validate_eps(cls, v):
        if v not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        return v

    @model_validator(mode="after")
    def validate_length(self):
        if self.n > self.l_plus + self.l_minus:
            raise ValueError("n cannot exceed the rank")
        if self.n == 0 and self.eps != 1:
            raise ValueError("eps is +1 by convention when n = 0")
        return self

    @property
    def rank(self) -> int:
        return self.l_plus + self.l_minus

    @property
    def signature(self) -> Tuple[int, int]:
        return self.l_plus, self.l_minus

    @property
    def is_even(self) -> bool:
        return self.parity == Parity.EVEN

    @property
    def determinant_abs(self) -> int:
        return self.p ** self.n

    @classmethod
    def parse(cls, text: str) -> "GenusSymbol":
        match = GENUS_SYMBOL_PATTERN.match(text)
        if match is None:
            raise UsageError(f"'{text}' is not a genus symbol such as II_(2,2)5^-1")
        parity, l_plus, l_minus, p, sign, n = match.groups()
        return cls(
            parity=Parity(parity),
            l_plus=int(l_plus),
            l_minus=int(l_minus),
            p=int(p),
            eps=1 if sign == "+" else -1,
            n=int(n),
        )

    def __str__(self) -> str:
        sign = "+" if self.eps > 0 else "-"
        return f"{self.parity.value}_({self.l_plus},{self.l_minus}){self.p}^{sign}{self.n}"


class ScaleBlock(BaseModel):
    """All generators of one scale p^k: total length and product of their eps"""
    model_config = ConfigDict(frozen=True)

    scale: int = Field(..., ge=1)
    length: int = Field(..., ge=1)
    eps: int = 1


class TorsionForm(BaseModel):
    """A finite quadratic form on a p-group, stored canonically per scale

    Over an odd prime a form is classified by (length, eps product) at each
    scale, so w^e + w^e and w^-e + w^-e compare equal.
    """
    model_config = ConfigDict(frozen=True)

    p: int
    blocks: Tuple[ScaleBlock, ...] = ()

    @model_validator(mode="after")
    def validate_blocks(self):
        scales = [block.scale for block in self.blocks]
        if scales != sorted(set(scales)):
            raise ValueError("blocks must have distinct increasing scales")
        return self

    @classmethod
    def empty(cls, p: int) -> "TorsionForm":
        return cls(p=p)

    @classmethod
    def w(cls, p: int, scale: int, eps: int) -> "TorsionForm":
        """w^eps_{p,scale}: cyclic of order p^scale"""
        return cls(p=p, blocks=(ScaleBlock(scale=scale, length=1, eps=eps),))

    @classmethod
    def u(cls, p: int, scale: int) -> "TorsionForm":
        """u_{p,scale}: the hyperbolic plane over Z/p^scale"""
        return cls(p=p, blocks=(ScaleBlock(scale=scale, length=2, eps=minus_one_power(p, 1)),))

    @classmethod
    def elementary(cls, p: int, n: int, eps: int) -> "TorsionForm":
        """Discriminant form of a p-elementary lattice with symbol p^(eps n)"""
        if n == 0:
            return cls.empty(p)
        return cls(p=p, blocks=(ScaleBlock(scale=1, length=n, eps=eps),))

    @classmethod
    def cyclic(cls, p: int, k: int) -> "TorsionForm":
        """p-part of the discriminant form of the rank one lattice <k>"""
        unit = k
        scale = 0
        while unit % p == 0:
            unit //= p
            scale += 1
        if scale == 0:
            return cls.empty(p)
        return cls.w(p, scale, legendre(unit, p))

    def block(self, scale: int) -> Tuple[int, int]:
        """(length, eps) at the given scale; (0, 1) when absent"""
        for b in self.blocks:
            if b.scale == scale:
                return b.length, b.eps
        return 0, 1

    def _with_block(self, scale: int, length: int, eps: int) -> "TorsionForm":
        others = [b for b in self.blocks if b.scale != scale]
        if length > 0:
            others.append(ScaleBlock(scale=scale, length=length, eps=eps))
        return TorsionForm(p=self.p, blocks=tuple(sorted(others, key=lambda b: b.scale)))

    def __add__(self, other: "TorsionForm") -> "TorsionForm":
        if other.p != self.p:
            raise ValueError("cannot add torsion forms over different primes")
        result = self
        for b in other.blocks:
            length, eps = result.block(b.scale)
            result = result._with_block(b.scale, length + b.length, eps * b.eps)
        return result

    def negated(self) -> "TorsionForm":
        """The form -q"""
        return TorsionForm(
            p=self.p,
            blocks=tuple(
                ScaleBlock(scale=b.scale, length=b.length, eps=b.eps * minus_one_power(self.p, b.length))
                for b in self.blocks
            ),
        )

    def strip_w(self, scale: int, eps: int) -> Optional["TorsionForm"]:
        """Split off one w^eps_{p,scale}; None if it is not a summand"""
        length, total = self.block(scale)
        if length == 0 or (length == 1 and total != eps):
            return None
        return self._with_block(scale, length - 1, total * eps)

    def strip_u(self, scale: int) -> Optional["TorsionForm"]:
        """Split off one u_{p,scale}; None if it is not a summand"""
        length, total = self.block(scale)
        hyperbolic = minus_one_power(self.p, 1)
        if length < 2 or (length == 2 and total != hyperbolic):
            return None
        return self._with_block(scale, length - 2, total * hyperbolic)

    @property
    def length(self) -> int:
        return sum(b.length for b in self.blocks)

    @property
    def order(self) -> int:
        return self.p ** sum(b.scale * b.length for b in self.blocks)

    @property
    def character(self) -> int:
        """chi_p of the determinant of the p-adic lattice carrying this form"""
        result = 1
        for b in self.blocks:
            result *= b.eps
        return result

    def __str__(self) -> str:
        if not self.blocks:
            return "0"
        parts = []
        for b in self.blocks:
            sign = "+" if b.eps > 0 else "-"
            parts.append(f"{self.p ** b.scale}^{sign}{b.length}")
        return " ".join(parts)


class CaseTag(str, enum.Enum):
    """Which case of the discriminant-form splitting applies"""
    DIV1 = "div1"
    DIVP_A1 = "divp_a1"
    DIVP_A2PLUS = "divp_a2plus"


class ComplementDecomposition(BaseModel):
    """q_{<k>^perp} = -q + r for a primitive vector of square k"""
    model_config = ConfigDict(frozen=True)

    q: TorsionForm
    r: TorsionForm
    case_tag: CaseTag
    j: int = Field(..., ge=1, description="order |q| including the prime-to-p part")

    @property
    def complement_form(self) -> TorsionForm:
        return self.q.negated() + self.r
