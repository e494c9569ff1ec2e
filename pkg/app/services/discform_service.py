"""
Existence of p-elementary genera and discriminant-form bookkeeping
"""

import logging
from typing import Optional

from app.schemas.genus import (
    CaseTag,
    ComplementDecomposition,
    EpsChoice,
    GenusSymbol,
    Parity,
    TorsionForm,
)
from app.utils.arith import legendre, minus_one_power, require_odd_prime, split_prime_power
from app.utils.errors import ArgumentError

logger = logging.getLogger(__name__)


class DiscriminantFormService:
    """Genus existence, the sign congruence and complement discriminant forms"""

    @staticmethod
    def symbol_exists(parity: Parity, l_plus: int, l_minus: int, p: int, eps: int, n: int) -> bool:
        """genus_exists on raw invariants; false instead of raising on bad input"""
        if min(l_plus, l_minus, n) < 0 or eps not in (1, -1):
            return False
        rank = l_plus + l_minus
        if n > rank or (n == 0 and eps != 1):
            return False

        if parity == Parity.ODD:
            if rank == 0:
                return False
            if rank == n:
                return eps == minus_one_power(p, l_minus)
            return True

        if (l_plus - l_minus - (2 * eps - 2 - (p - 1) * n)) % 8 != 0:
            return False
        if rank == n and eps != minus_one_power(p, l_minus):
            return False
        return True

    @staticmethod
    def genus_exists(genus: GenusSymbol) -> bool:
        return DiscriminantFormService.symbol_exists(
            genus.parity, genus.l_plus, genus.l_minus, genus.p, genus.eps, genus.n
        )

    @staticmethod
    def forced_eps(parity: Parity, l_plus: int, l_minus: int, p: int, n: int) -> EpsChoice:
        """The sign(s) of eps for which the genus is nonempty"""
        require_odd_prime(p)
        candidates = (1,) if n == 0 else (1, -1)
        valid = [
            eps for eps in candidates
            if DiscriminantFormService.symbol_exists(parity, l_plus, l_minus, p, eps, n)
        ]
        if len(valid) == 2:
            return EpsChoice.BOTH
        if not valid:
            return EpsChoice.NONE
        return EpsChoice.PLUS if valid[0] == 1 else EpsChoice.MINUS

    @staticmethod
    def even_genus(l_plus: int, l_minus: int, p: int, n: int) -> Optional[GenusSymbol]:
        """The unique nonempty even genus with these invariants, if any"""
        choice = DiscriminantFormService.forced_eps(Parity.EVEN, l_plus, l_minus, p, n)
        if choice.sign is None:
            return None
        return GenusSymbol(parity=Parity.EVEN, l_plus=l_plus, l_minus=l_minus, p=p, eps=choice.sign, n=n)

    @staticmethod
    def complement_disc_form(k: int, p: int, n: int, eps: int, div: int) -> Optional[ComplementDecomposition]:
        """Split q_{<k>^perp} = -q + r for a primitive x of square k and divisibility div

        q_L is the discriminant form p^(eps n) of the ambient lattice. q and r
        hold p-parts only; the full order |q| is carried in j, which is k except
        for div = p with v_p(k) = 1, where it is k / p.
        """
        if k <= 0 or k % 2:
            raise ArgumentError(f"k must be a positive even integer, got {k}")
        require_odd_prime(p)
        if div not in (1, p):
            raise ArgumentError(f"divisibility must be 1 or {p}, got {div}")

        unit, a = split_prime_power(k, p)
        q_k = TorsionForm.cyclic(p, k)
        q_l = TorsionForm.elementary(p, n, eps)

        if div == 1:
            return ComplementDecomposition(q=q_k, r=q_l, case_tag=CaseTag.DIV1, j=k)

        if a == 0:
            return None

        if a == 1:
            delta = legendre(unit, p)
            q = q_k.strip_w(1, delta)
            r = q_l.strip_w(1, delta)
            if q is None or r is None:
                logger.debug("w_%s,1 does not split off q_L = %s", p, q_l)
                return None
            return ComplementDecomposition(q=q, r=r, case_tag=CaseTag.DIVP_A1, j=k // p)

        r = q_l.strip_u(1)
        if r is None:
            logger.debug("u_%s,1 does not split off q_L = %s", p, q_l)
            return None
        return ComplementDecomposition(q=q_k, r=r, case_tag=CaseTag.DIVP_A2PLUS, j=k)
