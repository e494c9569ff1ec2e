"""
Primitive vectors in p-elementary lattices, A2(-1) embeddings and U summands
"""

import logging
from typing import List, Tuple

from app.schemas.embedding import EmbeddingQuery, ExistenceVerdict, OrbitReport
from app.schemas.genus import GenusSymbol, Parity
from app.services.discform_service import DiscriminantFormService
from app.utils.arith import factorize, legendre, minus_one_power, require_odd_prime, split_prime_power
from app.utils.errors import ArgumentError

logger = logging.getLogger(__name__)


def _check_query(query: EmbeddingQuery) -> None:
    if query.k % 2:
        raise ArgumentError(f"k must be even, got {query.k}")
    if query.div not in (1, query.genus.p):
        raise ArgumentError(f"divisibility must be 1 or {query.genus.p}, got {query.div}")


def _spinor_prime_sets(j: int, p: int) -> Tuple[List[int], List[int]]:
    """Primes l != p split by the parity of v_l(j); 2 goes the other way round"""
    odd_part: List[int] = []
    even_part: List[int] = []
    for prime, exponent in factorize(j).pairs:
        if prime == p:
            continue
        if prime == 2:
            (odd_part if exponent % 2 == 0 else even_part).append(prime)
        elif exponent % 2:
            odd_part.append(prime)
        else:
            even_part.append(prime)
    return odd_part, even_part


class EmbeddingService:
    """Existence and orbit counts of primitive embeddings"""

    @staticmethod
    def vector_exists(query: EmbeddingQuery) -> ExistenceVerdict:
        """Primitive x in L with x^2 = k and div(x) = div"""
        _check_query(query)
        genus = query.genus
        p, n, eps = genus.p, genus.n, genus.eps
        rank = genus.rank
        if genus.l_plus == 0:
            return ExistenceVerdict.NO

        unit, a = split_prime_power(query.k, p)
        signature_ok = (genus.l_plus - genus.l_minus) % 8 == 0

        if query.div == 1:
            holds = (
                (a == 0 and n < rank - 1)
                or (a == 0 and n == rank - 1 and minus_one_power(p, genus.l_minus) * legendre(unit, p) == eps)
                or (a > 0 and n < rank - 2)
                or (a > 0 and n == rank - 2 and signature_ok)
            )
        else:
            holds = (
                (a == 1 and n > 1)
                or (a == 1 and n == 1 and legendre(unit, p) == eps)
                or (a > 1 and n > 2)
                or (a > 1 and n == 2 and signature_ok)
            )

        if not holds:
            return ExistenceVerdict.NO
        if genus.l_plus == 1 or genus.l_minus == 0 or rank < 3:
            return ExistenceVerdict.NECESSARY_ONLY
        return ExistenceVerdict.YES

    @staticmethod
    def vector_orbits(query: EmbeddingQuery) -> OrbitReport:
        """Number of O(L)-orbits of primitive vectors of square k and divisibility div"""
        exists = EmbeddingService.vector_exists(query)
        if exists == ExistenceVerdict.NO:
            return OrbitReport(exists=exists, orbit_count=0)

        genus = query.genus
        if genus.l_plus < 2 or genus.l_minus < 1 or genus.rank < 4:
            return OrbitReport(exists=exists, orbit_count="unknown")

        p = genus.p
        decomposition = DiscriminantFormService.complement_disc_form(
            query.k, p, genus.n, genus.eps, query.div
        )
        j = decomposition.j if decomposition is not None else query.k
        l1_set, l0_set = _spinor_prime_sets(j, p)

        unit, a = split_prime_power(query.k, p)
        special = (
            genus.rank == 4
            and a >= 2
            and p ** genus.n == p * query.div ** 2
            and legendre(-2 * unit, p) == 1
            and (p % 4 == 1 or any(legendre(ell, p) == -1 for ell in l1_set))
        )
        if special:
            logger.debug("two orbits for k=%d in %s", query.k, genus)
        return OrbitReport(
            exists=exists,
            orbit_count=2 if special else 1,
            special_case=special,
            l1_set=l1_set,
            l0_set=l0_set,
        )

    @staticmethod
    def a2_embeds(l_minus: int, p: int, eps: int, n: int, div: int) -> bool:
        """Primitive A2(-1) of divisibility div in a lattice of genus II_(3,l-) p^(eps n)"""
        require_odd_prime(p)
        if l_minus <= 0 or l_minus % 2 == 0:
            raise ArgumentError(f"l- must be odd and positive, got {l_minus}")
        if div not in (1, 3):
            raise ArgumentError(f"A2(-1) has divisibility 1 or 3, got {div}")
        if l_minus == 1:
            logger.debug("A2(-1) conditions at l- = 1 are applied as exact but not fully derived")
        corank = 3 + l_minus - n

        if div == 1:
            if p != 3:
                return corank > 2 or (corank == 2 and eps == legendre(-3, p))
            return corank > 3 or (corank == 3 and eps == -1)

        if p != 3:
            return False
        return (
            (n == 1 and eps == -1)
            or (n > 1 and corank > 1)
            or (n > 1 and corank == 1 and eps == 1)
        )

    @staticmethod
    def contains_U(genus: GenusSymbol) -> bool:
        """Whether the lattice in this (even, indefinite, unique) genus splits off a hyperbolic plane"""
        if genus.parity != Parity.EVEN or not DiscriminantFormService.genus_exists(genus):
            raise ArgumentError(f"{genus} is not a nonempty even genus")
        if genus.l_plus < 1 or genus.l_minus < 1 or genus.n > genus.rank - 2:
            return False
        return DiscriminantFormService.symbol_exists(
            Parity.EVEN, genus.l_plus - 1, genus.l_minus - 1, genus.p, genus.eps, genus.n
        )
