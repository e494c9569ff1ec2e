"""
Odd prime order isometries of unimodular lattices and the K3 specialization
"""

import logging
from typing import Iterator, List, Optional, Tuple

from app.schemas.genus import GenusSymbol, Parity
from app.schemas.isometry import IsometryInvariants, SignatureCollection
from app.services.classnumber_service import ClassNumberService
from app.services.discform_service import DiscriminantFormService
from app.utils.arith import is_odd_prime, minus_one_power
from app.utils.errors import ArgumentError, DomainPreconditionError, UnsupportedRangeError

logger = logging.getLogger(__name__)

# Signature of H^2 of a K3 surface and the coinvariant s+ of a non-symplectic isometry
K3_SIGNATURE = (3, 19)
K3_COINVARIANT_S_PLUS = 2


def _compositions(total: int, parts: int, cap: int) -> Iterator[Tuple[int, ...]]:
    """Ordered ways to write total as parts integers in [0, cap], ascending lexicographically"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(0, min(total, cap) + 1):
        if total - first > cap * (parts - 1):
            continue
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest


class UnimodularService:
    """Existence, signature collections and conjugacy counts"""

    @staticmethod
    def isometry_exists(inv: IsometryInvariants) -> bool:
        """Existence of a unimodular lattice in the genus with an isometry of these invariants"""
        p, n = inv.p, inv.n
        if not is_odd_prime(p):
            return False
        if min(inv.l_plus, inv.l_minus, inv.s_plus, inv.s_minus, n) < 0:
            return False
        rank = inv.l_plus + inv.l_minus
        coinvariant = inv.coinvariant_rank

        if inv.parity == Parity.ODD:
            if rank - coinvariant <= 0:
                return False
        elif (inv.l_plus - inv.l_minus) % 8:
            return False

        if coinvariant == 0 or inv.m is None:
            return False
        if inv.s_plus % 2 or inv.s_minus % 2:
            return False
        if inv.s_plus > inv.l_plus or inv.s_minus > inv.l_minus:
            return False
        if coinvariant + n > rank:
            return False
        if (n == 0 or n == rank - coinvariant) and (inv.s_plus - inv.s_minus) % 8:
            return False
        return True

    @staticmethod
    def fixed_point_free_exists(p: int, s_plus: int, s_minus: int, n: int, m: int) -> bool:
        """Existence of an even p-elementary lattice of discriminant p^n with a fixed point free isometry"""
        if not is_odd_prime(p) or min(s_plus, s_minus, n, m) < 0:
            return False
        if s_plus + s_minus != (n + 2 * m) * (p - 1):
            return False
        if s_plus % 2:
            return False
        if n == 0 and (s_plus - s_minus) % 8:
            return False
        return True

    @staticmethod
    def k3_exists(p: int, r: int, a: int) -> bool:
        """Existence of a K3 surface with a non-symplectic automorphism of order p and invariants (r, a)"""
        if r < 1:
            raise ArgumentError(f"r must be at least 1, got {r}")
        if not is_odd_prime(p) or p > 19:
            return False
        if (22 - r) % (p - 1):
            return False
        quotient = (22 - r) // (p - 1)
        if not 0 <= a <= min(r, quotient) or (a - quotient) % 2:
            return False
        if (a == 0 or a == r) and r % 8 != 2:
            return False
        return True

    @staticmethod
    def k3_invariants(p: int, r: int, a: int) -> IsometryInvariants:
        """The isometry of II_(3,19) behind a K3 triple (p, r, a)"""
        l_plus, l_minus = K3_SIGNATURE
        return IsometryInvariants(
            p=p,
            l_plus=l_plus,
            l_minus=l_minus,
            parity=Parity.EVEN,
            s_plus=K3_COINVARIANT_S_PLUS,
            s_minus=l_minus + 1 - r,
            n=a,
        )

    @staticmethod
    def enumerate_signature_collections(p: int, s_plus: int, s_minus: int) -> List[SignatureCollection]:
        """All collections (k_i+, k_i-) summing to (s+, s-) with constant k_i+ + k_i-"""
        if not is_odd_prime(p) or min(s_plus, s_minus) < 0 or s_plus % 2 or s_minus % 2:
            return []
        slots = (p - 1) // 2
        per_slot, remainder = divmod(s_plus + s_minus, slots)
        if remainder or per_slot % 2:
            return []

        collections = []
        for halves in _compositions(s_plus // 2, slots, per_slot // 2):
            pairs = tuple((2 * h, per_slot - 2 * h) for h in halves)
            collections.append(SignatureCollection(slots=pairs))
        collections.sort(key=lambda c: c.flattened())
        return collections

    @staticmethod
    def coinvariant_genus(inv: IsometryInvariants) -> Optional[GenusSymbol]:
        """Genus II_(s+,s-) p^(eps n) of the coinvariant lattice"""
        if not UnimodularService.isometry_exists(inv):
            return None
        return DiscriminantFormService.even_genus(inv.s_plus, inv.s_minus, inv.p, inv.n)

    @staticmethod
    def invariant_genus(inv: IsometryInvariants) -> Optional[GenusSymbol]:
        """Genus of the invariant lattice; q_{L^f} is -q_{L_f} since L is unimodular"""
        coinvariant = UnimodularService.coinvariant_genus(inv)
        if coinvariant is None:
            return None
        l_plus, l_minus = inv.invariant_signature
        eps = coinvariant.eps * minus_one_power(inv.p, inv.n)
        return GenusSymbol(parity=inv.parity, l_plus=l_plus, l_minus=l_minus, p=inv.p, eps=eps, n=inv.n)

    @staticmethod
    def count_conjugacy_classes(inv: IsometryInvariants) -> int:
        """Conjugacy classes of isometries sharing signature collection data and invariant lattice genus

        Valid when the coinvariant lattice is indefinite or of rank p - 1.
        """
        if not UnimodularService.isometry_exists(inv):
            raise DomainPreconditionError("no isometry with these invariants exists")
        indefinite = inv.s_plus > 0 and inv.s_minus > 0
        if not indefinite and inv.coinvariant_rank != inv.p - 1:
            raise UnsupportedRangeError(
                "conjugacy classes are counted only for indefinite coinvariant lattices or rank p - 1"
            )
        collections = UnimodularService.enumerate_signature_collections(inv.p, inv.s_plus, inv.s_minus)
        classes = ClassNumberService.invariant_genus_class_count(
            inv.l_plus, inv.l_minus, inv.p, inv.n, inv.m
        )
        logger.debug("%d signature collections, %d invariant classes", len(collections), classes)
        return ClassNumberService.conjugacy_class_count(inv.p, len(collections), classes)
