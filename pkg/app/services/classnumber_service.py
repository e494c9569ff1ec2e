"""
Relative class numbers of cyclotomic fields and conjugacy-class counting
"""

import logging
from fractions import Fraction
from functools import lru_cache

from sympy import Poly, primitive_root, symbols

from app.utils.arith import require_odd_prime
from app.utils.errors import ArgumentError, ConsistencyError, UnsupportedRangeError
from config import settings

logger = logging.getLogger(__name__)

_x = symbols("x")

# Unimodular genera whose invariant lattices are classified, keyed by signature
CLASSIFIED_AMBIENT_GENERA = {(3, 3), (4, 4), (5, 5), (3, 19), (4, 20), (5, 21)}

# (l+, l-, p, n, m) -> number of isometry classes in the genus of L^f, where it is not 1
INVARIANT_GENUS_CLASSES = {(4, 20, 23, 1, 0): 2}


@lru_cache(maxsize=None)
def _relative_class_number(p: int) -> int:
    # h^- = 2p * prod over odd characters chi of (-B_{1,chi} / 2), with
    # B_{1,chi} = (1/p) sum_a chi(a) a. Writing chi(g^i) = w^i for a root w of
    # x^m + 1 turns the product of the sums into Res(x^m + 1, G) where
    # G(x) = sum_{i<m} (2 g^i mod p - p) x^i.
    m = (p - 1) // 2
    g = int(primitive_root(p))
    residues = [pow(g, i, p) for i in range(m)]
    coefficients = [2 * r - p for r in residues]
    numerator_poly = Poly(list(reversed(coefficients)), _x)
    cyclotomic_half = Poly(_x ** m + 1, _x)
    resultant = int(cyclotomic_half.resultant(numerator_poly))

    value = Fraction(2 * p * (-1) ** m * resultant, (2 * p) ** m)
    if value.denominator != 1 or value <= 0:
        logger.warning("non-integral relative class number %s for p=%d", value, p)
        raise ConsistencyError(f"relative class number for p={p} evaluated to {value}")
    logger.debug("h^-(%d) = %d", p, value.numerator)
    return value.numerator


class ClassNumberService:
    """Relative class numbers h^-(Q(zeta_p)) and the conjugacy-class product"""

    @staticmethod
    def relative_class_number(p: int) -> int:
        require_odd_prime(p)
        if p > settings.HMINUS_MAX_P:
            raise UnsupportedRangeError(
                f"relative class numbers are supported for p <= {settings.HMINUS_MAX_P}, got {p}"
            )
        return _relative_class_number(p)

    @staticmethod
    def invariant_genus_class_count(l_plus: int, l_minus: int, p: int, n: int, m: int) -> int:
        """Isometry classes in the genus of L^f for an isometry of a classified unimodular genus"""
        if (l_plus, l_minus) not in CLASSIFIED_AMBIENT_GENERA:
            raise UnsupportedRangeError(
                f"invariant lattices are classified only in II_(l+,l-) for "
                f"(l+,l-) in {sorted(CLASSIFIED_AMBIENT_GENERA)}"
            )
        return INVARIANT_GENUS_CLASSES.get((l_plus, l_minus, p, n, m), 1)

    @staticmethod
    def conjugacy_class_count(p: int, signature_count: int, invariant_classes: int) -> int:
        if signature_count < 1 or invariant_classes < 1:
            raise ArgumentError("signature and invariant class counts must be positive")
        return signature_count * invariant_classes * ClassNumberService.relative_class_number(p)
