"""
Theta and eta expansions and orbit series of the definite rank two lattices
"""

import logging
from typing import List, Sequence

import numpy as np

from app.models.definite import ETA_CORRECTED, THETA_SCALE, gram_lattice
from app.schemas.lattice import DefiniteLatticeId, GroupKind, OrbitSeries
from app.services.lattice_service import LatticeService
from app.utils.arith import moebius, square_divisors
from app.utils.errors import ArgumentError, ConsistencyError
from app.utils.qseries import EXPONENT_DENOMINATOR, QSeries

logger = logging.getLogger(__name__)


def _whole_precision(prec: int) -> int:
    """24ths needed to know every coefficient of q^0 .. q^prec"""
    return EXPONENT_DENOMINATOR * (prec + 1)


class ThetaService:
    """q-series constructors and the Möbius inversion of representation numbers"""

    @staticmethod
    def theta3(precision: int) -> QSeries:
        """sum over m of q^(m^2)"""
        if precision <= 0:
            raise ArgumentError("precision must be positive")
        terms = [(0, 1)]
        m = 1
        while EXPONENT_DENOMINATOR * m * m < precision:
            terms.append((EXPONENT_DENOMINATOR * m * m, 2))
            m += 1
        return QSeries.from_terms(iter(terms), precision)

    @staticmethod
    def theta2(precision: int) -> QSeries:
        """sum over m of q^((m + 1/2)^2)"""
        if precision <= 0:
            raise ArgumentError("precision must be positive")
        terms = []
        odd = 1
        while 6 * odd * odd < precision:
            terms.append((6 * odd * odd, 2))
            odd += 2
        return QSeries.from_terms(iter(terms), precision)

    @staticmethod
    def eta(precision: int) -> QSeries:
        """q^(1/24) times the product of (1 - q^n) over n >= 1"""
        if precision <= 0:
            raise ArgumentError("precision must be positive")
        whole = (precision - 1) // EXPONENT_DENOMINATOR + 1
        product = np.zeros(whole, dtype=np.int64)
        product[0] = 1
        for n in range(1, whole):
            product[n:] = product[n:] - product[:-n]
        return QSeries.from_terms(
            ((EXPONENT_DENOMINATOR * i + 1, int(c)) for i, c in enumerate(product)), precision
        )

    @staticmethod
    def rescale(series: QSeries, factor: int) -> QSeries:
        return series.rescale(factor)

    @staticmethod
    def theta_series(lattice_id: DefiniteLatticeId, prec: int) -> QSeries:
        """Theta series of a definite rank two lattice, known through q^prec"""
        if prec < 1:
            raise ArgumentError("prec must be at least 1")
        precision = _whole_precision(prec)
        scale = THETA_SCALE[lattice_id]

        theta3 = ThetaService.theta3(precision)
        theta2 = ThetaService.theta2(precision)
        series = theta3 * theta3.rescale(scale, precision) + theta2 * theta2.rescale(scale, precision)
        if lattice_id in ETA_CORRECTED:
            eta = ThetaService.eta(precision)
            series = series - 2 * (eta * eta.rescale(scale, precision))
        return series

    @staticmethod
    def theta_coefficients(lattice_id: DefiniteLatticeId, prec: int) -> List[int]:
        """a(0), ..., a(prec) with a(k) the number of vectors of norm 2k"""
        return ThetaService.theta_series(lattice_id, prec).integral_coefficients()[: prec + 1]

    @staticmethod
    def primitive_counts(a: Sequence[int]) -> List[int]:
        """r(n) = sum over d^2 | n of mu(d) a(n/d^2); r(0) = 0"""
        if not a or a[0] != 1:
            raise ArgumentError("the sequence must start with a(0) = 1")
        r = [0] * len(a)
        for n in range(1, len(a)):
            r[n] = sum(moebius(d) * a[n // (d * d)] for d in square_divisors(n))
        return r

    @staticmethod
    def representation_counts(r: Sequence[int]) -> List[int]:
        """Inverse of primitive_counts: a(n) = sum over d^2 | n of r(n/d^2), a(0) = 1"""
        a = [0] * len(r)
        if a:
            a[0] = 1
        for n in range(1, len(r)):
            a[n] = sum(r[n // (d * d)] for d in square_divisors(n))
        return a

    @staticmethod
    def orbit_series(lattice_id: DefiniteLatticeId, group: GroupKind, kmax: int) -> OrbitSeries:
        """b(k) for k = 1..kmax by orbit enumeration, checked against r(k)/|G| off S_G"""
        if kmax < 1:
            raise ArgumentError("kmax must be at least 1")
        lattice = gram_lattice(lattice_id)
        elements = LatticeService.group(lattice, group)
        exceptional = LatticeService.fixed_norm_set(lattice, elements, bound=kmax)
        LatticeService.short_vectors(lattice, 2 * kmax)

        counts = [
            len(LatticeService.orbit_decomposition(lattice, elements, 2 * k, primitive_only=True))
            for k in range(1, kmax + 1)
        ]

        primitive = ThetaService.primitive_counts(ThetaService.theta_coefficients(lattice_id, kmax))
        for k in range(1, kmax + 1):
            if k not in exceptional and counts[k - 1] * len(elements) != primitive[k]:
                logger.warning("orbit count mismatch for %s at k=%d", lattice_id.value, k)
                raise ConsistencyError(
                    f"b({k}) * |G| = {counts[k - 1] * len(elements)} but r({k}) = {primitive[k]}"
                )
        return OrbitSeries(
            lattice=lattice_id,
            group=group,
            group_order=len(elements),
            counts=counts,
            exceptional=[int(k) for k in exceptional],
        )
