"""
Exact truncated q-series with exponents counted in 1/24 units
"""

from typing import Iterator, List, Tuple, Union

import numpy as np

from app.utils.errors import ConsistencyError

# Common denominator of the exponents of theta2 (quarters) and eta (24ths)
EXPONENT_DENOMINATOR = 24


class QSeries:
    """
    A truncated q-series: coefficient i is that of q^(i/24), for i < precision.

    Coefficients are int64; products are exact as long as they fit, which
    holds for every theta and eta product used here.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, precision: int = None):
        array = np.asarray(coeffs, dtype=np.int64)
        if precision is not None:
            if len(array) > precision:
                array = array[:precision]
            elif len(array) < precision:
                array = np.pad(array, (0, precision - len(array)))
        array = array.copy()
        array.flags.writeable = False
        self.coeffs = array

    @classmethod
    def from_terms(cls, terms: Iterator[Tuple[int, int]], precision: int) -> "QSeries":
        """Accumulate (exponent in 24ths, coefficient) pairs; terms at or beyond precision are dropped"""
        coeffs = np.zeros(precision, dtype=np.int64)
        for exponent, value in terms:
            if 0 <= exponent < precision:
                coeffs[exponent] += value
        return cls(coeffs)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __repr__(self):
        return f"QSeries(precision={self.precision}, terms={self.items()[:5]}...)"

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.precision == other.precision and bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.precision, self.coeffs.tobytes()))

    def coefficient(self, exponent: int) -> int:
        if not 0 <= exponent < self.precision:
            raise IndexError(f"exponent {exponent}/24 is outside the known range")
        return int(self.coeffs[exponent])

    def items(self) -> List[Tuple[int, int]]:
        """Nonzero (exponent in 24ths, coefficient) pairs"""
        return [(int(i), int(self.coeffs[i])) for i in np.flatnonzero(self.coeffs)]

    def _aligned(self, other: "QSeries") -> Tuple[np.ndarray, np.ndarray, int]:
        precision = min(self.precision, other.precision)
        return self.coeffs[:precision], other.coeffs[:precision], precision

    def __add__(self, other: "QSeries") -> "QSeries":
        left, right, _ = self._aligned(other)
        return QSeries(left + right)

    def __sub__(self, other: "QSeries") -> "QSeries":
        left, right, _ = self._aligned(other)
        return QSeries(left - right)

    def __neg__(self) -> "QSeries":
        return QSeries(-self.coeffs)

    def __mul__(self, other: Union["QSeries", int]) -> "QSeries":
        if isinstance(other, (int, np.integer)):
            return QSeries(self.coeffs * int(other))
        left, right, precision = self._aligned(other)
        return QSeries(np.convolve(left, right)[:precision])

    def __rmul__(self, other: int) -> "QSeries":
        return self.__mul__(other)

    def rescale(self, factor: int, precision: int = None) -> "QSeries":
        """Substitute q -> q^factor; the known range grows by the same factor"""
        if factor < 1:
            raise ValueError("rescale factor must be positive")
        target = self.precision * factor if precision is None else precision
        coeffs = np.zeros(target, dtype=np.int64)
        usable = min(self.precision, -(-target // factor))
        coeffs[: usable * factor : factor] = self.coeffs[:usable]
        return QSeries(coeffs)

    def integral_coefficients(self) -> List[int]:
        """Coefficients of q^0, q^1, ... ; every other exponent must vanish"""
        stray = np.flatnonzero(self.coeffs)
        stray = stray[stray % EXPONENT_DENOMINATOR != 0]
        if len(stray):
            raise ConsistencyError(f"nonintegral exponent {int(stray[0])}/24 has a nonzero coefficient")
        return [int(c) for c in self.coeffs[::EXPONENT_DENOMINATOR]]
