"""
Brute-force lattice oracle: vector enumeration, small isometry groups, orbits
"""

import logging
import math
from collections import OrderedDict
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Set, Tuple

import numpy as np
from sympy import Matrix, eye

from app.schemas.lattice import GramLattice, GroupKind, IntMatrix, IntVector, VectorOrbit
from app.utils.arith import content, floor_sqrt
from app.utils.errors import ArgumentError, UnsupportedRangeError
from config import settings

logger = logging.getLogger(__name__)

MAX_GROUP_RANK = 2


def _completed_squares(lattice: GramLattice) -> Tuple[List[Fraction], List[List[Fraction]]]:
    """Exact LDL^T: x^T G x = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2"""
    size = lattice.rank
    q = [[Fraction(lattice.gram[i][j]) for j in range(size)] for i in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, size):
            for l in range(k, size):
                q[k][l] -= q[k][i] * q[i][l]
    diagonal = [q[i][i] for i in range(size)]
    return diagonal, q


def _search(
    index: int,
    vector: List[int],
    remaining: Fraction,
    diagonal: List[Fraction],
    mu: List[List[Fraction]],
) -> Iterator[IntVector]:
    size = len(vector)
    center = -sum((mu[index][j] * vector[j] for j in range(index + 1, size)), Fraction(0))
    radius = floor_sqrt(remaining / diagonal[index])
    for value in range(math.floor(center) - radius - 1, math.ceil(center) + radius + 2):
        offset = value - center
        used = diagonal[index] * offset * offset
        if used > remaining:
            continue
        vector[index] = value
        if index == 0:
            yield tuple(vector)
        else:
            yield from _search(index - 1, vector, remaining - used, diagonal, mu)
    vector[index] = 0


# lattice -> (bound, vectors of norm <= bound by norm); least recently used lattices are evicted
_enumeration_cache: "OrderedDict[GramLattice, Tuple[int, Dict[int, Tuple[IntVector, ...]]]]" = OrderedDict()


def _short_vectors(lattice: GramLattice, bound: int) -> Dict[int, Tuple[IntVector, ...]]:
    cached = _enumeration_cache.get(lattice)
    if cached is not None and cached[0] >= bound:
        _enumeration_cache.move_to_end(lattice)
        return cached[1]

    diagonal, mu = _completed_squares(lattice)
    buckets: Dict[int, List[IntVector]] = {}
    start = [0] * lattice.rank
    for vector in _search(lattice.rank - 1, start, Fraction(bound), diagonal, mu):
        norm = lattice.norm(vector)
        if 0 < norm <= bound:
            buckets.setdefault(norm, []).append(vector)
    logger.debug("enumerated %d vectors of norm <= %d", sum(map(len, buckets.values())), bound)
    result = {norm: tuple(sorted(vectors)) for norm, vectors in buckets.items()}
    _enumeration_cache[lattice] = (bound, result)
    _enumeration_cache.move_to_end(lattice)
    while len(_enumeration_cache) > max(1, settings.ENUMERATION_CACHE_SIZE):
        _enumeration_cache.popitem(last=False)
    return result


@lru_cache(maxsize=64)
def _isometry_group(lattice: GramLattice) -> Tuple[IntMatrix, ...]:
    if lattice.rank == 1:
        return (((-1,),), ((1,),))
    first = LatticeService.enumerate_vectors(lattice, lattice.gram[0][0])
    second = LatticeService.enumerate_vectors(lattice, lattice.gram[1][1])
    elements = []
    for v1 in first:
        for v2 in second:
            if lattice.inner(v1, v2) == lattice.gram[0][1]:
                elements.append(((v1[0], v2[0]), (v1[1], v2[1])))
    return tuple(sorted(elements))


def _apply(matrix: IntMatrix, vector: IntVector) -> IntVector:
    return tuple(int(x) for x in np.array(matrix, dtype=object).dot(np.array(vector, dtype=object)))


def _primitive_integral(vector) -> IntVector:
    """Primitive integral vector on the line spanned by a rational vector"""
    rationals = [Fraction(int(x.p), int(x.q)) for x in vector]
    scale = math.lcm(*(x.denominator for x in rationals))
    integral = [int(x * scale) for x in rationals]
    divisor = content(integral)
    return tuple(x // divisor for x in integral)


class LatticeService:
    """Exact enumeration and orbit decomposition for positive definite lattices"""

    @staticmethod
    def is_positive_definite(lattice: GramLattice) -> bool:
        gram = Matrix(lattice.gram)
        return all(gram[:i, :i].det() > 0 for i in range(1, lattice.rank + 1))

    @staticmethod
    def _require_definite(lattice: GramLattice) -> None:
        if not LatticeService.is_positive_definite(lattice):
            raise UnsupportedRangeError("vector enumeration needs a positive definite lattice")

    @staticmethod
    def short_vectors(lattice: GramLattice, bound: int) -> Dict[int, Tuple[IntVector, ...]]:
        """All nonzero vectors with norm <= bound, bucketed by norm"""
        LatticeService._require_definite(lattice)
        if bound > settings.MAX_ENUMERATION_NORM:
            raise UnsupportedRangeError(
                f"norm bound {bound} exceeds the enumeration cap {settings.MAX_ENUMERATION_NORM}"
            )
        buckets = _short_vectors(lattice, bound)
        return {norm: vectors for norm, vectors in buckets.items() if norm <= bound}

    @staticmethod
    def enumerate_vectors(lattice: GramLattice, norm: int) -> List[IntVector]:
        """All x with x^T G x = norm, lexicographically sorted"""
        if norm <= 0:
            raise ArgumentError(f"norm must be positive, got {norm}")
        return list(LatticeService.short_vectors(lattice, norm).get(norm, ()))

    @staticmethod
    def isometry_group(lattice: GramLattice) -> List[IntMatrix]:
        """All integral T with T^T G T = G, for positive definite rank <= 2"""
        LatticeService._require_definite(lattice)
        if lattice.rank > MAX_GROUP_RANK:
            raise UnsupportedRangeError(f"isometry groups are computed for rank <= {MAX_GROUP_RANK}")
        return list(_isometry_group(lattice))

    @staticmethod
    def special_orthogonal(group: List[IntMatrix]) -> List[IntMatrix]:
        return [g for g in group if Matrix(g).det() == 1]

    @staticmethod
    def group(lattice: GramLattice, kind: GroupKind) -> List[IntMatrix]:
        full = LatticeService.isometry_group(lattice)
        return full if kind == GroupKind.O else LatticeService.special_orthogonal(full)

    @staticmethod
    def vector_divisibility(lattice: GramLattice, x: IntVector) -> int:
        """Positive generator of the ideal b(x, L)"""
        if not any(x):
            raise ArgumentError("divisibility of the zero vector is undefined")
        products = lattice.matrix.dot(np.array(x, dtype=np.int64))
        return int(np.gcd.reduce(np.abs(products)))

    @staticmethod
    def orbit_decomposition(
        lattice: GramLattice, group: List[IntMatrix], norm: int, primitive_only: bool = True
    ) -> List[VectorOrbit]:
        """Partition the (primitive) vectors of a norm into orbits of group"""
        vectors = LatticeService.enumerate_vectors(lattice, norm)
        if primitive_only:
            vectors = [v for v in vectors if content(v) == 1]
        unvisited: Set[IntVector] = set(vectors)
        orbits: List[VectorOrbit] = []
        for vector in vectors:
            if vector not in unvisited:
                continue
            orbit = {_apply(g, vector) for g in group}
            unvisited -= orbit
            orbits.append(
                VectorOrbit(
                    representative=vector,
                    size=len(orbit),
                    norm=norm,
                    divisibility=LatticeService.vector_divisibility(lattice, vector),
                )
            )
        return orbits

    @staticmethod
    def fixed_norm_set(lattice: GramLattice, group: List[IntMatrix], bound: Optional[int] = None) -> List[int]:
        """S_G: the values v^2/2 for primitive generators v of fixed lines ker(1 - g), g != 1"""
        LatticeService._require_definite(lattice)
        if lattice.rank > MAX_GROUP_RANK:
            raise UnsupportedRangeError(f"fixed lines are computed for rank <= {MAX_GROUP_RANK}")
        identity = eye(lattice.rank)
        values = set()
        for g in group:
            kernel = (Matrix(g) - identity).nullspace()
            if len(kernel) != 1:
                continue
            generator = _primitive_integral(list(kernel[0]))
            half_norm = Fraction(lattice.norm(generator), 2)
            if bound is None or half_norm <= bound:
                values.add(int(half_norm) if half_norm.denominator == 1 else half_norm)
        return sorted(values)
