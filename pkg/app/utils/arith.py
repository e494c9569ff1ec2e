"""
Exact number-theoretic primitives shared by all services

Everything here is integer or Fraction arithmetic; nothing rounds.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator, List, Tuple

from sympy import factorint, isprime, legendre_symbol, mobius, multiplicity

from app.utils.errors import ArgumentError


@dataclass(frozen=True)
class Factorization:
    """Prime decomposition as (prime, exponent) pairs sorted by prime"""
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def value(self) -> int:
        result = 1
        for prime, exponent in self.pairs:
            result *= prime ** exponent
        return result

    @property
    def primes(self) -> List[int]:
        return [prime for prime, _ in self.pairs]

    def exponent(self, prime: int) -> int:
        for q, e in self.pairs:
            if q == prime:
                return e
        return 0


def is_odd_prime(p: int) -> bool:
    return isinstance(p, int) and p > 2 and bool(isprime(p))


def require_odd_prime(p: int) -> int:
    """Return p unchanged or raise ArgumentError"""
    if not is_odd_prime(p):
        raise ArgumentError(f"{p} is not an odd prime")
    return p


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Factor a positive integer"""
    if n < 1:
        raise ArgumentError(f"cannot factor {n}; a positive integer is required")
    return Factorization(tuple(sorted((int(q), int(e)) for q, e in factorint(n).items())))


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p"""
    require_odd_prime(p)
    return int(legendre_symbol(a % p, p))


def valuation(n: int, p: int) -> int:
    """Largest e with p^e dividing n"""
    if n == 0:
        raise ArgumentError("valuation of 0 is undefined")
    if p < 2 or not isprime(p):
        raise ArgumentError(f"{p} is not a prime")
    return int(multiplicity(p, abs(n)))


def split_prime_power(n: int, p: int) -> Tuple[int, int]:
    """Write n = n' * p^a with p not dividing n'; returns (n', a)"""
    a = valuation(n, p)
    return n // p ** a, a


def moebius(n: int) -> int:
    """Möbius function"""
    if n < 1:
        raise ArgumentError(f"moebius is defined for n >= 1, got {n}")
    return int(mobius(n))


def unit_character(s: int, p: int) -> int:
    """chi_p(s) = (s'/p) where s = s' p^a with p not dividing s'"""
    unit, _ = split_prime_power(s, p)
    return legendre(unit, p)


def minus_one_power(p: int, exponent: int) -> int:
    """(-1/p)^exponent"""
    return legendre(-1, p) ** (exponent % 2)


def square_divisors(n: int) -> Iterator[int]:
    """All d >= 1 with d^2 dividing n, ascending"""
    for d in range(1, isqrt(n) + 1):
        if n % (d * d) == 0:
            yield d


def content(values) -> int:
    """Nonnegative gcd of a sequence of integers"""
    result = 0
    for v in values:
        result = gcd(result, int(v))
    return result


def floor_sqrt(t: Fraction) -> int:
    """floor(sqrt(t)) for a nonnegative rational t"""
    if t < 0:
        raise ArgumentError("square root of a negative number")
    return isqrt(t.numerator // t.denominator)
