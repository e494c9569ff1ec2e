"""
Tests for the exact arithmetic primitives
"""

import warnings
from fractions import Fraction

import pytest

from app.utils.arith import (
    content,
    factorize,
    floor_sqrt,
    is_odd_prime,
    legendre,
    minus_one_power,
    moebius,
    split_prime_power,
    square_divisors,
    unit_character,
    valuation,
)
from app.utils.errors import ArgumentError


class TestFactorization:

    def test_factorize_sorted_pairs(self):
        f = factorize(360)
        assert f.pairs == ((2, 3), (3, 2), (5, 1))
        assert f.value == 360
        assert f.primes == [2, 3, 5]
        assert f.exponent(3) == 2
        assert f.exponent(7) == 0

    def test_factorize_one(self):
        assert factorize(1).pairs == ()
        assert factorize(1).value == 1

    def test_factorize_rejects_nonpositive(self):
        with pytest.raises(ArgumentError):
            factorize(0)


class TestLegendre:

    @pytest.mark.parametrize("a,p,expected", [(1, 5, 1), (2, 5, -1), (-4, 5, 1), (10, 5, 0), (3, 7, -1)])
    def test_values(self, a, p, expected):
        assert legendre(a, p) == expected

    @pytest.mark.parametrize("p", [2, 4, 9, 1, -3])
    def test_rejects_non_odd_primes(self, p):
        with pytest.raises(ArgumentError):
            legendre(1, p)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_multiplicative(self, p):
        for a in range(1, p):
            for b in range(1, p):
                assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)

    def test_minus_one_power(self):
        assert minus_one_power(5, 1) == 1
        assert minus_one_power(7, 1) == -1
        assert minus_one_power(7, 2) == 1
        assert minus_one_power(3, 0) == 1

    def test_unit_character_ignores_p_part(self):
        assert unit_character(50, 5) == legendre(2, 5)
        assert unit_character(300, 5) == legendre(12, 5)

    def test_no_deprecation_warnings(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            assert legendre(2, 7) == 1
            assert legendre(-1, 5) == 1
            assert legendre(-1, 7) == -1


class TestValuation:

    @pytest.mark.parametrize("n,p,expected", [(50, 5, 2), (7, 3, 0), (300, 5, 2), (-81, 3, 4)])
    def test_values(self, n, p, expected):
        assert valuation(n, p) == expected

    def test_zero_is_rejected(self):
        with pytest.raises(ArgumentError):
            valuation(0, 5)

    def test_split_prime_power(self):
        assert split_prime_power(300, 5) == (12, 2)
        assert split_prime_power(7, 3) == (7, 0)

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_additive(self, p):
        for a in range(1, 60):
            for b in (1, 2, 3, 5, 7, 12, 49, 125, -18):
                assert valuation(a * b, p) == valuation(a, p) + valuation(b, p)


class TestMoebius:

    @pytest.mark.parametrize("n,expected", [(1, 1), (4, 0), (6, 1), (30, -1), (12, 0), (7, -1)])
    def test_values(self, n, expected):
        assert moebius(n) == expected

    def test_rejects_zero(self):
        with pytest.raises(ArgumentError):
            moebius(0)

    @pytest.mark.parametrize("n", range(2, 201))
    def test_sums_to_zero_over_divisors(self, n):
        assert sum(moebius(d) for d in range(1, n + 1) if n % d == 0) == 0

    def test_square_divisors(self):
        assert list(square_divisors(72)) == [1, 2, 3, 6]
        assert list(square_divisors(7)) == [1]


def test_is_odd_prime():
    assert is_odd_prime(3)
    assert is_odd_prime(23)
    assert not is_odd_prime(2)
    assert not is_odd_prime(9)
    assert not is_odd_prime(-5)


def test_content_and_floor_sqrt():
    assert content([6, -9, 15]) == 3
    assert content([]) == 0
    assert floor_sqrt(Fraction(17, 2)) == 2
    assert floor_sqrt(Fraction(9)) == 3
    with pytest.raises(ArgumentError):
        floor_sqrt(Fraction(-1))
