"""
Tests for relative class numbers and conjugacy-class counting
"""

import pytest

from app.services.classnumber_service import ClassNumberService
from app.utils.errors import ArgumentError, UnsupportedRangeError
from config import settings


class TestRelativeClassNumber:

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19])
    def test_trivial_up_to_19(self, p):
        assert ClassNumberService.relative_class_number(p) == 1

    @pytest.mark.parametrize("p,expected", [(23, 3), (29, 8), (31, 9), (37, 37), (41, 121)])
    def test_first_nontrivial_values(self, p, expected):
        assert ClassNumberService.relative_class_number(p) == expected

    @pytest.mark.parametrize("p", [2, 9, 1, 0, -7])
    def test_rejects_non_odd_primes(self, p):
        with pytest.raises(ArgumentError):
            ClassNumberService.relative_class_number(p)

    def test_configured_cap(self, monkeypatch):
        monkeypatch.setattr(settings, "HMINUS_MAX_P", 50)
        assert ClassNumberService.relative_class_number(47) == 695
        with pytest.raises(UnsupportedRangeError):
            ClassNumberService.relative_class_number(53)


class TestConjugacyClassCount:

    @pytest.mark.parametrize("p,signatures,classes,expected", [(3, 1, 1, 1), (23, 1, 2, 6), (5, 2, 1, 2)])
    def test_product(self, p, signatures, classes, expected):
        assert ClassNumberService.conjugacy_class_count(p, signatures, classes) == expected

    def test_counts_must_be_positive(self):
        with pytest.raises(ArgumentError):
            ClassNumberService.conjugacy_class_count(3, 0, 1)

    def test_invariant_genus_classes(self):
        assert ClassNumberService.invariant_genus_class_count(4, 20, 23, 1, 0) == 2
        assert ClassNumberService.invariant_genus_class_count(4, 20, 3, 1, 5) == 1
        with pytest.raises(UnsupportedRangeError):
            ClassNumberService.invariant_genus_class_count(2, 10, 3, 1, 0)
