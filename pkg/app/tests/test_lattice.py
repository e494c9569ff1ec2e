"""
Tests for the brute-force lattice oracle
"""

import numpy as np
import pytest
from pydantic import ValidationError

from app.models.definite import classes_in_genus, gram_lattice
from app.schemas.genus import GenusSymbol
from app.schemas.lattice import DefiniteLatticeId, GramLattice, GroupKind
from app.services import lattice_service
from app.services.lattice_service import LatticeService
from app.utils.errors import ArgumentError, UnsupportedRangeError
from config import settings

A2 = gram_lattice(DefiniteLatticeId.A2NEG)
K7 = gram_lattice(DefiniteLatticeId.K7)
F23A = gram_lattice(DefiniteLatticeId.F23A)
F23B = gram_lattice(DefiniteLatticeId.F23B)


class TestGramLattice:

    def test_properties(self):
        assert A2.rank == 2
        assert A2.is_even
        assert A2.determinant == 3
        assert A2.norm((1, 1)) == 6
        assert A2.inner((1, 0), (0, 1)) == 1

    @pytest.mark.parametrize("gram", [((1, 2), (3, 4)), ((1, 1), (1, 1)), ((1, 2, 3),), ()])
    def test_invalid(self, gram):
        with pytest.raises(ValidationError):
            GramLattice(gram=gram)

    def test_hashable(self):
        assert hash(GramLattice(gram=((2, 1), (1, 2)))) == hash(A2)


class TestEnumeration:

    def test_a2_roots(self):
        vectors = LatticeService.enumerate_vectors(A2, 2)
        assert set(vectors) == {(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)}
        assert vectors == sorted(vectors)

    def test_even_lattice_has_no_odd_norms(self):
        for lattice in (A2, K7, F23A, F23B):
            assert LatticeService.enumerate_vectors(lattice, 1) == []
            assert LatticeService.enumerate_vectors(lattice, 7) == []

    def test_f23b_has_no_roots(self):
        assert LatticeService.enumerate_vectors(F23B, 2) == []

    def test_cache_reuse_after_larger_bound(self):
        LatticeService.short_vectors(K7, 60)
        assert len(LatticeService.enumerate_vectors(K7, 2)) == 2
        assert all(K7.norm(v) == 14 for v in LatticeService.enumerate_vectors(K7, 14))

    def test_cache_evicts_least_recently_used(self, monkeypatch):
        monkeypatch.setattr(settings, "ENUMERATION_CACHE_SIZE", 2)
        lattice_service._enumeration_cache.clear()
        LatticeService.short_vectors(A2, 10)
        LatticeService.short_vectors(K7, 10)
        LatticeService.short_vectors(A2, 6)
        LatticeService.short_vectors(F23A, 10)
        assert list(lattice_service._enumeration_cache) == [A2, F23A]
        assert len(LatticeService.enumerate_vectors(K7, 2)) == 2
        assert list(lattice_service._enumeration_cache) == [F23A, K7]

    def test_indefinite_is_unsupported(self):
        with pytest.raises(UnsupportedRangeError):
            LatticeService.enumerate_vectors(GramLattice(gram=((0, 1), (1, 0))), 2)

    def test_norm_must_be_positive(self):
        with pytest.raises(ArgumentError):
            LatticeService.enumerate_vectors(A2, 0)

    def test_rank_three(self):
        a3 = GramLattice(gram=((2, -1, 0), (-1, 2, -1), (0, -1, 2)))
        assert len(LatticeService.enumerate_vectors(a3, 2)) == 12


class TestIsometryGroup:

    @pytest.mark.parametrize(
        "lattice,full,special",
        [(A2, 12, 6), (K7, 4, 2), (F23A, 4, 2), (F23B, 2, 2)],
    )
    def test_orders(self, lattice, full, special):
        assert len(LatticeService.group(lattice, GroupKind.O)) == full
        assert len(LatticeService.group(lattice, GroupKind.SO)) == special

    @pytest.mark.parametrize("lattice", [A2, K7, F23A, F23B])
    def test_group_axioms(self, lattice):
        group = LatticeService.isometry_group(lattice)
        gram = lattice.matrix
        elements = {tuple(map(tuple, np.array(g))) for g in group}
        assert ((1, 0), (0, 1)) in elements
        assert ((-1, 0), (0, -1)) in elements
        for g in group:
            t = np.array(g)
            assert np.array_equal(t.T @ gram @ t, gram)
            for h in group:
                product = t @ np.array(h)
                assert tuple(map(tuple, product)) in elements

    def test_rank_three_unsupported(self):
        with pytest.raises(UnsupportedRangeError):
            LatticeService.isometry_group(GramLattice(gram=((2, 0, 0), (0, 2, 0), (0, 0, 2))))

    def test_rank_one(self):
        assert len(LatticeService.isometry_group(GramLattice(gram=((10,),)))) == 2


class TestOrbits:

    def test_roots_form_one_orbit(self):
        orbits = LatticeService.orbit_decomposition(A2, LatticeService.group(A2, GroupKind.O), 2)
        assert len(orbits) == 1
        assert orbits[0].size == 6
        assert orbits[0].divisibility == 1

    def test_norm_14_splits_under_rotations(self):
        orbits = LatticeService.orbit_decomposition(A2, LatticeService.group(A2, GroupKind.SO), 14)
        assert len(orbits) == 2
        assert [o.size for o in orbits] == [6, 6]

    def test_divisibility_three(self):
        orbits = LatticeService.orbit_decomposition(A2, LatticeService.group(A2, GroupKind.O), 6)
        assert len(orbits) == 1
        assert orbits[0].divisibility == 3

    def test_imprimitive_vectors(self):
        group = LatticeService.group(A2, GroupKind.O)
        assert LatticeService.orbit_decomposition(A2, group, 8, primitive_only=True) == []
        orbits = LatticeService.orbit_decomposition(A2, group, 8, primitive_only=False)
        assert len(orbits) == 1
        assert orbits[0].divisibility == 2

    @pytest.mark.parametrize("lattice", [A2, K7, F23A, F23B])
    def test_divisibility_constant_on_orbits(self, lattice):
        group = LatticeService.group(lattice, GroupKind.O)
        for norm in range(2, 120, 2):
            orbits = LatticeService.orbit_decomposition(lattice, group, norm, primitive_only=False)
            covered = 0
            for orbit in orbits:
                members = {tuple(int(x) for x in np.array(g) @ np.array(orbit.representative)) for g in group}
                assert len(members) == orbit.size
                assert {LatticeService.vector_divisibility(lattice, v) for v in members} == {orbit.divisibility}
                assert orbit.representative == min(members)
                covered += orbit.size
            assert covered == len(LatticeService.enumerate_vectors(lattice, norm))


class TestDivisibility:

    def test_values(self):
        assert LatticeService.vector_divisibility(A2, (1, 0)) == 1
        assert LatticeService.vector_divisibility(A2, (1, 1)) == 3
        assert LatticeService.vector_divisibility(GramLattice(gram=((10,),)), (1,)) == 10

    def test_zero_vector(self):
        with pytest.raises(ArgumentError):
            LatticeService.vector_divisibility(A2, (0, 0))


class TestFixedNormSet:

    def test_rotations_only(self):
        assert LatticeService.fixed_norm_set(K7, LatticeService.group(K7, GroupKind.SO)) == []
        assert LatticeService.fixed_norm_set(F23B, LatticeService.group(F23B, GroupKind.O)) == []

    def test_reflections(self):
        assert LatticeService.fixed_norm_set(A2, LatticeService.group(A2, GroupKind.O)) == [1, 3]
        assert LatticeService.fixed_norm_set(K7, LatticeService.group(K7, GroupKind.O)) == [1, 7]
        assert LatticeService.fixed_norm_set(F23A, LatticeService.group(F23A, GroupKind.O)) == [1, 23]

    def test_bound(self):
        assert LatticeService.fixed_norm_set(F23A, LatticeService.group(F23A, GroupKind.O), bound=10) == [1]


class TestDefiniteClasses:

    def test_genus_lists(self):
        assert classes_in_genus(GenusSymbol.parse("II_(2,0)3^-1")) == [DefiniteLatticeId.A2NEG]
        assert classes_in_genus(GenusSymbol.parse("II_(2,0)23^+1")) == [DefiniteLatticeId.F23A, DefiniteLatticeId.F23B]

    def test_determinants(self):
        assert [A2.determinant, K7.determinant, F23A.determinant, F23B.determinant] == [3, 7, 23, 23]

    def test_unknown_genus(self):
        with pytest.raises(UnsupportedRangeError):
            classes_in_genus(GenusSymbol.parse("II_(2,0)11^+1"))
