"""
Tests for primitive vectors, A2(-1) embeddings and U summands
"""

import logging

import pytest
from pydantic import ValidationError

from app.schemas.embedding import EmbeddingQuery, ExistenceVerdict, OrbitReport
from app.schemas.genus import GenusSymbol, Parity
from app.services.discform_service import DiscriminantFormService
from app.services.embedding_service import EmbeddingService
from app.utils.errors import ArgumentError

H5_U = GenusSymbol.parse("II_(2,2)5^-1")


def query(genus, k, div):
    if isinstance(genus, str):
        genus = GenusSymbol.parse(genus)
    return EmbeddingQuery(genus=genus, k=k, div=div)


def indefinite_even_genera(p, ranks):
    for rank in ranks:
        for l_plus in range(2, rank):
            for n in range(0, rank + 1):
                for eps in ((1,) if n == 0 else (1, -1)):
                    genus = GenusSymbol(
                        parity=Parity.EVEN, l_plus=l_plus, l_minus=rank - l_plus, p=p, eps=eps, n=n
                    )
                    if DiscriminantFormService.genus_exists(genus):
                        yield genus


class TestVectorExists:

    def test_spinor_example_exists(self):
        assert EmbeddingService.vector_exists(query(H5_U, 50, 1)) == ExistenceVerdict.YES

    def test_divisibility_p_needs_p_in_k(self):
        assert EmbeddingService.vector_exists(query(H5_U, 2, 5)) == ExistenceVerdict.NO

    def test_unit_square_large_rank(self):
        assert EmbeddingService.vector_exists(query("II_(2,12)3^-3", 4, 1)) == ExistenceVerdict.YES

    def test_no_positive_vectors_in_negative_definite(self):
        assert EmbeddingService.vector_exists(query("II_(0,2)3^+1", 2, 1)) == ExistenceVerdict.NO

    def test_definite_is_necessary_only(self):
        assert EmbeddingService.vector_exists(query("II_(2,0)3^-1", 2, 1)) == ExistenceVerdict.NECESSARY_ONLY

    def test_character_condition_at_full_length(self):
        # n = rank - 1: (-1/5)^(l-) (k/5) must equal eps
        assert EmbeddingService.vector_exists(query("II_(1,1)5^-1", 4, 1)) == ExistenceVerdict.NO
        assert EmbeddingService.vector_exists(query("II_(1,1)5^-1", 2, 1)) == ExistenceVerdict.NECESSARY_ONLY

    def test_odd_square(self):
        with pytest.raises(ArgumentError):
            EmbeddingService.vector_exists(query(H5_U, 51, 1))

    def test_foreign_divisibility(self):
        with pytest.raises(ArgumentError):
            EmbeddingService.vector_exists(query(H5_U, 30, 3))

    def test_query_validation(self):
        with pytest.raises(ValidationError):
            EmbeddingQuery(genus=H5_U, k=0, div=1)


class TestVectorOrbits:

    @pytest.mark.parametrize("k", [50, 300])
    def test_spinor_exception(self, k):
        report = EmbeddingService.vector_orbits(query(H5_U, k, 1))
        assert report.orbit_count == 2
        assert report.special_case

    def test_single_orbit(self):
        report = EmbeddingService.vector_orbits(query(H5_U, 10, 1))
        assert report.orbit_count == 1
        assert not report.special_case

    def test_exception_needs_square_class(self):
        # 100 = 4 * 25 and (-8/5) = -1
        assert EmbeddingService.vector_orbits(query(H5_U, 100, 1)).orbit_count == 1

    def test_divisibility_p_exception(self):
        report = EmbeddingService.vector_orbits(query("II_(2,2)5^-3", 50, 5))
        assert report.orbit_count == 2

    def test_nonexistent_has_no_orbits(self):
        report = EmbeddingService.vector_orbits(query(H5_U, 2, 5))
        assert report.exists == ExistenceVerdict.NO
        assert report.orbit_count == 0

    def test_definite_is_unknown(self):
        report = EmbeddingService.vector_orbits(query("II_(2,0)3^-1", 2, 1))
        assert report.orbit_count == "unknown"

    def test_prime_sets(self):
        # j = 300 = 2^2 * 3 * 5^2; 2 with an even exponent joins 3
        report = EmbeddingService.vector_orbits(query(H5_U, 300, 1))
        assert report.l1_set == [2, 3]
        assert report.l0_set == []
        report = EmbeddingService.vector_orbits(query(H5_U, 350, 1))
        assert report.l1_set == [7]
        assert report.l0_set == [2]

    def test_report_consistency(self):
        with pytest.raises(ValidationError):
            OrbitReport(exists=ExistenceVerdict.NO, orbit_count=1)
        with pytest.raises(ValidationError):
            OrbitReport(exists=ExistenceVerdict.YES, orbit_count=1, special_case=True)

    @pytest.mark.parametrize("p", [3, 5, 13])
    def test_exception_needs_rank_four_and_p_squared(self, p):
        fired = 0
        for genus in indefinite_even_genera(p, range(4, 7)):
            for k in range(2, 202, 2):
                for div in (1, p):
                    report = EmbeddingService.vector_orbits(query(genus, k, div))
                    if genus.rank != 4 or k % (p * p):
                        assert not report.special_case
                        assert report.orbit_count != 2
                    fired += report.special_case
        if p == 5:
            assert fired > 0


class TestA2Embeds:

    def test_divisibility_one_at_corank_two(self):
        assert EmbeddingService.a2_embeds(1, 5, -1, 2, 1)
        assert not EmbeddingService.a2_embeds(1, 5, 1, 2, 1)

    def test_divisibility_three_needs_p_3(self):
        assert not EmbeddingService.a2_embeds(1, 7, 1, 0, 3)

    def test_p_3_corank_three(self):
        assert EmbeddingService.a2_embeds(1, 3, -1, 1, 1)
        assert not EmbeddingService.a2_embeds(1, 3, 1, 1, 1)

    def test_p_3_divisibility_three(self):
        assert EmbeddingService.a2_embeds(7, 3, 1, 2, 3)
        assert EmbeddingService.a2_embeds(1, 3, -1, 1, 3)

    def test_bad_arguments(self):
        with pytest.raises(ArgumentError):
            EmbeddingService.a2_embeds(2, 5, 1, 0, 1)
        with pytest.raises(ArgumentError):
            EmbeddingService.a2_embeds(1, 5, 1, 0, 2)

    def test_rank_one_negative_part_is_flagged(self, caplog):
        with caplog.at_level(logging.DEBUG, logger="app.services.embedding_service"):
            EmbeddingService.a2_embeds(1, 5, -1, 2, 1)
            EmbeddingService.a2_embeds(3, 5, -1, 2, 1)
        flagged = [r for r in caplog.records if "not fully derived" in r.getMessage()]
        assert len(flagged) == 1


class TestContainsU:

    @pytest.mark.parametrize(
        "text,expected",
        [("II_(2,0)3^-1", False), ("II_(2,2)5^-1", True), ("II_(1,1)3^+0", True), ("II_(1,1)5^+2", False)],
    )
    def test_examples(self, text, expected):
        assert EmbeddingService.contains_U(GenusSymbol.parse(text)) is expected

    def test_requires_nonempty_even_genus(self):
        with pytest.raises(ArgumentError):
            EmbeddingService.contains_U(GenusSymbol.parse("II_(2,0)3^+1"))
        with pytest.raises(ArgumentError):
            EmbeddingService.contains_U(GenusSymbol(parity=Parity.ODD, l_plus=1, l_minus=1, p=3, eps=1, n=0))
