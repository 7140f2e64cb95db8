"""Free graded-commutative algebras on the second-page generators."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.grading import Series
from artifact.pages import e2_ranks
from artifact.loopspace import free_gca_series, loopspace_series, mmm_subseries


def test_single_even_generator_is_polynomial():
    assert free_gca_series({4: 1}, 16) == Series.geom(4, 16)


def test_single_odd_generator_is_exterior():
    assert free_gca_series({13: 1}, 16) == Series.one_plus(13, 16)


def test_mixed_generators():
    ser = free_gca_series({4: 1, 13: 1}, 16)
    assert ser.c == [1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1]


def test_zero_multiplicity_dropped():
    assert free_gca_series({4: 0, 6: 1}, 12) == Series.geom(6, 12)


def test_generators_above_cutoff_ignored():
    assert free_gca_series({30: 5}, 12) == Series.one(12)


def test_rejects_degree_zero():
    with pytest.raises(AssertionError):
        free_gca_series({0: 1}, 8)


@given(st.dictionaries(st.integers(1, 10), st.integers(0, 2), max_size=3),
       st.dictionaries(st.integers(1, 10), st.integers(0, 2), max_size=3))
@settings(max_examples=40)
def test_multiplicative_in_the_generators(g1, g2):
    merged = dict(g1)
    for n, g in g2.items():
        merged[n] = merged.get(n, 0) + g
    D = 14
    assert free_gca_series(merged, D) == \
        free_gca_series(g1, D) * free_gca_series(g2, D)


def test_loopspace_d4():
    ser = loopspace_series(4, "inf", 16)
    assert ser.c == [1, 0, 0, 0, 1, 0, 0, 0, 3, 0, 0, 0, 5, 1, 0, 0, 11]


def test_loopspace_offset_shifts_generators():
    base = e2_ranks(4, "inf", 14).total
    ser = loopspace_series(4, "inf", 16, offset=2)
    # the first generator (degree 4) now sits in degree 6
    assert ser[4] == 0 and ser[6] == base[4]


def test_loopspace_coefficients_nonnegative():
    for R in (1, 2, "inf"):
        ser = loopspace_series(5, R, 18)
        assert all(c >= 0 for c in ser.c)
        assert ser[0] == 1


def test_mmm_subseries_even():
    assert mmm_subseries(4, 12).c == Series.ring([4, 8], 12).c


def test_mmm_subseries_odd_matches_its_pontryagin_ring():
    assert mmm_subseries(5, 12) == mmm_subseries(4, 12)
    assert mmm_subseries(7, 12) == Series.ring([4, 8, 12], 12)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_mmm_bounded_by_total(d):
    # the regular column alone never exceeds the whole second page
    D = 16
    total = e2_ranks(d, "inf", D).total
    sub = mmm_subseries(d, D)
    for n in range(D + 1):
        assert sub[n] <= total[n]
