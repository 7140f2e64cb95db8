"""Differential rules and assembled matrices."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.grading import Polynomial, swap
from artifact.strata import Stratum
from artifact.e1 import build_basis
from artifact.differentials import (
    fold_sign, COVER_FACTOR, element_poly, d0, d_fold,
    differential, LinearMap, assemble_matrix,
)


def _by_name(image):
    return {repr(el): c for el, c in image.items()}


class TestD0:
    def test_plain_monomials_die(self):
        basis = build_basis(4, 0, 8)
        for el in basis:
            if not el.piece.euler:
                assert d0(4, el) == {}

    def test_euler_unit_hits_every_fold_stratum(self):
        basis = build_basis(4, 0, 4)
        (el,) = [el for el in basis if el.piece.euler]
        image = _by_name(d0(4, el))
        assert image == {"U_{0,5,1}.1": 1, "U_{1,4,1}.1": -1, "U_{2,3,1}.1": 1}

    def test_euler_p1_splits(self):
        basis = build_basis(4, 0, 8)
        (el,) = [el for el in basis if el.piece.euler]
        image = _by_name(d0(4, el))
        # p_1 -> p'_1 on (0,5) and (1,4), -> p_1 + p'_1 on (2,3)
        assert image == {
            "U_{0,5,1}.p'_1": 1, "U_{1,4,1}.p'_1": -1,
            "U_{2,3,1}.p_1": 1, "U_{2,3,1}.p'_1": 1,
        }

    def test_odd_dimension_has_no_euler_source(self):
        for n in (5, 9, 13):
            for el in build_basis(5, 0, n):
                assert not el.piece.euler
                assert d0(5, el) == {}


class TestDFold:
    def test_a0_restricts(self):
        el = [e for e in build_basis(4, 1, 9)][0]
        assert repr(el) == "U_{0,5,1}.p'_1"
        image = _by_name(d_fold(4, el))
        assert image == {"U_{0,4,2}.p'_1": 1}

    def test_middle_spreads_two_ways(self):
        el = [e for e in build_basis(4, 1, 9) if e.stratum.a == 1][0]
        image = _by_name(d_fold(4, el))
        assert image == {"U_{0,4,2}.p'_1": 1, "U_{1,3,2}.p'_1": 1}

    def test_top_even_d_antisymmetrizes(self):
        el = [e for e in build_basis(4, 1, 9) if e.stratum.a == 2][0]
        assert repr(el) == "U_{2,3,1}.p_1"
        image = _by_name(d_fold(4, el))
        # the (1,3) leg kills p_1 outright; on (2,2) the skew part of
        # p_1 - p'_1 is read off at its representative p_1
        assert image == {"U_{2,2,2}.p_1": 1}

    def test_top_even_d_two_legs(self):
        el = [e for e in build_basis(4, 1, 9)
              if repr(e) == "U_{2,3,1}.p'_1"][0]
        image = _by_name(d_fold(4, el))
        assert image == {"U_{1,3,2}.p'_1": 1, "U_{2,2,2}.p_1": -1}

    def test_top_even_d_symmetric_dies_in_square(self):
        els = [e for e in build_basis(4, 1, 13) if e.stratum.a == 2]
        for el in els:
            image = _by_name(d_fold(4, el))
            sq = {k: v for k, v in image.items() if k.startswith("U_{2,2,2}")}
            # p_1 p'_1 is swap fixed, so only the pure squares survive
            if repr(el) == "U_{2,3,1}.p_1 p'_1":
                assert sq == {}

    def test_euler_fold_elements_die(self):
        for n in range(4, 16):
            for el in build_basis(3, 1, n):
                if el.piece.euler:
                    assert d_fold(3, el) == {}

    def test_odd_d_square_restricts_down(self):
        (el,) = [e for e in build_basis(5, 1, 14) if e.stratum.a == 3]
        image = _by_name(d_fold(5, el))
        # p_1^2 - p'_1^2 carries over to (2,3) unchanged
        assert image == {"U_{2,3,2}.p_1^2": 1, "U_{2,3,2}.p'_1^2": -1}


class TestHigherColumns:
    def test_level2_plain_piece_dies(self):
        # r = 1 is odd, so at level 2 only the Euler piece moves
        el = [e for e in build_basis(4, 2, 6)][0]
        assert not el.piece.euler
        assert differential(4, el) == {}

    def test_even_column_cover_multiplicity(self):
        els = [e for e in build_basis(4, 2, 10) if e.piece.euler]
        assert els
        image = differential(4, els[0])
        assert sorted(c for c in image.values()) == [COVER_FACTOR, COVER_FACTOR]

    def test_odd_column_sheets_cancel_in_pairs(self):
        els = [e for e in build_basis(4, 5, 9) if e.stratum.sign is not None]
        plus = [e for e in els if e.stratum.sign == 1]
        minus = [e for e in els if e.stratum.sign == -1]
        for p, m in zip(plus, minus):
            ip, im = differential(4, p), differential(4, m)
            assert set(ip) == set(im)
            for el in ip:
                assert ip[el] == -im[el]


class TestElementPoly:
    def test_full(self):
        el = [e for e in build_basis(4, 1, 9) if e.stratum.a == 2][0]
        p = element_poly(el)
        assert dict(p.items()) == {((1,), (0,)): 1}

    def test_skew_vector(self):
        els = [e for e in build_basis(5, 1, 14) if e.stratum.a == 3]
        for el in els:
            p = element_poly(el)
            assert swap(p) == -p


class TestMatrices:
    def test_fold_matrix_d4_deg5(self):
        M = assemble_matrix(4, 1, 5)
        assert M.dense() == [[1, 1, 0], [0, 1, 1]]
        assert M.rank() == 2

    def test_d0_matrix_d4_deg4(self):
        M = assemble_matrix(4, 0, 4)
        # source is [p_1, e.1]; only the Euler column is nonzero
        assert M.dense() == [[0, 1], [0, -1], [0, 1]]
        assert M.rank() == 1

    def test_compose_is_zero_sample(self):
        for k in (0, 1, 2, 3):
            for n in range(4, 16):
                A = assemble_matrix(4, k, n)
                if not A.source.elements:
                    continue
                B = assemble_matrix(4, k + 1, n + 1)
                assert B.compose(A).is_zero(), (k, n)

    @given(st.integers(3, 6), st.integers(0, 3), st.integers(4, 14))
    @settings(max_examples=40, deadline=None)
    def test_chain_condition_sampled(self, d, k, n):
        A = assemble_matrix(d, k, n)
        if not A.source.elements:
            return
        B = assemble_matrix(d, k + 1, n + 1)
        assert B.compose(A).is_zero()

    @given(st.integers(3, 6), st.integers(0, 4), st.integers(4, 14))
    @settings(max_examples=40, deadline=None)
    def test_integrality(self, d, k, n):
        M = assemble_matrix(d, k, n)
        for col in M.cols:
            for v in col.values():
                assert v == int(v)

    def test_rank_zero_map(self):
        M = assemble_matrix(5, 0, 8)
        assert M.is_zero() and M.rank() == 0
