"""
Unit tests for Hessenberg matrices, both determinant engines and the
determinantal definitions of Appell polynomials and LGHAP.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lghap.algebra import Poly3, X, Y
from lghap.appell import appell_poly, make_family
from lghap.determinant import (
    HessMatrix,
    appell_det,
    build_appell_matrix,
    build_lghap_matrix,
    hess_det,
    lghap_det,
    naive_det,
)
from lghap.errors import DegenerateFamily, DimensionTooLarge, NormalizationMismatch, ShapeViolation
from lghap.lgh import lghap_series
from lghap.schemas import LghParams

P35 = LghParams(m=3, r=5)
PARAMS = [LghParams(m=1, r=2), LghParams(m=2, r=2), LghParams(m=2, r=3), P35]

entries = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def hessenberg_matrices(draw):
    dim = draw(st.integers(1, 7))
    return HessMatrix([
        [draw(entries) if i <= j + 1 else 0 for j in range(dim)]
        for i in range(dim)
    ])


# ──────────────────────────────────────────────────────────────
# Matrices & engines
# ──────────────────────────────────────────────────────────────

class TestEngines:
    def test_two_by_two(self):
        mat = HessMatrix([[Y, X], [2, 3]])
        assert hess_det(mat) == Y * 3 - X * 2
        assert naive_det(mat) == Y * 3 - X * 2

    def test_one_by_one(self):
        assert hess_det(HessMatrix([[Fraction(7, 2)]])) == Fraction(7, 2)

    def test_triangular(self):
        mat = HessMatrix([[2, 5, 1], [0, 3, 4], [0, 0, Fraction(1, 2)]])
        assert hess_det(mat) == 3

    def test_zero_subdiagonal_splits(self):
        mat = HessMatrix([[1, 2, 0], [0, 1, 3], [0, 4, 1]])
        assert hess_det(mat) == naive_det(mat) == -11

    @settings(max_examples=60, deadline=None)
    @given(hessenberg_matrices())
    def test_engines_agree(self, mat):
        assert hess_det(mat) == naive_det(mat)

    def test_not_square(self):
        with pytest.raises(ShapeViolation):
            HessMatrix([[1, 2], [3]])
        with pytest.raises(ShapeViolation):
            HessMatrix([])

    def test_not_hessenberg(self):
        mat = HessMatrix([[1, 0, 0], [0, 1, 0], [1, 0, 1]])
        assert not mat.is_hessenberg
        with pytest.raises(ShapeViolation):
            hess_det(mat)

    def test_naive_guard(self):
        identity = HessMatrix([[1 if i == j else 0 for j in range(9)] for i in range(9)])
        assert hess_det(identity) == 1
        with pytest.raises(DimensionTooLarge):
            naive_det(identity)


# ──────────────────────────────────────────────────────────────
# Determinantal definitions
# ──────────────────────────────────────────────────────────────

class TestDefinitions:
    def test_matrix_layout(self):
        mat = build_appell_matrix(make_family("bernoulli"), 2)
        assert mat.dim == 3
        assert mat.is_hessenberg
        assert [str(mat[0, j]) for j in range(3)] == ["1", "y", "y^2"]
        assert mat[1, 0] == 1
        assert mat[2, 2] == 2 * Fraction(1, 2)

    @pytest.mark.parametrize("spec", ["bernoulli", "euler", "gen-euler:alpha=2", "apostol-euler:alpha=2,lambda=3"])
    def test_appell_polynomials(self, spec):
        f = make_family(spec)
        for n in range(8):
            assert appell_det(f, n) == appell_poly(f, n)

    def test_golden(self):
        got = lghap_det(make_family("bernoulli"), P35, 4)
        assert str(got) == "y^4 - 2*y^3 + y^2 + 24*x*y - 12*x - 1/30"

    @pytest.mark.parametrize("spec", ["bernoulli", "euler", "gen-bernoulli:alpha=2", "apostol-euler:alpha=1,lambda=2"])
    @pytest.mark.parametrize("p", PARAMS)
    def test_lghap_matches_series(self, spec, p):
        f = make_family(spec)
        for n in range(9):
            assert lghap_det(f, p, n) == lghap_series(f, p, n)

    def test_engines_agree_on_lghap_matrix(self):
        mat = build_lghap_matrix(make_family("euler"), LghParams(m=2, r=2), 5)
        assert hess_det(mat) == naive_det(mat)

    def test_genocchi_is_degenerate(self):
        with pytest.raises(DegenerateFamily):
            lghap_det(make_family("genocchi"), P35, 3)

    def test_paper_literal_rejected(self):
        with pytest.raises(NormalizationMismatch):
            lghap_det(make_family("trunc-exp"), P35, 3)

    def test_index_zero(self):
        assert lghap_det(make_family("euler"), P35, 0) == 1
        assert appell_det(make_family("bernoulli"), 0) == Poly3.const(1)
