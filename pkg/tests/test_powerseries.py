"""
Unit tests for truncated power series over Poly3 coefficients.
"""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lghap.algebra import Poly3, X, Y, Z
from lghap.errors import IndexBeyondOrder, NonZeroConstantTerm, ZeroConstantTerm
from lghap.powerseries import (
    PowerSeries,
    build_c0,
    build_heat_exponent,
    egf_coeff,
    ps_add,
    ps_derive,
    ps_exp,
    ps_mul,
    ps_pow,
    ps_recip,
    ps_shift,
    scalar_series,
    scaled_exp_series,
)

ORDER = 6

invertible = st.lists(
    st.fractions(min_value=-4, max_value=4, max_denominator=5), min_size=ORDER + 1, max_size=ORDER + 1,
).filter(lambda values: values[0] != 0).map(lambda values: scalar_series(values, ORDER))

composable = st.lists(
    st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=ORDER, max_size=ORDER,
).map(lambda values: scalar_series([0, *values], ORDER))


def bernoulli_g(order: int) -> PowerSeries:
    return scalar_series([Fraction(1, factorial(k + 1)) for k in range(order + 1)], order)


# ──────────────────────────────────────────────────────────────
# Construction & arithmetic
# ──────────────────────────────────────────────────────────────

class TestArithmetic:
    def test_padding_and_truncation(self):
        s = PowerSeries([1, 2], 3)
        assert s.coeffs == (Poly3.const(1), Poly3.const(2), Poly3.zero(), Poly3.zero())
        assert PowerSeries([1, 2, 3], 1).order == 1

    def test_product_of_conjugates(self):
        a = scalar_series([1, 1], 4)
        b = scalar_series([1, -1], 4)
        assert ps_mul(a, b) == scalar_series([1, 0, -1], 4)

    def test_product_uses_smaller_order(self):
        assert ps_mul(PowerSeries.one(5), scalar_series([1, 1], 2)).order == 2

    def test_shift_keeps_order(self):
        s = ps_shift(scalar_series([1, 1, 1], 2), 1)
        assert s == scalar_series([0, 1, 1], 2)

    def test_power(self):
        assert ps_pow(scalar_series([1, 1], 3), 3) == scalar_series([1, 3, 3, 1], 3)
        assert ps_pow(scalar_series([5, 1], 3), 0) == PowerSeries.one(3)

    def test_coefficient_beyond_order(self):
        with pytest.raises(IndexBeyondOrder):
            PowerSeries.one(2)[3]


# ──────────────────────────────────────────────────────────────
# exp / reciprocal / derivative
# ──────────────────────────────────────────────────────────────

class TestTranscendental:
    def test_exp_of_zero(self):
        assert ps_exp(PowerSeries([0], 4)) == PowerSeries.one(4)

    def test_exp_of_yt(self):
        s = ps_exp(build_heat_exponent(4, 3))
        assert s.coeffs == (Poly3.const(1), Y, Y ** 2 / 2, Y ** 3 / 6)

    def test_exp_of_heat_exponent(self):
        s = ps_exp(build_heat_exponent(2, 2))
        assert s[2] == Y ** 2 / 2 + Z

    def test_exp_needs_zero_constant(self):
        with pytest.raises(NonZeroConstantTerm):
            ps_exp(scalar_series([1, 1], 2))

    def test_geometric_series(self):
        assert ps_recip(scalar_series([1, -1], 5)) == scalar_series([1] * 6, 5)
        assert ps_recip(PowerSeries.one(3)) == PowerSeries.one(3)

    def test_bernoulli_reciprocal(self):
        s = ps_recip(bernoulli_g(4))
        assert [c.constant_term() for c in s.coeffs] == [
            1, Fraction(-1, 2), Fraction(1, 12), 0, Fraction(-1, 720),
        ]

    def test_reciprocal_pair(self):
        g = bernoulli_g(8)
        assert ps_mul(g, ps_recip(g)) == PowerSeries.one(8)

    def test_reciprocal_needs_constant(self):
        with pytest.raises(ZeroConstantTerm):
            ps_recip(scalar_series([0, 1], 3))
        with pytest.raises(ZeroConstantTerm):
            ps_recip(PowerSeries([Y, 1], 3))

    def test_derivatives(self):
        assert ps_derive(PowerSeries.one(3)) == PowerSeries([0], 2)
        assert ps_derive(PowerSeries.monomial(2, 3)) == scalar_series([0, 2], 2)
        assert ps_derive(bernoulli_g(3))[0] == Fraction(1, 2)
        assert ps_derive(PowerSeries.one(0)) == PowerSeries([0], 0)

    def test_scaled_exponential(self):
        s = scaled_exp_series(3, 2)
        assert [c.constant_term() for c in s.coeffs] == [2, 2, 1, Fraction(1, 3)]

    @settings(max_examples=40, deadline=None)
    @given(invertible)
    def test_reciprocal_property(self, a):
        assert ps_mul(a, ps_recip(a)) == PowerSeries.one(ORDER)

    @settings(max_examples=25, deadline=None)
    @given(composable, composable)
    def test_exp_is_additive(self, a, b):
        assert ps_mul(ps_exp(a), ps_exp(b)) == ps_exp(ps_add(a, b))

    @settings(max_examples=25, deadline=None)
    @given(composable)
    def test_exp_chain_rule(self, a):
        assert ps_derive(ps_exp(a)) == ps_mul(ps_derive(a), ps_exp(a))


# ──────────────────────────────────────────────────────────────
# Generating-function factors
# ──────────────────────────────────────────────────────────────

class TestFactors:
    def test_c0_stride_three(self):
        s = build_c0(3, 7)
        assert s[0] == 1
        assert s[3] == X
        assert s[6] == X ** 2 / 4
        assert all(s[k].is_zero for k in (1, 2, 4, 5, 7))

    def test_c0_stride_one(self):
        assert build_c0(1, 2).coeffs == (Poly3.const(1), X, X ** 2 / 4)

    def test_egf_coefficients(self):
        s = ps_exp(build_heat_exponent(5, 3))
        assert egf_coeff(s, 3) == Y ** 3
        assert egf_coeff(s, 0) == 1

    def test_egf_binomial_convolution(self):
        n = 4
        scalar = bernoulli_g(n)
        product = ps_mul(ps_exp(build_heat_exponent(n + 1, n)), scalar)
        expected = sum(
            (Y ** k * (Fraction(factorial(n), factorial(k) * factorial(n - k)) * factorial(n - k)
                       * scalar[n - k].constant_term()) for k in range(n + 1)),
            Poly3.zero(),
        )
        assert egf_coeff(product, n) == expected
