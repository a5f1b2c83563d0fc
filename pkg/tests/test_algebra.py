"""
Unit tests for the exact polynomial layer: rationals, Poly3 arithmetic, calculus,
substitution and the canonical text format.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lghap.algebra import (
    Monomial,
    Poly3,
    X,
    Y,
    Z,
    format_decimal,
    format_poly,
    inv_derive_x,
    parse_poly,
    parse_rational,
    partial_derive,
    poly_eval,
    poly_mul,
    substitute,
)
from lghap.errors import InvalidParameter

EQ_3_8 = "y^4 - 2*y^3 + y^2 + 24*x*y - 12*x - 1/30"


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.dictionaries(
    keys=st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    values=small_fractions,
    max_size=6,
).map(Poly3)


# ──────────────────────────────────────────────────────────────
# Rationals
# ──────────────────────────────────────────────────────────────

class TestRationals:
    def test_parse_fraction_and_integer(self):
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational("-2") == Fraction(-2)
        assert parse_rational(" 6/8 ") == Fraction(3, 4)

    def test_decimal_literal_rejected(self):
        with pytest.raises(InvalidParameter):
            parse_rational("0.5")

    def test_zero_denominator_rejected(self):
        with pytest.raises(InvalidParameter):
            parse_rational("1/0")

    def test_format_decimal_rounds_and_keeps_one_digit(self):
        assert format_decimal(Fraction(-1, 30), 12) == "-0.033333333333"
        assert format_decimal(1, 12) == "1.0"
        assert format_decimal(0, 12) == "0.0"
        assert format_decimal(Fraction(359, 30), 3) == "11.967"

    def test_format_decimal_half_even(self):
        assert format_decimal(Fraction(1, 8), 2) == "0.12"
        assert format_decimal(Fraction(3, 8), 2) == "0.38"


# ──────────────────────────────────────────────────────────────
# Poly3 arithmetic
# ──────────────────────────────────────────────────────────────

class TestPoly3:
    def test_zero_coefficients_dropped(self):
        p = Poly3({(1, 0, 0): 1, (0, 1, 0): 0})
        assert len(p) == 1
        assert (X - X).is_zero

    def test_difference_of_squares(self):
        assert poly_mul(Y + 1, Y - 1) == Y ** 2 - 1

    def test_multiplicative_identity(self):
        p = parse_poly(EQ_3_8)
        assert p * Poly3.const(1) == p

    def test_distributivity_example(self):
        assert (Y ** 2 + X * 2) * Y == Y ** 3 + X * Y * 2

    def test_equality_against_scalars(self):
        assert Poly3.const(Fraction(1, 2)) == Fraction(1, 2)
        assert Poly3.zero() == 0

    def test_degrees(self):
        p = parse_poly(EQ_3_8)
        assert p.total_degree == 4
        assert p.degree_in("x") == 1
        assert p.degree_in("z") == 0
        assert p.constant_term() == Fraction(-1, 30)

    def test_negative_exponent_rejected(self):
        with pytest.raises(InvalidParameter):
            Poly3({(-1, 0, 0): 1})

    def test_hash_matches_equality(self):
        assert hash(Y * X) == hash(X * Y)


# ──────────────────────────────────────────────────────────────
# Evaluation & calculus
# ──────────────────────────────────────────────────────────────

class TestCalculus:
    def test_eval_golden_polynomial(self):
        p = parse_poly(EQ_3_8)
        assert poly_eval(p, 0, 0, 0) == Fraction(-1, 30)
        assert poly_eval(p, 1, 1, 0) == Fraction(359, 30)
        assert poly_eval(Poly3.zero(), 3, 4, 5) == 0

    def test_partial_derivatives(self):
        assert partial_derive(Poly3.const(7), "y") == 0
        assert partial_derive(X * Y * 24, "x") == Y * 24
        p = parse_poly(EQ_3_8)
        assert partial_derive(p, "y", 0) == p

    def test_derivative_of_golden_polynomial(self):
        # 4 times the degree-3 Bernoulli-based member for (m, r) = (3, 5)
        expected = parse_poly("4*y^3 - 6*y^2 + 2*y + 24*x")
        assert partial_derive(parse_poly(EQ_3_8), "y") == expected

    def test_inverse_derivative(self):
        assert inv_derive_x(Poly3.const(1), 3) == X ** 3 / 6
        assert inv_derive_x(X) == X ** 2 / 2
        assert inv_derive_x(Y * 24 - 12) == X * Y * 24 - X * 12

    @settings(max_examples=50, deadline=None)
    @given(polys)
    def test_derive_undoes_inverse_derivative(self, p):
        assert partial_derive(inv_derive_x(p), "x") == p

    @settings(max_examples=50, deadline=None)
    @given(polys, polys, small_fractions, small_fractions, small_fractions)
    def test_eval_is_ring_homomorphism(self, a, b, x0, y0, z0):
        assert poly_eval(a + b, x0, y0, z0) == poly_eval(a, x0, y0, z0) + poly_eval(b, x0, y0, z0)
        assert poly_eval(a * b, x0, y0, z0) == poly_eval(a, x0, y0, z0) * poly_eval(b, x0, y0, z0)


class TestSubstitute:
    def test_set_variable_to_zero(self):
        assert substitute(Y ** 2 + X * 2 + Z * 2, "x", 0) == Y ** 2 + Z * 2

    def test_even_power_sign_flip(self):
        assert substitute(X ** 2, "x", -X) == X ** 2

    def test_legendre_chain(self):
        p = substitute(Y ** 2 + X * 2, "x", (X ** 2 - 1) / 4)
        p = substitute(p, "y", X)
        assert p == (X ** 2 * 3 - 1) / 2

    @settings(max_examples=30, deadline=None)
    @given(polys)
    def test_identity_substitution(self, p):
        assert substitute(p, "y", Y) == p


# ──────────────────────────────────────────────────────────────
# Canonical text
# ──────────────────────────────────────────────────────────────

class TestTextFormat:
    def test_golden_order(self):
        p = Y ** 4 - Y ** 3 * 2 + Y ** 2 + X * Y * 24 - X * 12 - Fraction(1, 30)
        assert format_poly(p) == EQ_3_8

    def test_fractional_coefficients(self):
        p = Y ** 4 / 24 + Y ** 3 / 6 + Y ** 2 / 2 + X * Y * 24 + Y + X * 24 + 1
        assert str(p) == "1/24*y^4 + 1/6*y^3 + 1/2*y^2 + 24*x*y + y + 24*x + 1"

    def test_zero_and_negative_leading(self):
        assert str(Poly3.zero()) == "0"
        assert str(-X) == "-x"

    def test_monomial_order_key(self):
        assert sorted([Monomial(1, 0, 0), Monomial(0, 2, 0), Monomial(0, 0, 1)], key=Monomial.sort_key) == [
            Monomial(0, 2, 0), Monomial(1, 0, 0), Monomial(0, 0, 1),
        ]

    def test_parse_round_trip_of_golden(self):
        assert str(parse_poly(EQ_3_8)) == EQ_3_8

    def test_parse_rejects_garbage(self):
        with pytest.raises(InvalidParameter):
            parse_poly("y^2 + w")
