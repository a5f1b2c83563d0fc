"""
LGHAP Power Series - Truncated formal power series in t with Poly3 coefficients.

A series of order N stores c_0..c_N and represents sum c_k t^k (mod t^(N+1)).
Binary operations truncate to the smaller order. Scalar series are series whose
coefficients are constant Poly3 values; there is no separate scalar type.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from lghap.algebra import Poly3, Scalar, Y, Z
from lghap.errors import IndexBeyondOrder, InvalidParameter, NonZeroConstantTerm, ZeroConstantTerm


class PowerSeries:
    """Immutable truncated series; ``coeffs[k]`` is the coefficient of t^k."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Poly3 | Scalar], order: int | None = None):
        values = [Poly3.coerce(c) for c in coeffs]
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise InvalidParameter(f"Series order must be nonnegative, got {order}")
        values = values[: order + 1]
        values += [Poly3.zero()] * (order + 1 - len(values))
        self.order: int = order
        self.coeffs: tuple[Poly3, ...] = tuple(values)

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls([1], order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff: Poly3 | Scalar = 1) -> PowerSeries:
        """``coeff * t^k``."""
        return cls([0] * k + [coeff], order)

    def __getitem__(self, k: int) -> Poly3:
        return ps_coeff(self, k)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        return ps_add(self, other)

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        return ps_sub(self, other)

    def __mul__(self, other: PowerSeries | Poly3 | Scalar) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        return ps_scale(self, other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(f"[{c}]" for c in self.coeffs)
        return f"PowerSeries(order={self.order}: {body})"


# ──────────────────────────────────────────────────────────────
# Builders
# ──────────────────────────────────────────────────────────────

def scalar_series(values: Sequence[Scalar], order: int) -> PowerSeries:
    return PowerSeries([Fraction(v) for v in values], order)


def scaled_exp_series(order: int, scale: Scalar = 1) -> PowerSeries:
    """``scale * e^t``."""
    scale = Fraction(scale)
    return scalar_series([scale / factorial(k) for k in range(order + 1)], order)


def build_c0(m: int, order: int) -> PowerSeries:
    """C_0(-x t^m) = sum_k x^k t^(mk) / (k!)^2, truncated at ``order``."""
    if m < 1:
        raise InvalidParameter(f"m must be >= 1, got {m}")
    coeffs: list[Poly3 | Scalar] = [0] * (order + 1)
    for k in range(order // m + 1):
        coeffs[m * k] = Poly3.monomial(ex=k, coeff=Fraction(1, factorial(k) ** 2))
    return PowerSeries(coeffs, order)


def build_heat_exponent(r: int, order: int) -> PowerSeries:
    """y t + z t^r, the exponent of the Gould-Hopper factor."""
    series = PowerSeries.monomial(1, order, Y) if order >= 1 else PowerSeries([0], order)
    if r <= order:
        series = ps_add(series, PowerSeries.monomial(r, order, Z))
    return series


# ──────────────────────────────────────────────────────────────
# Operations
# ──────────────────────────────────────────────────────────────

def ps_coeff(a: PowerSeries, k: int) -> Poly3:
    if k < 0 or k > a.order:
        raise IndexBeyondOrder(f"Coefficient t^{k} requested from a series of order {a.order}")
    return a.coeffs[k]


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    order = min(a.order, b.order)
    return PowerSeries([a.coeffs[k] + b.coeffs[k] for k in range(order + 1)], order)


def ps_sub(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    order = min(a.order, b.order)
    return PowerSeries([a.coeffs[k] - b.coeffs[k] for k in range(order + 1)], order)


def ps_scale(a: PowerSeries, factor: Poly3 | Scalar) -> PowerSeries:
    return PowerSeries([c * factor for c in a.coeffs], a.order)


def ps_shift(a: PowerSeries, k: int) -> PowerSeries:
    """Multiply by t^k, keeping the order of ``a``."""
    return PowerSeries([0] * k + list(a.coeffs), a.order)


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller order."""
    order = min(a.order, b.order)
    out = [Poly3.zero() for _ in range(order + 1)]
    for i in range(order + 1):
        ai = a.coeffs[i]
        if ai.is_zero:
            continue
        for j in range(order + 1 - i):
            bj = b.coeffs[j]
            if not bj.is_zero:
                out[i + j] = out[i + j] + ai * bj
    return PowerSeries(out, order)


def ps_pow(a: PowerSeries, k: int) -> PowerSeries:
    if k < 0:
        raise InvalidParameter(f"Series powers must be nonnegative, got {k}")
    result = PowerSeries.one(a.order)
    base = a
    while k:
        if k & 1:
            result = ps_mul(result, base)
        k >>= 1
        if k:
            base = ps_mul(base, base)
    return result


def ps_exp(a: PowerSeries) -> PowerSeries:
    """exp(a) for a series without constant term, summed as a^k/k! for k <= order."""
    if not a.coeffs[0].is_zero:
        raise NonZeroConstantTerm(f"exp() needs a zero constant term, got {a.coeffs[0]}")
    result = PowerSeries.one(a.order)
    power = PowerSeries.one(a.order)
    for k in range(1, a.order + 1):
        power = ps_mul(power, a)
        result = ps_add(result, ps_scale(power, Fraction(1, factorial(k))))
    return result


def ps_recip(a: PowerSeries) -> PowerSeries:
    """b with a * b = 1 (mod t^(N+1)); a must start with a nonzero rational constant."""
    c0 = a.coeffs[0]
    if not c0.is_constant or c0.is_zero:
        raise ZeroConstantTerm(f"reciprocal needs a nonzero rational constant term, got {c0}")
    inv = Fraction(1) / c0.constant_term()
    out: list[Poly3] = [Poly3.const(inv)]
    for k in range(1, a.order + 1):
        acc = Poly3.zero()
        for i in range(1, k + 1):
            if not a.coeffs[i].is_zero:
                acc = acc + a.coeffs[i] * out[k - i]
        out.append(acc.scale(-inv))
    return PowerSeries(out, a.order)


def ps_derive(a: PowerSeries) -> PowerSeries:
    """Termwise d/dt; the order drops by one (an order-0 series derives to order-0 zero)."""
    if a.order == 0:
        return PowerSeries([0], 0)
    return PowerSeries([a.coeffs[k + 1] * (k + 1) for k in range(a.order)], a.order - 1)


def egf_coeff(s: PowerSeries, n: int) -> Poly3:
    """n! * [t^n] s."""
    return ps_coeff(s, n) * factorial(n)
