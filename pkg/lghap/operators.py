"""
LGHAP Operators - Monomiality operator calculus on exact Poly3 values.

  M_LH   = y + m Dx^-1 d_y^(m-1) + r z d_y^(r-1)       multiplicative operator (LGHP)
  P      = d_y                                          derivative operator
  M_LHA  = M_LH - (g'/g)(d_y),  g = 1/A                 multiplicative operator (LGHAP)

Everything here acts on polynomials, so operator series in d_y always terminate:
d_y^k annihilates a polynomial whose y-degree is below k.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable

from lghap.algebra import Poly3, Scalar, Z, inv_derive_x, partial_derive
from lghap.appell import family_A_series, leading_number, require_egf
from lghap.errors import DegenerateFamily, InvalidParameter
from lghap.powerseries import ps_derive, ps_mul, ps_recip
from lghap.schemas import AppellFamily, LghParams, XAction

logger = logging.getLogger("lghap")


class DiffOpSeries:
    """sum_k c_k d_y^k truncated at ``order``; exact on polynomials of y-degree <= order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: tuple[Fraction, ...]):
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)
        self.order: int = len(self.coeffs) - 1

    def apply(self, q: Poly3) -> Poly3:
        if q.degree_in("y") > self.order:
            logger.warning(
                "Operator series of order %d applied to y-degree %d; result is truncated",
                self.order, q.degree_in("y"),
            )
        result = Poly3.zero()
        derived = q
        for c in self.coeffs:
            if derived.is_zero:
                break
            if c:
                result = result + derived.scale(c)
            derived = partial_derive(derived, "y")
        return result

    def __neg__(self) -> DiffOpSeries:
        return DiffOpSeries(tuple(-c for c in self.coeffs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffOpSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"DiffOpSeries({', '.join(str(c) for c in self.coeffs)})"


# ──────────────────────────────────────────────────────────────
# Monomiality operators
# ──────────────────────────────────────────────────────────────

def apply_P(q: Poly3) -> Poly3:
    return partial_derive(q, "y")


def apply_M_lgh(p: LghParams, q: Poly3) -> Poly3:
    """(y + m Dx^-1 d_y^(m-1) + r z d_y^(r-1)) q."""
    result = q.shift(ey=1)
    result = result + inv_derive_x(partial_derive(q, "y", p.m - 1)).scale(p.m)
    result = result + partial_derive(q, "y", p.r - 1).shift(ez=1, coeff=p.r)
    return result


def _require_appell(f: AppellFamily, what: str) -> None:
    require_egf(f, what)
    if leading_number(f) == 0:
        raise DegenerateFamily(f"{what} needs A_0 != 0; '{f.display}' has A_0 = 0")


def gog_series(f: AppellFamily, order: int) -> DiffOpSeries:
    """Coefficients of g'(t)/g(t) with g = 1/A(t), read as a series in d_y."""
    _require_appell(f, "gog_series")
    g = ps_recip(family_A_series(f, order + 1))
    ratio = ps_mul(ps_derive(g), ps_recip(g))
    return DiffOpSeries(tuple(c.constant_term() for c in ratio.coeffs))


def aoa_series(f: AppellFamily, order: int) -> DiffOpSeries:
    """A'(t)/A(t) read in d_y; equals -gog_series formally."""
    _require_appell(f, "aoa_series")
    a = family_A_series(f, order + 1)
    ratio = ps_mul(ps_derive(a), ps_recip(a))
    return DiffOpSeries(tuple(c.constant_term() for c in ratio.coeffs))


def apply_M_lgha(f: AppellFamily, p: LghParams, q: Poly3) -> Poly3:
    correction = gog_series(f, max(q.degree_in("y"), 0)).apply(q)
    return apply_M_lgh(p, q) - correction


# ──────────────────────────────────────────────────────────────
# Identities as residuals
# ──────────────────────────────────────────────────────────────

def commutator_check(p: LghParams, q: Poly3) -> Poly3:
    """P(M q) - M(P q) - q; zero on every polynomial."""
    return apply_P(apply_M_lgh(p, q)) - apply_M_lgh(p, apply_P(q)) - q


def monomiality_residual(p: LghParams, n: int, q: Poly3) -> Poly3:
    """M P q - n q."""
    return apply_M_lgh(p, apply_P(q)) - q.scale(n)


def ode_residual_lghp(p: LghParams, n: int, q: Poly3) -> Poly3:
    """(m d_y^m + r z d_x d_y^r + y d_x d_y - n d_x) q."""
    dx = partial_derive(q, "x")
    residual = partial_derive(q, "y", p.m).scale(p.m)
    residual = residual + partial_derive(dx, "y", p.r).shift(ez=1, coeff=p.r)
    residual = residual + partial_derive(dx, "y").shift(ey=1)
    return residual - dx.scale(n)


def ode_residual_lghap(f: AppellFamily, p: LghParams, n: int, q: Poly3) -> Poly3:
    """(y d_y + m Dx^-1 d_y^m + r z d_y^r - (g'/g)(d_y) d_y - n) q."""
    dy = apply_P(q)
    residual = dy.shift(ey=1)
    residual = residual + inv_derive_x(partial_derive(q, "y", p.m)).scale(p.m)
    residual = residual + partial_derive(q, "y", p.r).shift(ez=1, coeff=p.r)
    residual = residual - gog_series(f, max(dy.degree_in("y"), 0)).apply(dy)
    return residual - q.scale(n)


def heat_residual_z(p: LghParams, q: Poly3) -> Poly3:
    """d_y^r q - d_z q."""
    return partial_derive(q, "y", p.r) - partial_derive(q, "z")


def heat_residual_x(p: LghParams, q: Poly3) -> Poly3:
    """d_y^m q - d_x(x d_x q)."""
    return partial_derive(q, "y", p.m) - partial_derive(partial_derive(q, "x").shift(ex=1), "x")


# ──────────────────────────────────────────────────────────────
# Exponential operators
# ──────────────────────────────────────────────────────────────

_X_ACTIONS: dict[XAction, Callable[[Poly3], Poly3]] = {
    XAction.NONE: lambda q: q,
    XAction.INV_DERIVE_X: lambda q: inv_derive_x(q),
    XAction.MULTIPLY_Z: lambda q: q * Z,
}


def exp_op_apply(x_action: XAction | str, stride: int, q: Poly3, coeff: Scalar = 1) -> Poly3:
    """exp(coeff * Omega * d_y^stride) q = sum_k (coeff Omega)^k d_y^(stride k) q / k!.

    Omega is the identity, Dx^-1 or multiplication by z; each commutes with d_y.
    """
    if stride < 1:
        raise InvalidParameter(f"stride must be >= 1, got {stride}")
    action = _X_ACTIONS[XAction(x_action)]
    coeff = Fraction(coeff)
    result = q
    term = q
    k = 0
    while True:
        k += 1
        derived = partial_derive(term, "y", stride)
        if derived.is_zero:
            break
        term = action(derived).scale(coeff / k)
        result = result + term
    return result


def crofton_check(fy: Poly3, lam: Scalar, m: int) -> bool:
    """f(y + m lam d_y^(m-1)){1} == exp(lam d_y^m){f(y)}."""
    if m < 2:
        raise InvalidParameter(f"Crofton identity needs m >= 2, got {m}")
    if fy.degree_in("x") > 0 or fy.degree_in("z") > 0:
        raise InvalidParameter(f"Crofton identity takes a polynomial in y only, got {fy}")
    lam = Fraction(lam)

    def shifted_y(q: Poly3) -> Poly3:
        return q.shift(ey=1) + partial_derive(q, "y", m - 1).scale(m * lam)

    powers = [Poly3.const(1)]
    for _ in range(max(fy.degree_in("y"), 0)):
        powers.append(shifted_y(powers[-1]))
    lhs = Poly3.zero()
    for mono, c in fy.items():
        lhs = lhs + powers[mono.ey].scale(c)
    rhs = exp_op_apply(XAction.NONE, m, fy, coeff=lam)
    logger.debug("Crofton check m=%d lambda=%s: lhs=%s rhs=%s", m, lam, lhs, rhs)
    return lhs == rhs
