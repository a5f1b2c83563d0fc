"""
LGHAP Kernel - Series definitions of LGHP, GHP, 2VGLP and LGHAP.

Three independent constructions of the LGHAP are kept side by side:
  1. lghap_series    n! sum_{l,k} base_(n-rl-mk)(y) z^l x^k / (l! (k!)^2 (n-rl-mk)!)
  2. lghap_binomial  sum_k C(n,k) LGHP_(n-k) A_k
  3. lghap_gf        n! [t^n] A(t) C_0(-x t^m) exp(y t + z t^r)

The series template injects the per-family base polynomial, so egf and
paper-literal families share one code path. The binomial and generating-function
paths are egf-only.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from lghap.algebra import Poly3, poly_sum
from lghap.appell import appell_numbers, base_poly, family_A_series, require_egf
from lghap.errors import InvalidParameter
from lghap.operators import apply_M_lgh, exp_op_apply
from lghap.powerseries import build_c0, build_heat_exponent, egf_coeff, ps_exp, ps_mul
from lghap.schemas import AppellFamily, LghParams, XAction

logger = logging.getLogger("lghap")


def _check_index(n: int) -> None:
    if n < 0:
        raise InvalidParameter(f"Polynomial index must be nonnegative, got {n}")


# ──────────────────────────────────────────────────────────────
# Laguerre-Gould Hopper family
# ──────────────────────────────────────────────────────────────

@lru_cache(maxsize=1024)
def lghp(p: LghParams, n: int) -> Poly3:
    """n! sum_{rk+ml<=n} z^k x^l y^(n-rk-ml) / (k! (l!)^2 (n-rk-ml)!)."""
    _check_index(n)
    nf = factorial(n)
    terms: dict[tuple[int, int, int], Fraction] = {}
    for k in range(n // p.r + 1):
        for l in range((n - p.r * k) // p.m + 1):
            rem = n - p.r * k - p.m * l
            terms[(l, rem, k)] = Fraction(nf, factorial(k) * factorial(l) ** 2 * factorial(rem))
    return Poly3(terms)


def ghp(r: int, n: int) -> Poly3:
    """Gould-Hopper H_n^(r)(y, z)."""
    _check_index(n)
    if r < 1:
        raise InvalidParameter(f"r must be >= 1, got {r}")
    nf = factorial(n)
    return Poly3({
        (0, n - r * k, k): Fraction(nf, factorial(k) * factorial(n - r * k))
        for k in range(n // r + 1)
    })


def glp(m: int, n: int) -> Poly3:
    """2-variable generalized Laguerre mL_n(x, y)."""
    _check_index(n)
    if m < 1:
        raise InvalidParameter(f"m must be >= 1, got {m}")
    nf = factorial(n)
    return Poly3({
        (l, n - m * l, 0): Fraction(nf, factorial(l) ** 2 * factorial(n - m * l))
        for l in range(n // m + 1)
    })


def lghp_by_monomiality(p: LghParams, n: int) -> Poly3:
    """M_LH^n {1}."""
    _check_index(n)
    q = Poly3.const(1)
    for _ in range(n):
        q = apply_M_lgh(p, q)
    return q


def lghp_operational(p: LghParams, n: int) -> Poly3:
    """exp(Dx^-1 d_y^m + z d_y^r) {y^n}, as two commuting exponentials."""
    _check_index(n)
    q = exp_op_apply(XAction.MULTIPLY_Z, p.r, Poly3.monomial(ey=n))
    return exp_op_apply(XAction.INV_DERIVE_X, p.m, q)


def lghp_from_glp(p: LghParams, n: int) -> Poly3:
    """exp(z d_y^r) mL_n(x, y)."""
    return exp_op_apply(XAction.MULTIPLY_Z, p.r, glp(p.m, n))


def lghp_from_ghp(p: LghParams, n: int) -> Poly3:
    """exp(Dx^-1 d_y^m) H_n^(r)(y, z)."""
    return exp_op_apply(XAction.INV_DERIVE_X, p.m, ghp(p.r, n))


# ──────────────────────────────────────────────────────────────
# Appell-based families
# ──────────────────────────────────────────────────────────────

@lru_cache(maxsize=1024)
def lghap_series(f: AppellFamily, p: LghParams, n: int) -> Poly3:
    """Reference definition of the LGHAP (both normalizations)."""
    _check_index(n)
    nf = factorial(n)
    pieces: list[Poly3] = []
    for l in range(n // p.r + 1):
        for k in range(n // p.m + 1):
            rem = n - p.r * l - p.m * k
            if rem < 0:
                continue
            weight = Fraction(nf, factorial(l) * factorial(k) ** 2 * factorial(rem))
            pieces.append(base_poly(f, rem).shift(ex=k, ez=l, coeff=weight))
    result = poly_sum(pieces)
    logger.debug("lghap_series %s (m=%d, r=%d) n=%d: %d terms", f.display, p.m, p.r, n, len(result))
    return result


def _binomial_convolution(f: AppellFamily, n: int, base: list[Poly3]) -> Poly3:
    numbers = appell_numbers(f, n)
    return poly_sum(base[n - k].scale(comb(n, k) * numbers[k]) for k in range(n + 1))


def lghap_binomial(f: AppellFamily, p: LghParams, n: int) -> Poly3:
    """sum_k C(n,k) LGHP_(n-k) A_k."""
    require_egf(f, "lghap_binomial")
    _check_index(n)
    return _binomial_convolution(f, n, [lghp(p, j) for j in range(n + 1)])


def lghap_gf(f: AppellFamily, p: LghParams, n: int) -> Poly3:
    """n! [t^n] of the generating function A(t) C_0(-x t^m) exp(y t + z t^r)."""
    require_egf(f, "lghap_gf")
    _check_index(n)
    series = ps_mul(family_A_series(f, n), build_c0(p.m, n))
    series = ps_mul(series, ps_exp(build_heat_exponent(p.r, n)))
    return egf_coeff(series, n)


def ghap(f: AppellFamily, r: int, n: int) -> Poly3:
    """Gould-Hopper based Appell polynomial sum_k C(n,k) H_(n-k)^(r)(y,z) A_k."""
    require_egf(f, "ghap")
    _check_index(n)
    return _binomial_convolution(f, n, [ghp(r, j) for j in range(n + 1)])


def glap(f: AppellFamily, m: int, n: int) -> Poly3:
    """2-variable generalized Laguerre-Appell polynomial sum_k C(n,k) mL_(n-k)(x,y) A_k."""
    require_egf(f, "glap")
    _check_index(n)
    return _binomial_convolution(f, n, [glp(m, j) for j in range(n + 1)])


def clear_caches() -> None:
    lghp.cache_clear()
    lghap_series.cache_clear()
