"""
LGHAP Appell Families - Registry of Appell sequences built from their A(t) series.

Each family is a frozen ``AppellFamily`` descriptor; A(t) is produced on demand
to any truncation order from exact scalar series (reciprocals, products, powers
of e^t), then reused for Appell numbers, classical polynomials and the
beta-coefficients of the determinantal definition.

Family-spec grammar::

    name[:key=value[,key=value]*]

  names   bernoulli, euler, genocchi, miller-lee, trunc-exp, modified-laguerre,
          gen-bernoulli, gen-euler, apostol-bernoulli, apostol-euler
  keys    alpha (nonnegative integer), lambda (p/q or integer),
          s (integer >= -1), beta (positive integer)

``trunc-exp`` is ``miller-lee:s=0`` and ``modified-laguerre:beta=B`` is
``miller-lee:s=B-1``. The Miller-Lee branch is the only paper-literal family:
its base polynomials carry ordinary (t^n) normalization.
"""

from __future__ import annotations

import logging
import re
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from pydantic import ValidationError

from lghap.algebra import Poly3, parse_rational
from lghap.errors import DegenerateFamily, InvalidParameter, NormalizationMismatch, UnknownFamily
from lghap.powerseries import (
    PowerSeries,
    build_heat_exponent,
    ps_exp,
    ps_mul,
    ps_pow,
    ps_recip,
    ps_shift,
    ps_sub,
    scalar_series,
    scaled_exp_series,
)
from lghap.schemas import AppellFamily, BetaCoeffs, FamilyName, Normalization

logger = logging.getLogger("lghap")

_INT_RE = re.compile(r"^[+-]?\d+$")


# ──────────────────────────────────────────────────────────────
# Registry
# ──────────────────────────────────────────────────────────────

FAMILY_TABLE: dict[str, dict[str, str]] = {
    "bernoulli": {"A(t)": "t/(e^t-1)", "keys": "", "normalization": "egf"},
    "euler": {"A(t)": "2/(e^t+1)", "keys": "", "normalization": "egf"},
    "genocchi": {"A(t)": "2t/(e^t+1)", "keys": "", "normalization": "egf"},
    "miller-lee": {"A(t)": "1/(1-t)^(s+1)", "keys": "s", "normalization": "paper-literal"},
    "trunc-exp": {"A(t)": "1/(1-t)", "keys": "", "normalization": "paper-literal"},
    "modified-laguerre": {"A(t)": "1/(1-t)^beta", "keys": "beta", "normalization": "paper-literal"},
    "gen-bernoulli": {"A(t)": "(t/(e^t-1))^alpha", "keys": "alpha", "normalization": "egf"},
    "gen-euler": {"A(t)": "(2/(e^t+1))^alpha", "keys": "alpha", "normalization": "egf"},
    "apostol-bernoulli": {
        "A(t)": "(t/(lambda*e^t-1))^alpha", "keys": "alpha, lambda", "normalization": "egf",
    },
    "apostol-euler": {
        "A(t)": "(2/(lambda*e^t+1))^alpha", "keys": "alpha, lambda", "normalization": "egf",
    },
}

_ALLOWED_KEYS: dict[str, set[str]] = {
    "bernoulli": set(),
    "euler": set(),
    "genocchi": set(),
    "miller-lee": {"s"},
    "trunc-exp": set(),
    "modified-laguerre": {"beta"},
    "gen-bernoulli": {"alpha"},
    "gen-euler": {"alpha"},
    "apostol-bernoulli": {"alpha", "lambda"},
    "apostol-euler": {"alpha", "lambda"},
}


def list_families() -> list[dict[str, str]]:
    """Registry rows for display, in registration order."""
    return [{"name": name, **row} for name, row in FAMILY_TABLE.items()]


def _parse_int(key: str, value: str) -> int:
    if not _INT_RE.match(value):
        raise InvalidParameter(f"'{key}' must be an integer, got {value!r}")
    return int(value)


def make_family(spec: str) -> AppellFamily:
    """Parse a family-spec string into a validated ``AppellFamily``."""
    text = spec.strip()
    name_part, has_params, param_part = text.partition(":")
    name = name_part.strip().lower()
    if name not in _ALLOWED_KEYS:
        known = ", ".join(FAMILY_TABLE)
        raise UnknownFamily(f"Unknown family '{name}'. Known families: {known}")

    params: dict[str, str] = {}
    if has_params:
        for item in param_part.split(","):
            key, sep, value = (part.strip() for part in item.partition("="))
            if not sep or not key or not value:
                raise InvalidParameter(f"Malformed parameter '{item}' in family-spec {spec!r}")
            if key in params:
                raise InvalidParameter(f"Parameter '{key}' given twice in {spec!r}")
            if key not in _ALLOWED_KEYS[name]:
                allowed = ", ".join(sorted(_ALLOWED_KEYS[name])) or "none"
                raise InvalidParameter(f"'{name}' does not take '{key}' (allowed: {allowed})")
            params[key] = value

    fields: dict[str, object] = {"label": text}
    if name == "trunc-exp":
        fields.update(name=FamilyName.MILLER_LEE, s=0)
    elif name == "modified-laguerre":
        if "beta" not in params:
            raise InvalidParameter("modified-laguerre requires beta")
        beta = _parse_int("beta", params["beta"])
        if beta < 1:
            raise InvalidParameter(f"beta must be a positive integer, got {beta}")
        fields.update(name=FamilyName.MILLER_LEE, s=beta - 1)
    elif name == "miller-lee":
        if "s" not in params:
            raise InvalidParameter("miller-lee requires s")
        fields.update(name=FamilyName.MILLER_LEE, s=_parse_int("s", params["s"]))
    else:
        fields["name"] = FamilyName(name)
        if "alpha" in params:
            fields["alpha"] = _parse_int("alpha", params["alpha"])
        if "lambda" in params:
            fields["lam"] = parse_rational(params["lambda"])
    if fields["name"] == FamilyName.MILLER_LEE:
        fields["normalization"] = Normalization.PAPER_LITERAL

    try:
        family = AppellFamily(**fields)
    except ValidationError as exc:
        reason = "; ".join(err["msg"] for err in exc.errors())
        raise InvalidParameter(f"Invalid family-spec {spec!r}: {reason}") from exc
    logger.debug("Family parsed: %s -> %s", spec, family)
    return family


def require_egf(f: AppellFamily, what: str) -> None:
    if f.normalization != Normalization.EGF:
        raise NormalizationMismatch(
            f"{what} is defined for egf-normalized families only; '{f.display}' is paper-literal"
        )


# ──────────────────────────────────────────────────────────────
# A(t) builders
# ──────────────────────────────────────────────────────────────

def _bernoulli(order: int) -> PowerSeries:
    # g(t) = (e^t - 1)/t = sum t^k/(k+1)!
    g = scalar_series([Fraction(1, factorial(k + 1)) for k in range(order + 1)], order)
    return ps_recip(g)


def _euler(order: int, lam: Fraction = Fraction(1)) -> PowerSeries:
    # g(t) = (lambda e^t + 1)/2
    g = scaled_exp_series(order, lam / 2) + PowerSeries.one(order) * Fraction(1, 2)
    return ps_recip(g)


def _apostol_bernoulli_base(order: int, lam: Fraction) -> PowerSeries:
    if lam == 1:
        return _bernoulli(order)
    # lambda e^t - 1 has the nonzero constant lambda - 1, so t/(lambda e^t - 1) starts at t
    return ps_shift(ps_recip(ps_sub(scaled_exp_series(order, lam), PowerSeries.one(order))), 1)


def _miller_lee(order: int, s: int) -> PowerSeries:
    one_minus_t = scalar_series([1, -1], order)
    return ps_recip(ps_pow(one_minus_t, s + 1))


_A_BUILDERS: dict[FamilyName, Callable[[AppellFamily, int], PowerSeries]] = {
    FamilyName.BERNOULLI: lambda f, n: _bernoulli(n),
    FamilyName.EULER: lambda f, n: _euler(n),
    FamilyName.GENOCCHI: lambda f, n: ps_shift(_euler(n), 1),
    FamilyName.MILLER_LEE: lambda f, n: _miller_lee(n, f.s),
    FamilyName.GEN_BERNOULLI: lambda f, n: ps_pow(_bernoulli(n), f.alpha),
    FamilyName.GEN_EULER: lambda f, n: ps_pow(_euler(n), f.alpha),
    FamilyName.APOSTOL_BERNOULLI: lambda f, n: ps_pow(_apostol_bernoulli_base(n, f.lam), f.alpha),
    FamilyName.APOSTOL_EULER: lambda f, n: ps_pow(_euler(n, f.lam), f.alpha),
}


@lru_cache(maxsize=512)
def family_A_series(f: AppellFamily, order: int) -> PowerSeries:
    """A(t) mod t^(order+1) with exact rational coefficients."""
    if order < 0:
        raise InvalidParameter(f"Series order must be nonnegative, got {order}")
    logger.debug("Building A(t) for %s to order %d", f.display, order)
    return _A_BUILDERS[f.name](f, order)


# ──────────────────────────────────────────────────────────────
# Numbers & polynomials
# ──────────────────────────────────────────────────────────────

@lru_cache(maxsize=512)
def _appell_numbers(f: AppellFamily, nmax: int) -> tuple[Fraction, ...]:
    series = family_A_series(f, nmax)
    return tuple(series.coeffs[k].constant_term() * factorial(k) for k in range(nmax + 1))


def appell_numbers(f: AppellFamily, nmax: int) -> list[Fraction]:
    """A_0..A_nmax with A_k = k! [t^k] A(t)."""
    return list(_appell_numbers(f, nmax))


def leading_number(f: AppellFamily) -> Fraction:
    return _appell_numbers(f, 0)[0]


@lru_cache(maxsize=1024)
def appell_poly(f: AppellFamily, n: int) -> Poly3:
    """Classical A_n(y) = sum_k C(n,k) A_k y^(n-k)."""
    require_egf(f, "appell_poly")
    numbers = _appell_numbers(f, n)
    return Poly3({(0, n - k, 0): comb(n, k) * numbers[k] for k in range(n + 1)})


@lru_cache(maxsize=1024)
def base_poly(f: AppellFamily, n: int) -> Poly3:
    """Per-family base polynomial injected into the series template.

    egf families: A_n(y). Paper-literal families: [t^n] of A(t) exp(yt), e.g. the
    truncated exponential e_n(y) = sum_{k<=n} y^k/k! for s = 0.
    """
    if f.normalization == Normalization.EGF:
        return appell_poly(f, n)
    product = ps_mul(family_A_series(f, n), ps_exp(build_heat_exponent(n + 1, n)))
    return product.coeffs[n]


def beta_coeffs(f: AppellFamily, nmax: int) -> BetaCoeffs:
    """beta_0 = 1/A_0, beta_n = -(1/A_0) sum_{k=1}^n C(n,k) A_k beta_(n-k)."""
    numbers = _appell_numbers(f, nmax)
    if numbers[0] == 0:
        raise DegenerateFamily(
            f"'{f.display}' has A_0 = 0; beta-coefficients need A_0 != 0"
        )
    inv = Fraction(1) / numbers[0]
    betas = [inv]
    for n in range(1, nmax + 1):
        acc = sum((comb(n, k) * numbers[k] * betas[n - k] for k in range(1, n + 1)), Fraction(0))
        betas.append(-inv * acc)
    return BetaCoeffs(values=tuple(betas))


def clear_caches() -> None:
    for cached in (family_A_series, _appell_numbers, appell_poly, base_poly):
        cached.cache_clear()
