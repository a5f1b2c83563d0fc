"""
LGHAP Special Cases - Plain variable-substitution reductions and their classical oracles.

T1 rows reduce the LGHP, T2 rows reduce the LGHAP of a chosen family.
A row is an ordered list of substitutions ``var -> polynomial text``; rows that
need operator-valued substitutions (y -> -Dx^-1, x -> y d_y y, ...) are
registered as unsupported so a request for them fails loudly.

Every supported row has an oracle built independently of the series kernel:
T1 oracles come from classical formulas or from the operator construction
M_LH^n{1}; T2 oracles are the binomial convolution of the T1 oracle
with the family's Appell numbers (substitution commutes with that convolution
because the A_k are constants).
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Optional

from lghap.algebra import Poly3, X, parse_poly, poly_sum, substitute
from lghap.appell import appell_numbers, require_egf
from lghap.config import get_config
from lghap.errors import InvalidParameter, UnsupportedCase
from lghap.lgh import ghp, glp, lghap_series, lghp, lghp_by_monomiality
from lghap.schemas import AppellFamily, LghParams, ReductionCase, Variable

logger = logging.getLogger("lghap")


# ──────────────────────────────────────────────────────────────
# Registry
# ──────────────────────────────────────────────────────────────

_V = Variable

_ROWS: list[tuple[str, tuple[tuple[Variable, str], ...], dict, str]] = [
    ("I", ((_V.X, "-x"),), {"fixed_m": 1, "fixed_r": 2},
     "Hermite-Laguerre polynomials, x -> -x"),
    ("II", ((_V.Z, "-1/2"), (_V.X, "-x")), {"fixed_m": 1, "fixed_r": 2},
     "Laguerre-Hermite with z = -1/2, x -> -x"),
    ("III", ((_V.Y, "1"), (_V.Z, "y"), (_V.X, "-x")), {"fixed_m": 1, "fixed_r": 2},
     "Hermite-Laguerre with y = 1, z -> y, x -> -x"),
    ("IV", ((_V.X, "0"),), {},
     "Gould-Hopper polynomials, x = 0"),
    ("V", ((_V.Z, "0"),), {},
     "2-variable generalized Laguerre polynomials, z = 0"),
    ("VII", ((_V.X, "0"), (_V.Y, "x"), (_V.Z, "y")), {"r_offset": -1},
     "generalized Chebyshev U_n^(m), r = m - 1, x = 0, y -> x, z -> y"),
    ("VIII", ((_V.Z, "0"), (_V.X, "-x")), {"fixed_m": 1},
     "2-variable Laguerre polynomials, m = 1, z = 0, x -> -x"),
    ("XI", ((_V.X, "0"),), {"fixed_r": 2},
     "2-variable Hermite Kampe de Feriet polynomials, r = 2, x = 0"),
    ("XIII", ((_V.Z, "0"), (_V.X, "1/4*x^2 - 1/4"), (_V.Y, "x")), {"fixed_m": 2},
     "Legendre polynomials, m = 2, z = 0, x -> (x^2 - 1)/4, y -> x"),
]

_OPERATOR_ROWS = ("VI", "IX", "X", "XII", "XIV", "XV")

CASES: dict[str, ReductionCase] = {
    f"T{table}-{row}": ReductionCase(
        case_id=f"T{table}-{row}",
        table=table,
        substitutions=subs,
        description=description if table == 1 else f"Appell counterpart: {description}",
        **constraints,
    )
    for table in (1, 2)
    for row, subs, constraints, description in _ROWS
}

UNSUPPORTED: frozenset[str] = frozenset(
    f"T{table}-{row}" for table in (1, 2) for row in _OPERATOR_ROWS
)


def list_cases() -> list[ReductionCase]:
    return list(CASES.values())


def get_case(case_id: str) -> ReductionCase:
    key = case_id.strip().upper()
    if key in UNSUPPORTED:
        raise UnsupportedCase(
            f"Case {key} needs an operator-valued substitution "
            "(y -> -Dx^-1 or x, z -> y d_y y) and has no polynomial reduction"
        )
    if key not in CASES:
        raise InvalidParameter(f"Unknown special case '{case_id}'. Known: {', '.join(CASES)}")
    return CASES[key]


def resolve_params(case: ReductionCase, params: Optional[LghParams] = None) -> LghParams:
    """Apply the row's index constraints; unconstrained indices come from ``params`` or config."""
    cfg = get_config().kernel
    m = case.fixed_m or (params.m if params else cfg.default_m)
    r = case.fixed_r or (params.r if params else cfg.default_r)
    if case.r_offset is not None:
        r = m + case.r_offset
    if r < 1:
        raise InvalidParameter(f"Case {case.case_id} needs r = m{case.r_offset:+d} >= 1, got m = {m}")
    resolved = LghParams(m=m, r=r)
    if params is not None and resolved != params:
        logger.debug("Case %s fixes indices: (m=%d, r=%d) -> (m=%d, r=%d)",
                     case.case_id, params.m, params.r, m, r)
    return resolved


def apply_substitutions(case: ReductionCase, q: Poly3) -> Poly3:
    for var, text in case.substitutions:
        q = substitute(q, var, parse_poly(text))
    return q


def reduce(
    case: ReductionCase | str,
    n: int,
    params: Optional[LghParams] = None,
    family: Optional[AppellFamily] = None,
) -> Poly3:
    """LGHP (T1 rows) or LGHAP of ``family`` (T2 rows), then the row's substitutions."""
    if isinstance(case, str):
        case = get_case(case)
    p = resolve_params(case, params)
    if case.table == 1:
        base = lghp(p, n)
    else:
        if family is None:
            raise InvalidParameter(f"Case {case.case_id} reduces an LGHAP and needs a family")
        base = lghap_series(family, p, n)
    return apply_substitutions(case, base)


# ──────────────────────────────────────────────────────────────
# Oracles
# ──────────────────────────────────────────────────────────────

def legendre_oracle(n: int) -> Poly3:
    """P_n(x) from (k+1) P_(k+1) = (2k+1) x P_k - k P_(k-1)."""
    if n < 0:
        raise InvalidParameter(f"Polynomial index must be nonnegative, got {n}")
    prev, cur = Poly3.const(1), X
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, (cur * X).scale(Fraction(2 * k + 1, k + 1)) - prev.scale(Fraction(k, k + 1))
    return cur


def hermite_kdf_oracle(n: int) -> Poly3:
    """H_n(y, z) = n! sum_k z^k y^(n-2k) / (k! (n-2k)!)."""
    return ghp(2, n)


def laguerre_2v_oracle(n: int) -> Poly3:
    """L_n(x, y) = n! sum_k (-1)^k x^k y^(n-k) / ((k!)^2 (n-k)!)."""
    if n < 0:
        raise InvalidParameter(f"Polynomial index must be nonnegative, got {n}")
    nf = factorial(n)
    return Poly3({
        (k, n - k, 0): Fraction((-1) ** k * nf, factorial(k) ** 2 * factorial(n - k))
        for k in range(n + 1)
    })


def chebyshev_u_oracle(m: int, n: int) -> Poly3:
    """Gould-Hopper H_n^(m-1) with y -> x, z -> y."""
    if m < 2:
        raise InvalidParameter(f"Chebyshev reduction needs m >= 2, got {m}")
    renamed = {(ey, ez, 0): c for (ex, ey, ez), c in ghp(m - 1, n).terms.items()}
    return Poly3(renamed)


def _operational_oracle(case: ReductionCase, p: LghParams, n: int) -> Poly3:
    # the x -> -x rows are checked against the operator construction of the LGHP
    return apply_substitutions(case, lghp_by_monomiality(p, n))


_T1_ORACLES: dict[str, Callable[[ReductionCase, LghParams, int], Poly3]] = {
    "I": _operational_oracle,
    "II": _operational_oracle,
    "III": _operational_oracle,
    "IV": lambda case, p, n: ghp(p.r, n),
    "V": lambda case, p, n: glp(p.m, n),
    "VII": lambda case, p, n: chebyshev_u_oracle(p.m, n),
    "VIII": lambda case, p, n: laguerre_2v_oracle(n),
    "XI": lambda case, p, n: hermite_kdf_oracle(n),
    "XIII": lambda case, p, n: legendre_oracle(n),
}


def case_oracle(
    case: ReductionCase | str,
    n: int,
    params: Optional[LghParams] = None,
    family: Optional[AppellFamily] = None,
) -> Poly3:
    """Independent value that ``reduce`` must match."""
    if isinstance(case, str):
        case = get_case(case)
    p = resolve_params(case, params)
    row = case.case_id.split("-", 1)[1]
    oracle = _T1_ORACLES[row]
    if case.table == 1:
        return oracle(case, p, n)
    if family is None:
        raise InvalidParameter(f"Case {case.case_id} reduces an LGHAP and needs a family")
    require_egf(family, f"oracle of {case.case_id}")
    numbers = appell_numbers(family, n)
    return poly_sum(
        oracle(case, p, n - k).scale(comb(n, k) * numbers[k]) for k in range(n + 1)
    )
