"""
LGHAP Verification - Cross-checks every definition of the LGHAP against the series reference.

Methods:
  • series    - the reference definition itself (always evaluated)
  • binomial  - binomial convolution of LGHP with Appell numbers
  • gf        - generating-function coefficient extraction
  • det       - Hessenberg determinant
  • op        - exponential-operator representations (composite, from the z = 0
                slice, from the x = 0 slice)
  • ode       - LGHP and LGHAP differential equations
  • mono      - monomiality: M, P recurrences, commutator, M P = n
  • heat      - heat-type relations in z and in x

Definitions that do not apply to a family (paper-literal normalization, or
A_0 = 0 where g = 1/A is needed) are reported as skipped, never as failures.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional

from lghap.algebra import Poly3, partial_derive
from lghap.appell import appell_poly, require_egf
from lghap.config import get_config
from lghap.determinant import lghap_det
from lghap.errors import DegenerateFamily, LGHAPError, NormalizationMismatch, UnsupportedCase
from lghap.lgh import ghap, glap, lghap_binomial, lghap_gf, lghap_series, lghp
from lghap.operators import (
    apply_M_lgh,
    apply_M_lgha,
    commutator_check,
    exp_op_apply,
    heat_residual_x,
    heat_residual_z,
    monomiality_residual,
    ode_residual_lghap,
    ode_residual_lghp,
)
from lghap.schemas import (
    AppellFamily,
    CaseResult,
    CheckResult,
    CheckStatus,
    LghParams,
    Method,
    VerificationReport,
    XAction,
)
from lghap.special_cases import case_oracle, get_case, list_cases, reduce

logger = logging.getLogger("lghap")

_METHOD_ORDER = {method: i for i, method in enumerate(Method)}


# ──────────────────────────────────────────────────────────────
# Checks
# ──────────────────────────────────────────────────────────────
# Each check returns the list of mismatches it found; empty means passed.

def _compare(label: str, got: Poly3, want: Poly3) -> list[str]:
    return [] if got == want else [f"{label}: got {got}, expected {want}"]


def _zero(label: str, residual: Poly3) -> list[str]:
    return [] if residual.is_zero else [f"{label} residual {residual}"]


def _check_binomial(f: AppellFamily, p: LghParams, n: int, ref: Poly3) -> list[str]:
    return _compare("binomial", lghap_binomial(f, p, n), ref)


def _check_gf(f: AppellFamily, p: LghParams, n: int, ref: Poly3) -> list[str]:
    return _compare("gf", lghap_gf(f, p, n), ref)


def _check_det(f: AppellFamily, p: LghParams, n: int, ref: Poly3) -> list[str]:
    return _compare("det", lghap_det(f, p, n), ref)


def _check_op(f: AppellFamily, p: LghParams, n: int, ref: Poly3) -> list[str]:
    require_egf(f, "op")
    composite = exp_op_apply(
        XAction.INV_DERIVE_X, p.m, exp_op_apply(XAction.MULTIPLY_Z, p.r, appell_poly(f, n))
    )
    from_z_slice = exp_op_apply(XAction.MULTIPLY_Z, p.r, glap(f, p.m, n))
    from_x_slice = exp_op_apply(XAction.INV_DERIVE_X, p.m, ghap(f, p.r, n))
    return [
        *_compare("exp(Dx^-1 d^m) exp(z d^r) A_n", composite, ref),
        *_compare("exp(z d^r) 2VGLAP", from_z_slice, ref),
        *_compare("exp(Dx^-1 d^m) GHAP", from_x_slice, ref),
    ]


def _check_ode(f: AppellFamily, p: LghParams, n: int, ref: Poly3) -> list[str]:
    require_egf(f, "ode")
    return [
        *_zero("LGHAP ODE", ode_residual_lghap(f, p, n, ref)),
        *_zero("LGHP ODE", ode_residual_lghp(p, n, lghp(p, n))),
    ]


def _check_mono(f: AppellFamily, p: LghParams, n: int, ref: Poly3) -> list[str]:
    require_egf(f, "mono")
    base = lghp(p, n)
    problems = [
        *_compare("M_LHA raising", apply_M_lgha(f, p, ref), lghap_series(f, p, n + 1)),
        *_compare("M_LH raising", apply_M_lgh(p, base), lghp(p, n + 1)),
        *_zero("commutator", commutator_check(p, base)),
        *_zero("M P = n", monomiality_residual(p, n, base)),
    ]
    if n >= 1:
        lowered = lghap_series(f, p, n - 1).scale(n)
        problems += _compare("d_y lowering", partial_derive(ref, "y"), lowered)
    return problems


def _check_heat(f: AppellFamily, p: LghParams, n: int, ref: Poly3) -> list[str]:
    require_egf(f, "heat")
    return [
        *_zero("d_y^r = d_z", heat_residual_z(p, ref)),
        *_zero("d_y^m = d_x x d_x", heat_residual_x(p, ref)),
    ]


_CHECKS: dict[Method, Callable[[AppellFamily, LghParams, int, Poly3], list[str]]] = {
    Method.BINOMIAL: _check_binomial,
    Method.GF: _check_gf,
    Method.DET: _check_det,
    Method.OP: _check_op,
    Method.ODE: _check_ode,
    Method.MONO: _check_mono,
    Method.HEAT: _check_heat,
}


# ──────────────────────────────────────────────────────────────
# Cells
# ──────────────────────────────────────────────────────────────

def _run_check(method: Method, f: AppellFamily, p: LghParams, n: int, ref: Poly3) -> CheckResult:
    """Run one check; inapplicable definitions become skipped results."""
    try:
        problems = _CHECKS[method](f, p, n, ref)
    except (NormalizationMismatch, DegenerateFamily) as exc:
        return CheckResult(family=f.display, n=n, method=method, status=CheckStatus.SKIPPED, detail=str(exc))
    except LGHAPError as exc:
        logger.error("Check [%s] %s n=%d raised: %s", method.value, f.display, n, exc)
        return CheckResult(family=f.display, n=n, method=method, status=CheckStatus.FAILED, detail=str(exc))
    status = CheckStatus.FAILED if problems else CheckStatus.PASSED
    return CheckResult(family=f.display, n=n, method=method, status=status, detail="; ".join(problems))


def check_cell(f: AppellFamily, p: LghParams, n: int, methods: tuple[Method, ...]) -> list[CheckResult]:
    """All selected methods on one (family, n) cell."""
    logger.info("Cell [%s n=%d] started", f.display, n)
    start = time.time()
    ref = lghap_series(f, p, n)
    results = []
    if Method.SERIES in methods:
        results.append(CheckResult(
            family=f.display, n=n, method=Method.SERIES, status=CheckStatus.PASSED,
            detail=f"{len(ref)} terms",
        ))
    results += [_run_check(method, f, p, n, ref) for method in methods if method != Method.SERIES]
    elapsed = time.time() - start
    logger.info("Cell [%s n=%d] completed | latency=%.3fs", f.display, n, elapsed)
    return results


def _check_cell_args(args: tuple[AppellFamily, LghParams, int, tuple[Method, ...]]) -> list[CheckResult]:
    return check_cell(*args)


# ──────────────────────────────────────────────────────────────
# Special cases
# ──────────────────────────────────────────────────────────────

def verify_case(
    case_id: str,
    params: LghParams,
    n_max: int,
    family: Optional[AppellFamily] = None,
) -> list[CaseResult]:
    """Compare ``reduce`` with the case oracle for n = 0..n_max."""
    try:
        case = get_case(case_id)
    except UnsupportedCase as exc:
        return [CaseResult(case_id=case_id.upper(), n=0, status=CheckStatus.SKIPPED, detail=str(exc))]
    label = family.display if family is not None and case.table == 2 else ""
    results = []
    for n in range(n_max + 1):
        try:
            got = reduce(case, n, params, family)
            want = case_oracle(case, n, params, family)
        except (NormalizationMismatch, DegenerateFamily) as exc:
            results.append(CaseResult(
                case_id=case.case_id, n=n, family=label, status=CheckStatus.SKIPPED, detail=str(exc),
            ))
            continue
        status = CheckStatus.PASSED if got == want else CheckStatus.FAILED
        detail = "" if got == want else f"got {got}, expected {want}"
        results.append(CaseResult(case_id=case.case_id, n=n, family=label, status=status, detail=detail))
    return results


def _expand_case_ids(cases: Iterable[str]) -> list[str]:
    ids: list[str] = []
    for case_id in cases:
        if case_id.strip().lower() == "all":
            ids += [case.case_id for case in list_cases()]
        else:
            ids.append(case_id.strip().upper())
    return list(dict.fromkeys(ids))


# ──────────────────────────────────────────────────────────────
# Driver
# ──────────────────────────────────────────────────────────────

def verify(
    families: list[AppellFamily],
    params: LghParams,
    n_max: int,
    methods: Optional[Iterable[Method | str]] = None,
    cases: Iterable[str] = (),
    workers: Optional[int] = None,
) -> VerificationReport:
    """Run every selected check on every (family, n) cell and the requested special cases."""
    cfg = get_config().verify
    selected = tuple(Method(m) for m in (methods or cfg.default_methods))
    workers = workers or cfg.workers
    cells = [(f, params, n, selected) for f in families for n in range(n_max + 1)]
    logger.info(
        "Verifying %d families x %d indices | m=%d r=%d | methods=%s | workers=%d",
        len(families), n_max + 1, params.m, params.r, ",".join(m.value for m in selected), workers,
    )

    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_check_cell_args, cells))
    else:
        batches = [_check_cell_args(cell) for cell in cells]
    checks = sorted(
        (result for batch in batches for result in batch),
        key=lambda c: (c.family, c.n, _METHOD_ORDER[c.method]),
    )

    case_results: list[CaseResult] = []
    for case_id in _expand_case_ids(cases):
        if case_id.startswith("T2-"):
            for f in families:
                case_results += verify_case(case_id, params, n_max, f)
        else:
            case_results += verify_case(case_id, params, n_max)

    report = VerificationReport(m=params.m, r=params.r, n_max=n_max, checks=checks, cases=case_results)
    logger.info(
        "Verification finished | passed=%d failed=%d skipped=%d",
        report.count(CheckStatus.PASSED), report.count(CheckStatus.FAILED), report.count(CheckStatus.SKIPPED),
    )
    return report
