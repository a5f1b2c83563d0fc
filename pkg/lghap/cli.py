"""
LGHAP CLI - Command-line interface for the LGHAP computer-algebra kernel.

Commands:
  lghap expand   --family F --m M --r R --n N [--method ...] [--format text|json]
  lghap eval     (--family F --m M --r R --n N | --poly TEXT) --at x=..,y=..,z=.. [--digits D]
  lghap verify   --families F1,F2 --m M --r R --n-max N [--methods ...] [--cases ...]
  lghap grid     --family F --m M --r R --n N [--fix v=q] --sweep v=a:b:k --sweep v=a:b:k
  lghap families
  lghap cases
  lghap bench    --family F --m M --r R --n-max N

Machine-readable output (polynomials, JSON, CSV) goes to stdout unstyled;
tables, errors and logs are rendered with rich. Exit codes: 0 ok, 1 verification
failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional, Sequence

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from lghap import appell, lgh
from lghap.algebra import Poly3, format_decimal, format_rational, parse_poly, parse_rational, poly_eval
from lghap.appell import appell_poly, list_families, make_family
from lghap.config import get_config
from lghap.determinant import build_lghap_matrix, hess_det, lghap_det, naive_det
from lghap.errors import InvalidGrid, InvalidParameter, LGHAPError
from lghap.lgh import lghap_binomial, lghap_gf, lghap_series
from lghap.operators import exp_op_apply
from lghap.schemas import (
    AppellFamily,
    BenchRow,
    CheckStatus,
    ExpansionRecord,
    GridSpec,
    LghParams,
    SweepSpec,
    TermRecord,
    Variable,
    XAction,
)
from lghap.special_cases import UNSUPPORTED, list_cases
from lghap.verification import verify

console = Console()
err_console = Console(stderr=True)

logger = logging.getLogger("lghap")
_log_handler: Optional[logging.Handler] = None

EULER_NOTE = (
    "euler values come from 2/(e^t+1): E_3(0) = 1/4, E_4(y) = y^4 - 2*y^3 + y; "
    "tables printing E_4(y) with a 2/3*y term do not match this generating function"
)


def _setup_logging(verbose: bool = False) -> None:
    """Configure structured logging for the lghap package (stderr)."""
    global _log_handler
    level = logging.DEBUG if verbose else logging.INFO
    if _log_handler is not None:
        logger.removeHandler(_log_handler)
    _log_handler = logging.StreamHandler(sys.stderr)
    _log_handler.setFormatter(logging.Formatter(
        "%(asctime)s | %(name)s | %(levelname)s | %(message)s",
        datefmt="%H:%M:%S",
    ))
    logger.setLevel(level)
    logger.addHandler(_log_handler)


def _emit(text: str) -> None:
    console.out(text, highlight=False)


# ──────────────────────────────────────────────────────────────
# Argument parsing helpers
# ──────────────────────────────────────────────────────────────

def split_family_list(text: str) -> list[str]:
    """Split ``a,b:alpha=1,lambda=2`` into family-specs; ``key=value`` tokens stay with their family."""
    specs: list[str] = []
    for token in (t.strip() for t in text.split(",")):
        if not token:
            continue
        if "=" in token and ":" not in token and specs:
            specs[-1] = f"{specs[-1]},{token}"
        else:
            specs.append(token)
    return specs


def _parse_assignments(text: str) -> dict[Variable, Fraction]:
    values: dict[Variable, Fraction] = {}
    for item in (part.strip() for part in text.split(",") if part.strip()):
        name, sep, value = item.partition("=")
        if not sep:
            raise InvalidParameter(f"Expected var=value, got {item!r}")
        try:
            var = Variable(name.strip())
        except ValueError:
            raise InvalidParameter(f"Unknown variable '{name}' (expected x, y or z)") from None
        values[var] = parse_rational(value)
    return values


def _parse_sweep(text: str) -> SweepSpec:
    name, sep, rng = text.partition("=")
    parts = rng.split(":")
    if not sep or len(parts) != 3:
        raise InvalidGrid(f"Sweep must look like var=from:to:steps, got {text!r}")
    try:
        var = Variable(name.strip())
    except ValueError:
        raise InvalidGrid(f"Unknown sweep variable '{name}'") from None
    if not parts[2].strip().isdigit():
        raise InvalidGrid(f"Sweep steps must be a positive integer, got {parts[2]!r}")
    try:
        return SweepSpec(
            var=var, start=parse_rational(parts[0]), stop=parse_rational(parts[1]), steps=int(parts[2]),
        )
    except ValueError as exc:
        raise InvalidGrid(f"Invalid sweep {text!r}: {exc}") from exc


def _params(args: argparse.Namespace) -> LghParams:
    try:
        return LghParams(m=args.m, r=args.r)
    except ValueError as exc:
        raise InvalidParameter(f"m and r must be >= 1 (got m={args.m}, r={args.r})") from exc


def _index(n: int, name: str = "n") -> int:
    if n < 0:
        raise InvalidParameter(f"{name} must be nonnegative, got {n}")
    return n


# ──────────────────────────────────────────────────────────────
# expand / eval / grid
# ──────────────────────────────────────────────────────────────

def _operational(f: AppellFamily, p: LghParams, n: int) -> Poly3:
    inner = exp_op_apply(XAction.MULTIPLY_Z, p.r, appell_poly(f, n))
    return exp_op_apply(XAction.INV_DERIVE_X, p.m, inner)


_EXPANDERS: dict[str, Callable[[AppellFamily, LghParams, int], Poly3]] = {
    "series": lghap_series,
    "binomial": lghap_binomial,
    "gf": lghap_gf,
    "det": lghap_det,
    "op": _operational,
}


def _expand_poly(args: argparse.Namespace) -> tuple[AppellFamily, LghParams, Poly3]:
    f = make_family(args.family)
    p = _params(args)
    n = _index(args.n)
    poly = _EXPANDERS[getattr(args, "method", "series")](f, p, n)
    return f, p, poly


def _cmd_expand(args: argparse.Namespace) -> int:
    f, p, poly = _expand_poly(args)
    if args.format == "json":
        record = ExpansionRecord(
            family=f.display, m=p.m, r=p.r, n=args.n,
            terms=[
                TermRecord(x=mono.ex, y=mono.ey, z=mono.ez, coeff=format_rational(c))
                for mono, c in poly.items()
            ],
        )
        _emit(record.model_dump_json())
    else:
        _emit(str(poly))
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    if args.poly is not None:
        poly = parse_poly(args.poly)
    elif args.family is not None:
        if None in (args.m, args.r, args.n):
            raise InvalidParameter("eval --family also needs --m, --r and --n")
        poly = _expand_poly(args)[2]
    else:
        raise InvalidParameter("eval needs either --poly or --family with --m, --r, --n")
    point = _parse_assignments(args.at)
    value = poly_eval(poly, *(point.get(v, Fraction(0)) for v in Variable))
    _emit(format_rational(value))
    if args.digits is not None:
        _emit(format_decimal(value, args.digits))
    return 0


def grid_csv(poly: Poly3, spec: GridSpec) -> str:
    """CSV over the two sweeps, first sweep outer; no trailing newline."""
    outer, inner = spec.sweeps
    lines = [f"{outer.var.value},{inner.var.value},value"]
    for a in outer.nodes():
        for b in inner.nodes():
            point = {v: Fraction(0) for v in Variable}
            point.update(spec.fixed)
            point[outer.var] = a
            point[inner.var] = b
            value = poly_eval(poly, point[Variable.X], point[Variable.Y], point[Variable.Z])
            lines.append(
                f"{format_decimal(a, spec.digits)},{format_decimal(b, spec.digits)},"
                f"{format_decimal(value, spec.digits)}"
            )
    return "\n".join(lines)


def _cmd_grid(args: argparse.Namespace) -> int:
    fixed: dict[Variable, Fraction] = {}
    for item in args.fix or []:
        fixed.update(_parse_assignments(item))
    sweeps = tuple(_parse_sweep(item) for item in args.sweep or [])
    digits = args.digits if args.digits is not None else get_config().grid.digits
    try:
        spec = GridSpec(fixed=fixed, sweeps=sweeps, digits=digits)
    except ValueError as exc:
        raise InvalidGrid(f"Invalid grid: {exc}") from exc
    poly = _expand_poly(args)[2]
    csv_text = grid_csv(poly, spec)
    if args.output:
        Path(args.output).write_text(csv_text, encoding="utf-8")
        logger.info("Grid written to %s (%d rows)", args.output, csv_text.count("\n"))
    else:
        _emit(csv_text)
    return 0


# ──────────────────────────────────────────────────────────────
# verify
# ──────────────────────────────────────────────────────────────

_STATUS_STYLE = {
    CheckStatus.PASSED: "green",
    CheckStatus.FAILED: "red",
    CheckStatus.SKIPPED: "yellow",
}


def _cmd_verify(args: argparse.Namespace) -> int:
    families = [make_family(spec) for spec in split_family_list(args.families)]
    if not families:
        raise InvalidParameter("verify needs at least one family")
    p = _params(args)
    n_max = _index(args.n_max, "n-max")
    methods = [m.strip() for m in args.methods.split(",")] if args.methods else None
    cases = [c.strip() for c in args.cases.split(",")] if args.cases else []
    try:
        report = verify(families, p, n_max, methods=methods, cases=cases, workers=args.workers)
    except ValueError as exc:
        if isinstance(exc, LGHAPError):
            raise
        raise InvalidParameter(str(exc)) from exc

    table = Table(title=f"Verification (m={p.m}, r={p.r}, n <= {n_max})", show_lines=False)
    table.add_column("Family", style="bold")
    table.add_column("Method")
    table.add_column("Passed", justify="right")
    table.add_column("Failed", justify="right")
    table.add_column("Skipped", justify="right")
    summary: dict[tuple[str, str], dict[CheckStatus, int]] = {}
    for check in report.checks:
        counts = summary.setdefault((check.family, check.method.value), {s: 0 for s in CheckStatus})
        counts[check.status] += 1
    for case in report.cases:
        key = (case.family or "-", f"case {case.case_id}")
        counts = summary.setdefault(key, {s: 0 for s in CheckStatus})
        counts[case.status] += 1
    for (family, method), counts in summary.items():
        table.add_row(
            family, method,
            *(f"[{_STATUS_STYLE[s]}]{counts[s]}[/{_STATUS_STYLE[s]}]" for s in CheckStatus),
        )
    console.print(table)

    for failure in report.failures:
        console.print(f"  [red]FAILED[/red] {failure.model_dump_json()}")
    if report.passed:
        console.print("[bold green]All selected equivalences hold.[/bold green]")
        return 0
    console.print(f"[bold red]{len(report.failures)} check(s) failed.[/bold red]")
    return 1


# ──────────────────────────────────────────────────────────────
# families / cases
# ──────────────────────────────────────────────────────────────

def _cmd_families(args: argparse.Namespace) -> int:
    table = Table(title="Appell families", show_lines=False)
    table.add_column("Name", style="bold cyan")
    table.add_column("A(t)")
    table.add_column("Parameters")
    table.add_column("Normalization")
    for row in list_families():
        table.add_row(row["name"], row["A(t)"], row["keys"] or "-", row["normalization"])
    console.print(table)
    console.print(f"[dim]{EULER_NOTE}[/dim]")
    return 0


def _cmd_cases(args: argparse.Namespace) -> int:
    table = Table(title="Special cases", show_lines=False)
    table.add_column("Case", style="bold cyan")
    table.add_column("Indices")
    table.add_column("Substitutions")
    table.add_column("Description")
    for case in list_cases():
        indices = []
        if case.fixed_m:
            indices.append(f"m={case.fixed_m}")
        if case.fixed_r:
            indices.append(f"r={case.fixed_r}")
        if case.r_offset is not None:
            indices.append(f"r=m{case.r_offset:+d}")
        subs = ", ".join(f"{var.value} -> {text}" for var, text in case.substitutions)
        table.add_row(case.case_id, " ".join(indices) or "any", subs, case.description)
    for case_id in sorted(UNSUPPORTED):
        table.add_row(case_id, "-", "[dim]operator-valued[/dim]", "[yellow]unsupported[/yellow]")
    console.print(table)
    return 0


# ──────────────────────────────────────────────────────────────
# bench
# ──────────────────────────────────────────────────────────────

def _clear_caches() -> None:
    appell.clear_caches()
    lgh.clear_caches()


def _timed(func: Callable[[], object], repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        _clear_caches()
        start = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - start)
    return best * 1000.0


def bench_rows(f: AppellFamily, p: LghParams, n_max: int) -> list[BenchRow]:
    cfg = get_config().bench
    rows: list[BenchRow] = []
    for n in range(n_max + 1):
        row = BenchRow(n=n, series_ms=_timed(lambda: lghap_series(f, p, n), cfg.repeats))
        try:
            row.gf_ms = _timed(lambda: lghap_gf(f, p, n), cfg.repeats)
            row.det_ms = _timed(lambda: hess_det(build_lghap_matrix(f, p, n)), cfg.repeats)
            if n <= cfg.naive_max_n:
                row.naive_ms = _timed(lambda: naive_det(build_lghap_matrix(f, p, n)), cfg.repeats)
        except LGHAPError as exc:
            logger.warning("Bench n=%d: %s", n, exc)
        rows.append(row)
        logger.debug("Bench n=%d: %s", n, row.model_dump())
    return rows


def _cmd_bench(args: argparse.Namespace) -> int:
    f = make_family(args.family)
    p = _params(args)
    rows = bench_rows(f, p, _index(args.n_max, "n-max"))

    def cell(value: Optional[float]) -> str:
        return "-" if value is None else f"{value:.3f}"

    table = Table(title=f"Timings for {f.display} (m={p.m}, r={p.r}), ms", show_lines=False)
    for column in ("n", "series", "gf", "det (hessenberg)", "det (cofactor)"):
        table.add_column(column, justify="right")
    for row in rows:
        table.add_row(str(row.n), cell(row.series_ms), cell(row.gf_ms), cell(row.det_ms), cell(row.naive_ms))
    console.print(table)
    return 0


# ──────────────────────────────────────────────────────────────
# Entry points
# ──────────────────────────────────────────────────────────────

def _add_family_options(sub: argparse.ArgumentParser, required: bool = True) -> None:
    sub.add_argument("--family", required=required, help="family-spec, e.g. apostol-euler:alpha=1,lambda=2")
    sub.add_argument("--m", type=int, required=required, help="Laguerre index m >= 1")
    sub.add_argument("--r", type=int, required=required, help="Gould-Hopper index r >= 1")
    sub.add_argument("--n", type=int, required=required, help="polynomial degree n >= 0")
    sub.add_argument("--method", choices=sorted(_EXPANDERS), default="series", help="definition to expand with")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lghap",
        description="Exact Laguerre-Gould Hopper based Appell polynomials",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)

    expand_parser = subparsers.add_parser("expand", help="Expand one polynomial")
    _add_family_options(expand_parser)
    expand_parser.add_argument("--format", choices=["text", "json"], default="text")

    eval_parser = subparsers.add_parser("eval", help="Evaluate a polynomial exactly at a point")
    _add_family_options(eval_parser, required=False)
    eval_parser.add_argument("--poly", type=str, default=None, help="polynomial in canonical text form")
    eval_parser.add_argument("--at", type=str, required=True, help="x=<rat>,y=<rat>,z=<rat>")
    eval_parser.add_argument("--digits", type=int, default=None, help="also print a decimal rendering")

    verify_parser = subparsers.add_parser("verify", help="Cross-verify all definitions")
    verify_parser.add_argument("--families", required=True, help="comma-separated family-specs")
    verify_parser.add_argument("--m", type=int, required=True)
    verify_parser.add_argument("--r", type=int, required=True)
    verify_parser.add_argument("--n-max", type=int, required=True, dest="n_max")
    verify_parser.add_argument("--methods", type=str, default=None, help="comma-separated methods")
    verify_parser.add_argument("--cases", type=str, default=None, help="comma-separated case ids or 'all'")
    verify_parser.add_argument("--workers", type=int, default=None, help="parallel worker processes")

    grid_parser = subparsers.add_parser("grid", help="Emit a CSV surface grid")
    _add_family_options(grid_parser)
    grid_parser.add_argument("--fix", action="append", help="var=<rat>, repeatable")
    grid_parser.add_argument("--sweep", action="append", help="var=<from>:<to>:<steps>, exactly two")
    grid_parser.add_argument("--digits", type=int, default=None)
    grid_parser.add_argument("--output", type=str, default=None, help="write CSV to this file")

    subparsers.add_parser("families", help="List Appell families")
    subparsers.add_parser("cases", help="List special-case reductions")

    bench_parser = subparsers.add_parser("bench", help="Time the evaluation strategies")
    bench_parser.add_argument("--family", required=True)
    bench_parser.add_argument("--m", type=int, required=True)
    bench_parser.add_argument("--r", type=int, required=True)
    bench_parser.add_argument("--n-max", type=int, required=True, dest="n_max")
    return parser


_COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "expand": _cmd_expand,
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "grid": _cmd_grid,
    "families": _cmd_families,
    "cases": _cmd_cases,
    "bench": _cmd_bench,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, dispatch, and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _setup_logging(verbose=args.verbose)
    try:
        return _COMMANDS[args.command](args)
    except LGHAPError as exc:
        err_console.print(Panel(str(exc), title="[bold red]Error[/bold red]", border_style="red"))
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
