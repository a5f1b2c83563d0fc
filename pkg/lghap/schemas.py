"""
LGHAP Schemas - Typed Pydantic models for descriptors, CLI records, and verification reports.

Every descriptor that crosses a module boundary is defined here so that:
  1. Families, indices and grids are validated once, at construction.
  2. Frozen descriptors are hashable and can key the kernel caches.
  3. The CLI and the verification driver share one report vocabulary.

Exact algebra values (Poly3, PowerSeries, HessMatrix, DiffOpSeries) live in
their own modules; they are not pydantic models.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


# ──────────────────────────────────────────────────────────────
# Enums
# ──────────────────────────────────────────────────────────────

class Variable(str, Enum):
    X = "x"
    Y = "y"
    Z = "z"


class Normalization(str, Enum):
    EGF = "egf"                       # sum A_n(x) t^n/n!
    PAPER_LITERAL = "paper-literal"   # Miller-Lee branch, ordinary base polynomials


class FamilyName(str, Enum):
    BERNOULLI = "bernoulli"
    EULER = "euler"
    GENOCCHI = "genocchi"
    MILLER_LEE = "miller-lee"
    GEN_BERNOULLI = "gen-bernoulli"
    GEN_EULER = "gen-euler"
    APOSTOL_BERNOULLI = "apostol-bernoulli"
    APOSTOL_EULER = "apostol-euler"


class XAction(str, Enum):
    NONE = "none"
    INV_DERIVE_X = "inv-derive-x"
    MULTIPLY_Z = "multiply-by-z"


class Method(str, Enum):
    SERIES = "series"
    BINOMIAL = "binomial"
    GF = "gf"
    DET = "det"
    OP = "op"
    ODE = "ode"
    MONO = "mono"
    HEAT = "heat"


class CheckStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


def _to_fraction(value: Any) -> Any:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        from lghap.algebra import parse_rational
        return parse_rational(value)
    return value


# ──────────────────────────────────────────────────────────────
# Kernel descriptors
# ──────────────────────────────────────────────────────────────

class LghParams(BaseModel):
    """The indices m, r of the Laguerre-Gould Hopper polynomials."""
    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=1)
    r: int = Field(ge=1)


class AppellFamily(BaseModel):
    """A named, parameterized Appell family; A(t) is built by ``lghap.appell``."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: FamilyName
    alpha: int = Field(default=1, ge=0)
    lam: Fraction = Fraction(1)
    s: Optional[int] = Field(default=None, ge=-1)
    normalization: Normalization = Normalization.EGF
    label: str = ""                   # the family-spec text it was built from

    @field_validator("lam", mode="before")
    @classmethod
    def _coerce_lambda(cls, value: Any) -> Any:
        return _to_fraction(value)

    @field_validator("lam")
    @classmethod
    def _lambda_nonzero(cls, value: Fraction) -> Fraction:
        if value == 0:
            raise ValueError("lambda must be nonzero")
        return value

    @model_validator(mode="after")
    def _check_branch(self) -> AppellFamily:
        is_miller_lee = self.name == FamilyName.MILLER_LEE
        if is_miller_lee and self.s is None:
            raise ValueError("miller-lee requires the order s")
        if not is_miller_lee and self.s is not None:
            raise ValueError(f"{self.name.value} takes no order s")
        if (self.normalization == Normalization.PAPER_LITERAL) != is_miller_lee:
            raise ValueError("paper-literal normalization is reserved for the Miller-Lee branch")
        if self.name == FamilyName.APOSTOL_EULER and self.lam == -1:
            raise ValueError("apostol-euler with lambda = -1 has no power series at t = 0")
        return self

    @property
    def display(self) -> str:
        return self.label or self.name.value


class BetaCoeffs(BaseModel):
    """beta_0..beta_n of the determinantal definition; beta_0 = 1/A_0."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: tuple[Fraction, ...]

    @field_validator("values")
    @classmethod
    def _leading_nonzero(cls, values: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        if not values or values[0] == 0:
            raise ValueError("beta_0 must exist and be nonzero")
        return values


class ReductionCase(BaseModel):
    """A plain variable-substitution row of the special-case tables."""
    model_config = ConfigDict(frozen=True)

    case_id: str
    table: int = Field(ge=1, le=2)
    substitutions: tuple[tuple[Variable, str], ...] = ()   # applied in order, text in canonical form
    fixed_m: Optional[int] = None
    fixed_r: Optional[int] = None
    r_offset: Optional[int] = None      # r = m + r_offset
    description: str = ""


# ──────────────────────────────────────────────────────────────
# Grids
# ──────────────────────────────────────────────────────────────

class SweepSpec(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    var: Variable
    start: Fraction
    stop: Fraction
    steps: int = Field(ge=2)

    @field_validator("start", "stop", mode="before")
    @classmethod
    def _coerce_bounds(cls, value: Any) -> Any:
        return _to_fraction(value)

    @model_validator(mode="after")
    def _distinct_bounds(self) -> SweepSpec:
        if self.start == self.stop:
            raise ValueError(f"sweep over {self.var.value} needs from != to")
        return self

    def nodes(self) -> list[Fraction]:
        step = (self.stop - self.start) / (self.steps - 1)
        return [self.start + i * step for i in range(self.steps)]


class GridSpec(BaseModel):
    """Two swept variables, optional fixed assignments, decimal output precision."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    fixed: dict[Variable, Fraction] = Field(default_factory=dict)
    sweeps: tuple[SweepSpec, ...]
    digits: int = Field(default=12, ge=0)

    @field_validator("fixed", mode="before")
    @classmethod
    def _coerce_fixed(cls, value: Any) -> Any:
        if isinstance(value, dict):
            return {k: _to_fraction(v) for k, v in value.items()}
        return value

    @model_validator(mode="after")
    def _two_sweeps(self) -> GridSpec:
        if len(self.sweeps) != 2:
            raise ValueError("exactly two swept variables are required")
        a, b = self.sweeps
        if a.var == b.var:
            raise ValueError(f"variable {a.var.value} is swept twice")
        for sweep in self.sweeps:
            if sweep.var in self.fixed:
                raise ValueError(f"variable {sweep.var.value} is both fixed and swept")
        return self


# ──────────────────────────────────────────────────────────────
# CLI records
# ──────────────────────────────────────────────────────────────

class TermRecord(BaseModel):
    x: int
    y: int
    z: int
    coeff: str                        # "p/q" or "p"


class ExpansionRecord(BaseModel):
    """JSON output of ``lghap expand --format json``."""
    family: str
    m: int
    r: int
    n: int
    terms: list[TermRecord] = Field(default_factory=list)


class BenchRow(BaseModel):
    n: int
    series_ms: float
    gf_ms: Optional[float] = None
    det_ms: Optional[float] = None
    naive_ms: Optional[float] = None


# ──────────────────────────────────────────────────────────────
# Verification
# ──────────────────────────────────────────────────────────────

class CheckResult(BaseModel):
    """One equivalence checked on one (family, n) cell."""
    family: str
    n: int
    method: Method
    status: CheckStatus
    detail: str = ""


class CaseResult(BaseModel):
    """One special-case reduction compared with its oracle."""
    case_id: str
    n: int
    status: CheckStatus
    family: str = ""                  # T2 rows only
    detail: str = ""


class VerificationReport(BaseModel):
    """Aggregated outcome of ``lghap verify``."""
    m: int
    r: int
    n_max: int
    checks: list[CheckResult] = Field(default_factory=list)
    cases: list[CaseResult] = Field(default_factory=list)

    @property
    def failures(self) -> list[CheckResult | CaseResult]:
        return [
            item for item in [*self.checks, *self.cases]
            if item.status == CheckStatus.FAILED
        ]

    @property
    def passed(self) -> bool:
        return not self.failures

    def count(self, status: CheckStatus) -> int:
        return sum(1 for item in [*self.checks, *self.cases] if item.status == status)
