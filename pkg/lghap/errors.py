"""
LGHAP Errors - One exception hierarchy for every failure the kernel can report.

All errors derive from ``LGHAPError`` (a ``ValueError``) so the CLI can map the
whole family to a single usage exit code.
"""

from __future__ import annotations


class LGHAPError(ValueError):
    """Base class for all lghap errors."""


# ──────────────────────────────────────────────────────────────
# Parameters
# ──────────────────────────────────────────────────────────────

class InvalidParameter(LGHAPError):
    """A descriptor or literal failed validation."""


class UnknownFamily(InvalidParameter):
    """The family-spec names no registered Appell family."""


class InvalidGrid(InvalidParameter):
    """A grid specification is malformed (sweeps, steps, ranges)."""


# ──────────────────────────────────────────────────────────────
# Series
# ──────────────────────────────────────────────────────────────

class NonZeroConstantTerm(LGHAPError):
    """exp() was asked of a series whose constant term is not zero."""


class ZeroConstantTerm(LGHAPError):
    """A reciprocal was asked of a series without a nonzero rational constant term."""


class IndexBeyondOrder(LGHAPError):
    """A coefficient past the truncation order was requested."""


# ──────────────────────────────────────────────────────────────
# Families & definitions
# ──────────────────────────────────────────────────────────────

class NormalizationMismatch(LGHAPError):
    """The requested definition does not apply to the family's normalization."""


class DegenerateFamily(LGHAPError):
    """The family has A_0 = 0, so beta-coefficients and g(t) do not exist."""


class UnsupportedCase(LGHAPError):
    """A special case needs an operator-valued substitution."""


# ──────────────────────────────────────────────────────────────
# Determinants
# ──────────────────────────────────────────────────────────────

class ShapeViolation(LGHAPError):
    """A matrix is not square or not upper Hessenberg."""


class DimensionTooLarge(LGHAPError):
    """Cofactor expansion was requested beyond its cost guard."""
