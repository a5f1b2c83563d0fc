"""
LGHAP Determinants - Determinantal construction of Appell polynomials and LGHAP.

The (n+1) x (n+1) matrix has the polynomial row on top and the beta-coefficient
rows below:

    row 0        1      P_1     P_2      ...   P_n
    row i>=1     entry (i, j) = C(j, i-1) beta_(j-i+1)  for j >= i-1, else 0

so it is upper Hessenberg with beta_0 on the subdiagonal, and

    polynomial_n = (-1)^n / beta_0^(n+1) * det.

``hess_det`` evaluates the determinant with the last-column expansion
recurrence; ``naive_det`` is the first-row cofactor expansion kept as an oracle.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import comb
from typing import Sequence

from lghap.algebra import Poly3, poly_mul
from lghap.appell import beta_coeffs, require_egf
from lghap.config import get_config
from lghap.errors import DimensionTooLarge, ShapeViolation
from lghap.lgh import lghp
from lghap.schemas import AppellFamily, LghParams

logger = logging.getLogger("lghap")


class HessMatrix:
    """Immutable square matrix of Poly3 entries."""

    __slots__ = ("dim", "entries")

    def __init__(self, rows: Sequence[Sequence[Poly3 | int | Fraction]]):
        dim = len(rows)
        if dim == 0 or any(len(row) != dim for row in rows):
            raise ShapeViolation(f"Matrix must be square and non-empty, got {dim} rows")
        self.dim: int = dim
        self.entries: tuple[tuple[Poly3, ...], ...] = tuple(
            tuple(Poly3.coerce(value) for value in row) for row in rows
        )

    def __getitem__(self, index: tuple[int, int]) -> Poly3:
        i, j = index
        return self.entries[i][j]

    @property
    def is_hessenberg(self) -> bool:
        return all(
            self.entries[i][j].is_zero
            for i in range(self.dim) for j in range(self.dim) if i >= j + 2
        )

    def __repr__(self) -> str:
        rows = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"HessMatrix[{rows}]"


# ──────────────────────────────────────────────────────────────
# Builders
# ──────────────────────────────────────────────────────────────

def _beta_rows(betas: Sequence[Fraction], n: int) -> list[list[Poly3]]:
    rows = []
    for i in range(1, n + 1):
        rows.append([
            Poly3.const(comb(j, i - 1) * betas[j - i + 1]) if j >= i - 1 else Poly3.zero()
            for j in range(n + 1)
        ])
    return rows


def build_appell_matrix(f: AppellFamily, n: int) -> HessMatrix:
    """First row 1, y, ..., y^n."""
    require_egf(f, "build_appell_matrix")
    betas = beta_coeffs(f, n).values
    top = [Poly3.monomial(ey=k) for k in range(n + 1)]
    return HessMatrix([top, *_beta_rows(betas, n)])


def build_lghap_matrix(f: AppellFamily, p: LghParams, n: int) -> HessMatrix:
    """First row 1, LGHP_1, ..., LGHP_n."""
    require_egf(f, "build_lghap_matrix")
    betas = beta_coeffs(f, n).values
    top = [lghp(p, k) for k in range(n + 1)]
    return HessMatrix([top, *_beta_rows(betas, n)])


# ──────────────────────────────────────────────────────────────
# Engines
# ──────────────────────────────────────────────────────────────

def hess_det(mat: HessMatrix) -> Poly3:
    """Exact determinant of an upper Hessenberg matrix.

    d_k = sum_{i<=k} (-1)^(k-i) h[i][k] (prod_{j=i}^{k-1} h[j+1][j]) d_(i-1),  d_(-1) = 1.
    """
    if not mat.is_hessenberg:
        raise ShapeViolation("hess_det needs an upper Hessenberg matrix")
    h = mat.entries
    d: list[Poly3] = [Poly3.const(1)]        # d[k + 1] holds d_k
    for k in range(mat.dim):
        acc = Poly3.zero()
        sub = Poly3.const(1)                 # prod_{j=i}^{k-1} h[j+1][j], grown as i decreases
        for i in range(k, -1, -1):
            if i < k:
                sub = poly_mul(sub, h[i + 1][i])
                if sub.is_zero:
                    break
            if not h[i][k].is_zero:
                term = poly_mul(poly_mul(h[i][k], sub), d[i])
                acc = acc - term if (k - i) % 2 else acc + term
        d.append(acc)
    return d[-1]


def naive_det(mat: HessMatrix) -> Poly3:
    """First-row cofactor expansion; exponential cost, guarded by config."""
    limit = get_config().determinant.naive_max_dim
    if mat.dim > limit:
        raise DimensionTooLarge(f"naive_det is limited to dim <= {limit}, got {mat.dim}")
    return _cofactor(mat.entries)


def _cofactor(rows: tuple[tuple[Poly3, ...], ...]) -> Poly3:
    if len(rows) == 1:
        return rows[0][0]
    total = Poly3.zero()
    for j, entry in enumerate(rows[0]):
        if entry.is_zero:
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in rows[1:])
        term = poly_mul(entry, _cofactor(minor))
        total = total - term if j % 2 else total + term
    return total


# ──────────────────────────────────────────────────────────────
# Determinantal definitions
# ──────────────────────────────────────────────────────────────

def _prefactor(beta0: Fraction, n: int) -> Fraction:
    return Fraction((-1) ** n) / beta0 ** (n + 1)


def appell_det(f: AppellFamily, n: int) -> Poly3:
    mat = build_appell_matrix(f, n)
    beta0 = beta_coeffs(f, 0).values[0]
    return hess_det(mat).scale(_prefactor(beta0, n))


def lghap_det(f: AppellFamily, p: LghParams, n: int) -> Poly3:
    mat = build_lghap_matrix(f, p, n)
    beta0 = beta_coeffs(f, 0).values[0]
    result = hess_det(mat).scale(_prefactor(beta0, n))
    logger.debug("lghap_det %s (m=%d, r=%d) n=%d via %dx%d matrix", f.display, p.m, p.r, n, mat.dim, mat.dim)
    return result
