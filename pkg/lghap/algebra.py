"""
LGHAP Algebra - Exact rationals and sparse polynomials in the variables x, y, z.

Every coefficient in the package is a ``fractions.Fraction``; floating point
appears only when the CLI renders grid values with ``format_decimal``.

Canonical text form:
  * terms by descending total degree, ties by the y-, then x-, then z-exponent
  * coefficients as ``p/q`` (``/q`` omitted when q = 1), unit coefficients elided
  * e.g. ``y^4 - 2*y^3 + y^2 + 24*x*y - 12*x - 1/30``
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

from lghap.errors import InvalidParameter

Scalar = Union[Fraction, int]

VARIABLES: tuple[str, ...] = ("x", "y", "z")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_FACTOR_RE = re.compile(r"^([xyz])(?:\^(\d+))?$")


def _var_index(var: object) -> int:
    name = str(getattr(var, "value", var))
    try:
        return _INDEX[name]
    except KeyError:
        raise InvalidParameter(f"Unknown variable '{name}' (expected one of x, y, z)") from None


# ──────────────────────────────────────────────────────────────
# Rationals
# ──────────────────────────────────────────────────────────────

def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer literal. Decimals are rejected to keep the pipeline exact."""
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise InvalidParameter(f"Not a rational literal (use p/q or an integer): {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise InvalidParameter(f"Zero denominator in rational literal: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value: Scalar) -> str:
    return str(Fraction(value))


def format_decimal(value: Scalar, digits: int) -> str:
    """Render an exact rational with round-half-even at ``digits`` places.

    Trailing zeros are stripped but one fractional digit is always kept.
    """
    scale = 10 ** digits
    scaled = round(Fraction(value) * scale)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), scale)
    frac_text = f"{frac:0{digits}d}".rstrip("0") if digits else ""
    return f"{sign}{whole}.{frac_text or '0'}"


# ──────────────────────────────────────────────────────────────
# Monomials
# ──────────────────────────────────────────────────────────────

class Monomial(NamedTuple):
    """Exponents of x, y and z."""
    ex: int = 0
    ey: int = 0
    ez: int = 0

    @property
    def degree(self) -> int:
        return self.ex + self.ey + self.ez

    def sort_key(self) -> tuple[int, int, int, int]:
        return (-self.degree, -self.ey, -self.ex, -self.ez)

    def exponent(self, var: object) -> int:
        return self[_var_index(var)]

    def shifted(self, ex: int = 0, ey: int = 0, ez: int = 0) -> Monomial:
        return Monomial(self.ex + ex, self.ey + ey, self.ez + ez)

    def text(self) -> str:
        parts = []
        for name, e in zip(VARIABLES, self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


ONE_MONOMIAL = Monomial(0, 0, 0)


# ──────────────────────────────────────────────────────────────
# Poly3
# ──────────────────────────────────────────────────────────────

class Poly3:
    """Sparse exact polynomial in x, y, z. Immutable; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int, int], Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = Monomial(*mono)
            if min(mono) < 0:
                raise InvalidParameter(f"Negative exponent in monomial {tuple(mono)}")
            c = clean.get(mono, Fraction(0)) + Fraction(coeff)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, clean: dict[Monomial, Fraction]) -> Poly3:
        poly = cls.__new__(cls)
        poly._terms = clean
        poly._hash = None
        return poly

    # --- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> Poly3:
        return cls._wrap({})

    @classmethod
    def const(cls, value: Scalar) -> Poly3:
        value = Fraction(value)
        return cls._wrap({ONE_MONOMIAL: value} if value else {})

    @classmethod
    def var(cls, name: object, power: int = 1) -> Poly3:
        exps = [0, 0, 0]
        exps[_var_index(name)] = power
        return cls._wrap({Monomial(*exps): Fraction(1)})

    @classmethod
    def monomial(cls, ex: int = 0, ey: int = 0, ez: int = 0, coeff: Scalar = 1) -> Poly3:
        return cls({(ex, ey, ez): coeff})

    @classmethod
    def coerce(cls, value: Poly3 | Scalar) -> Poly3:
        if isinstance(value, Poly3):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        return NotImplemented

    # --- inspection ---------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in canonical order."""
        for mono in sorted(self._terms, key=Monomial.sort_key):
            yield mono, self._terms[mono]

    def coeff(self, ex: int = 0, ey: int = 0, ez: int = 0) -> Fraction:
        return self._terms.get(Monomial(ex, ey, ez), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE_MONOMIAL, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(mono == ONE_MONOMIAL for mono in self._terms)

    def degree_in(self, var: object) -> int:
        idx = _var_index(var)
        return max((mono[idx] for mono in self._terms), default=0)

    @property
    def total_degree(self) -> int:
        return max((mono.degree for mono in self._terms), default=0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # --- arithmetic ---------------------------------------------------

    def __add__(self, other: Poly3 | Scalar) -> Poly3:
        other = Poly3.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Poly3._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> Poly3:
        return Poly3._wrap({mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other: Poly3 | Scalar) -> Poly3:
        other = Poly3.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Poly3:
        return (-self) + other

    def __mul__(self, other: Poly3 | Scalar) -> Poly3:
        if isinstance(other, Poly3):
            return poly_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> Poly3:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.scale(Fraction(1) / Fraction(other))

    def __pow__(self, power: int) -> Poly3:
        if not isinstance(power, int) or power < 0:
            raise InvalidParameter(f"Poly3 powers must be nonnegative integers, got {power!r}")
        result = Poly3.const(1)
        base = self
        while power:
            if power & 1:
                result = poly_mul(result, base)
            power >>= 1
            if power:
                base = poly_mul(base, base)
        return result

    def scale(self, factor: Scalar) -> Poly3:
        factor = Fraction(factor)
        if not factor:
            return Poly3.zero()
        return Poly3._wrap({mono: c * factor for mono, c in self._terms.items()})

    def shift(self, ex: int = 0, ey: int = 0, ez: int = 0, coeff: Scalar = 1) -> Poly3:
        """Multiply by ``coeff * x^ex * y^ey * z^ez``."""
        coeff = Fraction(coeff)
        if not coeff:
            return Poly3.zero()
        return Poly3._wrap({
            mono.shifted(ex, ey, ez): c * coeff for mono, c in self._terms.items()
        })

    # --- comparison ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly3.const(other)
        if not isinstance(other, Poly3):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # --- text ---------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly3({format_poly(self)!r})"


X = Poly3.var("x")
Y = Poly3.var("y")
Z = Poly3.var("z")


# ──────────────────────────────────────────────────────────────
# Operations
# ──────────────────────────────────────────────────────────────

def poly_mul(a: Poly3, b: Poly3) -> Poly3:
    """Exact product."""
    if not a._terms or not b._terms:
        return Poly3.zero()
    out: dict[Monomial, Fraction] = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            mono = Monomial(ma.ex + mb.ex, ma.ey + mb.ey, ma.ez + mb.ez)
            out[mono] = out.get(mono, 0) + ca * cb
    return Poly3._wrap({mono: c for mono, c in out.items() if c})


def poly_eval(p: Poly3, x0: Scalar, y0: Scalar, z0: Scalar) -> Fraction:
    """Exact value of ``p`` at (x0, y0, z0)."""
    point = (Fraction(x0), Fraction(y0), Fraction(z0))
    cache: dict[tuple[int, int], Fraction] = {}

    def power(idx: int, e: int) -> Fraction:
        key = (idx, e)
        if key not in cache:
            cache[key] = point[idx] ** e
        return cache[key]

    total = Fraction(0)
    for mono, c in p._terms.items():
        total += c * power(0, mono.ex) * power(1, mono.ey) * power(2, mono.ez)
    return total


def _falling(a: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= a - i
    return out


def partial_derive(p: Poly3, var: object, k: int = 1) -> Poly3:
    """k-th partial derivative with respect to ``var``."""
    if k < 0:
        raise InvalidParameter(f"Derivative order must be nonnegative, got {k}")
    if k == 0:
        return p
    idx = _var_index(var)
    out: dict[Monomial, Fraction] = {}
    for mono, c in p._terms.items():
        e = mono[idx]
        if e < k:
            continue
        exps = list(mono)
        exps[idx] = e - k
        out[Monomial(*exps)] = c * _falling(e, k)
    return Poly3._wrap(out)


def inv_derive_x(p: Poly3, k: int = 1) -> Poly3:
    """Apply the inverse derivative D_x^{-1} ``k`` times (zero integration constant).

    x^a -> x^(a+k) * a!/(a+k)!, so D_x^{-k}{1} = x^k/k!.
    """
    if k < 0:
        raise InvalidParameter(f"Inverse-derivative order must be nonnegative, got {k}")
    if k == 0:
        return p
    return Poly3._wrap({
        mono.shifted(ex=k): c / _falling(mono.ex + k, k) for mono, c in p._terms.items()
    })


def substitute(p: Poly3, var: object, q: Poly3 | Scalar) -> Poly3:
    """Replace every power of ``var`` in ``p`` by the same power of ``q``."""
    q = Poly3.coerce(q)
    idx = _var_index(var)
    powers: dict[int, Poly3] = {0: Poly3.const(1)}

    def power(e: int) -> Poly3:
        if e not in powers:
            powers[e] = poly_mul(power(e - 1), q)
        return powers[e]

    # group by the exponent of var so each power of q is multiplied once
    groups: dict[int, dict[Monomial, Fraction]] = {}
    for mono, c in p._terms.items():
        exps = list(mono)
        e = exps[idx]
        exps[idx] = 0
        groups.setdefault(e, {})[Monomial(*exps)] = c
    result = Poly3.zero()
    for e in sorted(groups):
        result = result + poly_mul(Poly3._wrap(groups[e]), power(e))
    return result


def poly_sum(polys: Iterable[Poly3]) -> Poly3:
    out: dict[Monomial, Fraction] = {}
    for p in polys:
        for mono, c in p._terms.items():
            out[mono] = out.get(mono, 0) + c
    return Poly3._wrap({mono: c for mono, c in out.items() if c})


# ──────────────────────────────────────────────────────────────
# Text format
# ──────────────────────────────────────────────────────────────

def format_poly(p: Poly3) -> str:
    """Canonical text form of ``p``."""
    pieces: list[str] = []
    for mono, c in p.items():
        magnitude = abs(c)
        mono_text = mono.text()
        if not mono_text:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = mono_text
        else:
            body = f"{format_rational(magnitude)}*{mono_text}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(pieces) or "0"


def parse_poly(text: str) -> Poly3:
    """Parse the canonical text form (any term order, optional spaces)."""
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise InvalidParameter("Empty polynomial text")
    terms: dict[tuple[int, int, int], Fraction] = {}
    for match in re.finditer(r"([+-]?)([^+-]+)", compact):
        sign, body = match.group(1), match.group(2)
        coeff = Fraction(-1 if sign == "-" else 1)
        exps = [0, 0, 0]
        for factor in body.split("*"):
            var_match = _FACTOR_RE.match(factor)
            if var_match:
                exps[_INDEX[var_match.group(1)]] += int(var_match.group(2) or 1)
            else:
                coeff *= parse_rational(factor)
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    consumed = "".join(m.group(0) for m in re.finditer(r"([+-]?)([^+-]+)", compact))
    if consumed != compact:
        raise InvalidParameter(f"Malformed polynomial text: {text!r}")
    return Poly3(terms)
