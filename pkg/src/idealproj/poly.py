"""Exact sparse multivariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction`; exponent vectors are plain
tuples of nonnegative ints, and points are tuples of Fractions.  Python's
tuple comparison is exactly lex order with ``x1 > x2 > ... > xd``, which
is the only monomial order supported.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from math import comb, perm
from numbers import Rational
from typing import Iterable, Mapping

from .errors import DimensionError

__all__ = [
    "MonomialOrder",
    "Polynomial",
    "UniPoly",
    "add",
    "differentiate",
    "evaluate",
    "format_rational",
    "leading_monomial",
    "less_m",
    "monomial_name",
    "mul",
    "parse_rational",
    "product_leq",
    "product_lt",
    "scale",
    "sub",
    "substitute_line",
    "to_fraction",
]

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    """Parse ``"-385039/99000"``-style text into a Fraction."""
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and rational strings; refuse floats."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def monomial_name(alpha) -> str:
    """``(2, 0, 1)`` -> ``"x1^2*x3"``; the zero vector is ``"1"``."""
    name = "*".join(
        f"x{k + 1}" if a == 1 else f"x{k + 1}^{a}" for k, a in enumerate(alpha) if a
    )
    return name or "1"


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class MonomialOrder(enum.Enum):
    LEX = "lex"

    def key(self, alpha: tuple[int, ...]):
        return alpha


def product_leq(alpha, beta) -> bool:
    if len(alpha) != len(beta):
        raise DimensionError(f"length mismatch: {alpha} vs {beta}")
    return all(a <= b for a, b in zip(alpha, beta))


def product_lt(alpha, beta) -> bool:
    return product_leq(alpha, beta) and tuple(alpha) != tuple(beta)


def _check_exponent(alpha, d):
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != d:
        raise DimensionError(f"exponent {alpha} does not have length {d}")
    if any(a < 0 for a in alpha):
        raise ValueError(f"negative exponent in {alpha}")
    return alpha


def _check_point(xi, d):
    xi = tuple(to_fraction(c) for c in xi)
    if len(xi) != d:
        raise DimensionError(f"point {xi} does not have dimension {d}")
    return xi


class Polynomial:
    """Immutable sparse polynomial in ``x1..xd``.

    >>> x1, x2 = Polynomial.var(0, 2), Polynomial.var(1, 2)
    >>> str((1 - x1) ** 2)
    'x1^2 - 2*x1 + 1'
    """

    __slots__ = ("_terms", "_dim", "_hash")

    def __init__(self, terms: Mapping | Iterable = (), dim: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], Fraction] = {}
        for alpha, c in items:
            alpha = tuple(int(a) for a in alpha)
            if dim is None:
                dim = len(alpha)
            alpha = _check_exponent(alpha, dim)
            acc[alpha] = acc.get(alpha, Fraction(0)) + to_fraction(c)
        if dim is None:
            raise ValueError("dimension required for an empty polynomial")
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        self._terms = {a: c for a, c in acc.items() if c != 0}
        self._dim = dim
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, dim: int) -> "Polynomial":
        # terms already normalized: exact Fractions, no zeros
        p = cls.__new__(cls)
        p._terms = terms
        p._dim = dim
        p._hash = None
        return p

    @classmethod
    def zero(cls, dim: int) -> "Polynomial":
        return cls((), dim)

    @classmethod
    def constant(cls, c, dim: int) -> "Polynomial":
        return cls({(0,) * dim: c}, dim)

    @classmethod
    def monomial(cls, alpha, coeff=1) -> "Polynomial":
        alpha = tuple(alpha)
        return cls({alpha: coeff}, len(alpha))

    @classmethod
    def var(cls, k: int, dim: int) -> "Polynomial":
        """The variable ``x_{k+1}`` (``k`` is 0-based)."""
        if not 0 <= k < dim:
            raise DimensionError(f"variable index {k} out of range for d={dim}")
        alpha = [0] * dim
        alpha[k] = 1
        return cls({tuple(alpha): 1}, dim)

    @property
    def dim(self) -> int:
        return self._dim

    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def items(self):
        """(exponent, coefficient) pairs in decreasing lex order."""
        return sorted(self._terms.items(), reverse=True)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def coeff(self, alpha) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(a) for a in self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # ring operations

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._dim != self._dim:
                raise DimensionError(f"dimension mismatch: {self._dim} vs {other._dim}")
            return other
        return Polynomial.constant(to_fraction(other), self._dim)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for a, c in other._terms.items():
            s = out.get(a, 0) + c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return Polynomial._raw(out, self._dim)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({a: -c for a, c in self._terms.items()}, self._dim)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                c = to_fraction(other)
            except TypeError:
                return NotImplemented
            if c == 0:
                return Polynomial.zero(self._dim)
            return Polynomial._raw({a: c * v for a, v in self._terms.items()}, self._dim)
        other = self._coerce(other)
        out: dict = {}
        for a, c in self._terms.items():
            for b, e in other._terms.items():
                k = tuple(x + y for x, y in zip(a, b))
                out[k] = out.get(k, 0) + c * e
        return Polynomial._raw({k: v for k, v in out.items() if v}, self._dim)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = Polynomial.constant(1, self._dim)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._dim == other._dim and self._terms == other._terms
        try:
            return self == Polynomial.constant(to_fraction(other), self._dim)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._dim, frozenset(self._terms.items())))
        return self._hash

    # calculus and evaluation

    def diff(self, alpha) -> "Polynomial":
        alpha = _check_exponent(alpha, self._dim)
        out = {}
        for beta, c in self._terms.items():
            if any(b < a for a, b in zip(alpha, beta)):
                continue
            factor = 1
            for a, b in zip(alpha, beta):
                factor *= perm(b, a)
            out[tuple(b - a for a, b in zip(alpha, beta))] = c * factor
        return Polynomial._raw(out, self._dim)

    def __call__(self, xi) -> Fraction:
        xi = _check_point(xi, self._dim)
        total = Fraction(0)
        for alpha, c in self._terms.items():
            v = c
            for x, a in zip(xi, alpha):
                if a:
                    v *= x**a
            total += v
        return total

    def leading_monomial(self, order: MonomialOrder = MonomialOrder.LEX):
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self._terms, key=MonomialOrder(order).key)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for alpha, c in self.items():
            mono = monomial_name(alpha) if any(alpha) else ""
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, dim={self._dim})"


class UniPoly:
    """Univariate polynomial in ``h`` with Fraction coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([0] * k + [c])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def low_degree(self) -> int:
        """Smallest power with a nonzero coefficient; -1 for zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, h) -> Fraction:
        h = to_fraction(h)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * h + c
        return acc

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = to_fraction(other)
            return UniPoly(c * v for v in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = UniPoly([1])
        for _ in range(n):
            result = result * self
        return result

    def shift_down(self, k: int) -> "UniPoly":
        """Divide by ``h**k``; the low ``k`` coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValueError(f"not divisible by h^{k}")
        return UniPoly(self.coeffs[k:])

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == UniPoly([other]).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = format_rational(abs(c))
            if k == 0:
                body = mag
            else:
                mono = "h" if k == 1 else f"h^{k}"
                body = mono if abs(c) == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"UniPoly({str(self)!r})"


# functional API mirroring the operators


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return p - q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def scale(p: Polynomial, c) -> Polynomial:
    return p * to_fraction(c)


def evaluate(p: Polynomial, xi) -> Fraction:
    return p(xi)


def differentiate(p: Polynomial, alpha) -> Polynomial:
    return p.diff(alpha)


def leading_monomial(p: Polynomial, order=MonomialOrder.LEX):
    return p.leading_monomial(order)


def less_m(p: Polynomial, i) -> bool:
    """True iff ``i`` lies strictly below (product order) some support exponent of ``p``."""
    if p.is_zero():
        raise ValueError("less_m is undefined for the zero polynomial")
    i = _check_exponent(i, p.dim)
    return any(product_lt(i, alpha) for alpha in p.support())


def substitute_line(p: Polynomial, xi, c) -> UniPoly:
    """Expand ``p(xi + h*c)`` as a polynomial in ``h``."""
    xi = _check_point(xi, p.dim)
    c = tuple(to_fraction(v) for v in c)
    if len(c) != p.dim:
        raise DimensionError(f"direction {c} does not have dimension {p.dim}")
    total = UniPoly()
    # (xi_k + h c_k)^a expanded once per (k, a)
    cache: dict[tuple[int, int], UniPoly] = {}
    for alpha, coef in p._terms.items():
        term = UniPoly([coef])
        for k, a in enumerate(alpha):
            if not a:
                continue
            key = (k, a)
            if key not in cache:
                cache[key] = UniPoly(
                    comb(a, m) * xi[k] ** (a - m) * c[k] ** m for m in range(a + 1)
                )
            term = term * cache[key]
        total = total + term
    return total
