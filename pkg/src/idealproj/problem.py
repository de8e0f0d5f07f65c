"""Interpolation schemes: sites carrying lower sets of derivative orders.

A :class:`Problem` fixes distinct points ``xi^(k)`` together with lower
sets ``Delta^(k)``.  Its Hermite conditions are ``delta_xi o D^alpha``;
the h-perturbed Lagrange conditions evaluate at ``xi + h*alpha``.  Both
lists are ordered by site index, then lex on ``alpha``.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import perm
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DimensionError, ProblemError
from .poly import Polynomial, format_rational, to_fraction

__all__ = [
    "INFINITY",
    "Functional",
    "LowerSet",
    "Problem",
    "Site",
    "algebraic_multiset",
    "apply_functional",
    "eta0_squared",
    "format_bound",
    "hermite_basis",
    "lagrange_basis",
    "load_problem",
    "perturbed_sites",
    "validate_problem",
]

#: Value of an empty minimum for eta-type bounds.
INFINITY = math.inf

HERMITE = "hermite"
LAGRANGE = "lagrange"


def format_bound(value) -> str:
    return "inf" if value == INFINITY else format_rational(value)


def _box(alpha):
    return itertools.product(*(range(a + 1) for a in alpha))


@dataclass(frozen=True)
class LowerSet:
    """Finite downward-closed subset of N_0^d, stored in increasing lex order."""

    exponents: tuple[tuple[int, ...], ...]

    def __init__(self, exponents: Iterable[Sequence[int]]):
        exps = {tuple(int(a) for a in e) for e in exponents}
        if not exps:
            raise ValueError("a lower set cannot be empty")
        dims = {len(e) for e in exps}
        if len(dims) != 1:
            raise DimensionError(f"ragged exponent vectors: {sorted(exps)}")
        for e in exps:
            if any(a < 0 for a in e):
                raise ValueError(f"negative exponent in {e}")
        missing = sorted({b for e in exps for b in _box(e)} - exps)
        if missing:
            raise ValueError(
                "not a lower set; missing "
                + ", ".join(str(m) for m in missing)
            )
        object.__setattr__(self, "exponents", tuple(sorted(exps)))

    @property
    def dim(self) -> int:
        return len(self.exponents[0])

    def __iter__(self):
        return iter(self.exponents)

    def __len__(self):
        return len(self.exponents)

    def __contains__(self, alpha):
        return tuple(alpha) in self.exponents

    def is_closed(self) -> bool:
        members = set(self.exponents)
        return all(b in members for e in self.exponents for b in _box(e))


@dataclass(frozen=True)
class Site:
    point: tuple[Fraction, ...]
    delta: LowerSet

    def __post_init__(self):
        object.__setattr__(self, "point", tuple(to_fraction(c) for c in self.point))
        if not isinstance(self.delta, LowerSet):
            object.__setattr__(self, "delta", LowerSet(self.delta))
        if len(self.point) != self.delta.dim:
            raise DimensionError(
                f"point {self.point} and lower set of dimension {self.delta.dim}"
            )


@dataclass(frozen=True)
class Functional:
    """``delta_point o D^derivative``; a Lagrange functional has derivative 0."""

    point: tuple[Fraction, ...]
    derivative: tuple[int, ...]
    kind: str = HERMITE

    def __post_init__(self):
        object.__setattr__(self, "point", tuple(to_fraction(c) for c in self.point))
        object.__setattr__(self, "derivative", tuple(int(a) for a in self.derivative))
        if len(self.point) != len(self.derivative):
            raise DimensionError("point and derivative lengths differ")
        if self.kind not in (HERMITE, LAGRANGE):
            raise ValueError(f"unknown functional kind {self.kind!r}")
        if self.kind == LAGRANGE and any(self.derivative):
            raise ValueError("a lagrange-evaluation functional has derivative 0")

    @classmethod
    def evaluation(cls, point) -> "Functional":
        point = tuple(point)
        return cls(point, (0,) * len(point), LAGRANGE)

    @property
    def dim(self) -> int:
        return len(self.point)

    def __call__(self, p: Polynomial) -> Fraction:
        if p.dim != self.dim:
            raise DimensionError(f"functional in d={self.dim}, polynomial in d={p.dim}")
        total = Fraction(0)
        for beta, c in p.terms().items():
            v = self.monomial_value(beta)
            if v:
                total += c * v
        return total

    def monomial_value(self, beta) -> Fraction:
        """Value on the monomial ``x**beta`` without building a Polynomial."""
        v = Fraction(1)
        for x, a, b in zip(self.point, self.derivative, beta):
            if b < a:
                return Fraction(0)
            if a:
                v *= perm(b, a)
            if b > a:
                v *= x ** (b - a)
        return v

    def __str__(self):
        pt = ",".join(format_rational(c) for c in self.point)
        if any(self.derivative):
            der = ",".join(str(a) for a in self.derivative)
            return f"delta_({pt})*D^({der})"
        return f"delta_({pt})"


def apply_functional(functional: Functional, p: Polynomial) -> Fraction:
    return functional(p)


@dataclass(frozen=True)
class Problem:
    """Validated interpolation scheme; construct through :func:`validate_problem`."""

    sites: tuple[Site, ...]
    dimension: int = field(init=False)

    def __post_init__(self):
        sites = tuple(self.sites)
        if not sites:
            raise ProblemError("at least one site is required")
        d = sites[0].delta.dim
        seen = {}
        for k, s in enumerate(sites):
            if s.delta.dim != d:
                raise ProblemError(f"dimension {s.delta.dim}, expected {d}", site=k)
            if s.point in seen:
                raise ProblemError(
                    f"duplicate point {_fmt_point(s.point)} (also site {seen[s.point]})",
                    site=k,
                )
            seen[s.point] = k
        object.__setattr__(self, "sites", sites)
        object.__setattr__(self, "dimension", d)

    @property
    def n(self) -> int:
        """Total number of interpolation conditions."""
        return sum(len(s.delta) for s in self.sites)

    def conditions(self):
        """(site index, point, alpha) in site-then-lex order."""
        for k, s in enumerate(self.sites):
            for alpha in s.delta:
                yield k, s.point, alpha

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "sites": [
                {
                    "point": [format_rational(c) for c in s.point],
                    "delta": [list(a) for a in s.delta],
                }
                for s in self.sites
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Problem":
        try:
            d = data["dimension"]
            raw = [(s["point"], s["delta"]) for s in data["sites"]]
        except (KeyError, TypeError) as exc:
            raise ProblemError(f"malformed problem document: missing {exc}") from None
        return validate_problem(raw, dimension=d)


def _fmt_point(xi):
    return "(" + ",".join(format_rational(c) for c in xi) + ")"


def validate_problem(sites, dimension: int | None = None) -> Problem:
    """Build a :class:`Problem` from raw ``(point, delta)`` pairs.

    Errors name the offending site index and, for closure failures, the
    missing exponent vectors.
    """
    built = []
    for k, (point, delta) in enumerate(sites):
        try:
            point = tuple(to_fraction(c) for c in point)
        except (TypeError, ValueError) as exc:
            raise ProblemError(f"bad coordinate: {exc}", site=k) from None
        d = dimension if dimension is not None else len(point)
        if len(point) != d:
            raise ProblemError(f"point has {len(point)} coordinates, expected {d}", site=k)
        delta = [tuple(a) for a in delta]
        if not delta:
            raise ProblemError("empty delta set", site=k)
        for a in delta:
            if len(a) != d:
                raise ProblemError(f"exponent {a} has length {len(a)}, expected {d}", site=k)
        try:
            lower = LowerSet(delta)
        except (ValueError, TypeError) as exc:
            raise ProblemError(str(exc), site=k) from None
        built.append(Site(point, lower))
    return Problem(tuple(built))


def load_problem(path) -> Problem:
    with open(Path(path), encoding="utf-8") as fh:
        return Problem.from_dict(json.load(fh))


def eta0_squared(problem: Problem):
    """Square of the Lemma-2 bound: min ||dxi||^2 / ||dalpha||^2 over cross-site pairs."""
    best = INFINITY
    sites = problem.sites
    for k, l in itertools.combinations(range(len(sites)), 2):
        dxi = sum((a - b) ** 2 for a, b in zip(sites[k].point, sites[l].point))
        # largest ||alpha - alpha'|| gives the smallest ratio for this site pair
        far = max(
            sum((a - b) ** 2 for a, b in zip(al, alp))
            for al in sites[k].delta
            for alp in sites[l].delta
        )
        if far == 0:
            continue
        best = min(best, Fraction(dxi, far))
    return best


def perturbed_sites(problem: Problem, h) -> list[tuple[Fraction, ...]]:
    """Points ``xi^(k) + h*alpha`` in site-then-lex order."""
    h = to_fraction(h)
    if h == 0:
        raise ValueError("perturbation h must be nonzero")
    return [
        tuple(x + h * a for x, a in zip(point, alpha))
        for _, point, alpha in problem.conditions()
    ]


def hermite_basis(problem: Problem) -> list[Functional]:
    return [Functional(point, alpha, HERMITE) for _, point, alpha in problem.conditions()]


def lagrange_basis(problem: Problem, h) -> list[Functional]:
    return [Functional.evaluation(pt) for pt in perturbed_sites(problem, h)]


def algebraic_multiset(problem: Problem) -> list[tuple[tuple[Fraction, int], ...]]:
    """Interleave each condition into ``((xi_1, alpha_1), ..., (xi_d, alpha_d))``."""
    return [
        tuple(zip(point, alpha)) for _, point, alpha in problem.conditions()
    ]
