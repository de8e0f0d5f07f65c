"""Collocation systems, interpolants, border bases and convergence tables."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import IdealProjError
from .escalier import Escalier, check_distinct, groebner_escalier, range_lex
from .poly import Polynomial, format_rational, monomial_name, to_fraction
from .problem import Functional, Problem, hermite_basis, lagrange_basis, perturbed_sites

__all__ = [
    "BorderBasis",
    "CollocationMatrix",
    "ConvergenceRow",
    "ConvergenceTable",
    "Interpolant",
    "border_basis",
    "border_set",
    "collocation_matrix",
    "convergence_table",
    "hermite_interpolant",
    "interpolate",
    "is_unisolvent",
    "lagrange_interpolant",
    "solve_exact",
    "sup_distance",
]


@dataclass(frozen=True)
class CollocationMatrix:
    """``entries[i][j] = functionals[i](x**monomials[j])``."""

    entries: tuple[tuple[Fraction, ...], ...]
    functionals: tuple[Functional, ...]
    monomials: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def determinant(self) -> Fraction:
        return linalg.determinant(self.entries)

    def solve(self, rhs) -> list[Fraction]:
        return linalg.solve(self.entries, rhs)


def collocation_matrix(functionals: Sequence[Functional], monomials) -> CollocationMatrix:
    functionals = tuple(functionals)
    monomials = tuple(tuple(m) for m in monomials)
    if len(functionals) != len(monomials):
        raise ValueError(
            f"{len(functionals)} functionals against {len(monomials)} monomials"
        )
    entries = tuple(
        tuple(f.monomial_value(m) for m in monomials) for f in functionals
    )
    return CollocationMatrix(entries, functionals, monomials)


def solve_exact(matrix, rhs) -> list[Fraction]:
    """Exact solution of a nonsingular system; raises SingularMatrixError."""
    entries = matrix.entries if isinstance(matrix, CollocationMatrix) else matrix
    return linalg.solve(entries, [to_fraction(v) for v in rhs])


def is_unisolvent(functionals: Sequence[Functional], monomials) -> bool:
    return collocation_matrix(functionals, monomials).determinant() != 0


@dataclass(frozen=True)
class Interpolant:
    polynomial: Polynomial
    basis: Escalier
    coefficients: tuple[Fraction, ...]
    functionals: tuple[Functional, ...] = field(repr=False)
    h: Fraction | None = None

    def residuals(self, f: Polynomial) -> list[Fraction]:
        """``lambda(f - Pf)`` for every defining functional; all zero for a true interpolant."""
        diff = f - self.polynomial
        return [lam(diff) for lam in self.functionals]

    def __str__(self):
        return str(self.polynomial)


def _combine(basis, coeffs, dim) -> Polynomial:
    return Polynomial(dict(zip(basis, coeffs)), dim)


def interpolate(functionals: Sequence[Functional], f: Polynomial, basis: Escalier | None = None,
                h=None) -> Interpolant:
    """Interpolate ``f`` on ``functionals`` in ``basis`` (default: their lex escalier)."""
    functionals = tuple(functionals)
    if basis is None:
        basis = groebner_escalier(functionals, f.dim)
    m = collocation_matrix(functionals, basis.monomials)
    coeffs = tuple(m.solve([lam(f) for lam in functionals]))
    return Interpolant(
        _combine(basis.monomials, coeffs, f.dim),
        basis,
        coeffs,
        functionals,
        None if h is None else to_fraction(h),
    )


def hermite_interpolant(problem: Problem, f: Polynomial, basis: Escalier | None = None) -> Interpolant:
    if basis is None:
        basis = range_lex(problem)
    return interpolate(hermite_basis(problem), f, basis)


def lagrange_interpolant(problem: Problem, h, f: Polynomial,
                         basis: Escalier | None = None) -> Interpolant:
    """``P_h f`` expressed in the Hermite escalier unless ``basis`` is given.

    Raises SingularMatrixError when the perturbed points are not unisolvent
    for that basis, which can happen outside the guaranteed range of ``h``.
    """
    h = to_fraction(h)
    check_distinct(perturbed_sites(problem, h))
    if basis is None:
        basis = range_lex(problem)
    return interpolate(lagrange_basis(problem, h), f, basis, h=h)


def border_set(basis) -> list[tuple[int, ...]]:
    monomials = set(tuple(m) for m in basis)
    if not monomials:
        raise ValueError("border of an empty basis")
    d = len(next(iter(monomials)))
    out = {(0,) * d}
    for m in monomials:
        for k in range(d):
            out.add(m[:k] + (m[k] + 1,) + m[k + 1:])
    return sorted(out - monomials)


@dataclass(frozen=True)
class BorderBasis:
    """Pairs ``(b, b - P b)`` over the border of ``basis``."""

    elements: tuple[tuple[tuple[int, ...], Polynomial], ...]
    basis: Escalier
    h: Fraction | None = None

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def polynomials(self) -> list[Polynomial]:
        return [g for _, g in self.elements]

    def coefficient_vector(self) -> list[Fraction]:
        """Coefficients on the basis monomials, element by element."""
        return [g.coeff(m) for _, g in self.elements for m in self.basis]


def border_basis(problem: Problem, h=None, basis: Escalier | None = None) -> BorderBasis:
    """Border basis of ``ker P`` (``h is None``) or of ``ker P_h``."""
    if basis is None:
        basis = range_lex(problem)
    if h is None:
        functionals = hermite_basis(problem)
    else:
        h = to_fraction(h)
        check_distinct(perturbed_sites(problem, h))
        functionals = lagrange_basis(problem, h)
    m = collocation_matrix(functionals, basis.monomials)
    d = problem.dimension
    elements = []
    for b in border_set(basis):
        mono = Polynomial.monomial(b)
        coeffs = m.solve([lam.monomial_value(b) for lam in functionals])
        elements.append((b, mono - _combine(basis.monomials, coeffs, d)))
    return BorderBasis(tuple(elements), basis, h)


def sup_distance(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise ValueError("coefficient vectors differ in length")
    return max((abs(x - y) for x, y in zip(a, b)), default=Fraction(0))


@dataclass(frozen=True)
class ConvergenceRow:
    h: Fraction | None
    coefficients: tuple[Fraction, ...] | None
    distance: Fraction | None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass(frozen=True)
class ConvergenceTable:
    basis: Escalier
    rows: tuple[ConvergenceRow, ...]

    @property
    def limit(self) -> ConvergenceRow:
        return self.rows[-1]

    def distances(self) -> list[Fraction | None]:
        return [r.distance for r in self.rows[:-1]]

    def to_dict(self) -> dict:
        return {
            "basis": [list(m) for m in self.basis],
            "rows": [
                {
                    "h": None if r.h is None else format_rational(r.h),
                    "coefficients": None if r.coefficients is None
                    else [format_rational(c) for c in r.coefficients],
                    "distance": None if r.distance is None else format_rational(r.distance),
                    "error": r.error,
                }
                for r in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def render(self, decimal: bool = False) -> str:
        """Aligned text table; the decimal column is a display-only preview."""
        header = ["h"] + [monomial_name(m) for m in self.basis] + ["sup-dist"]
        if decimal:
            header.append("~sup-dist (decimal preview)")
        body = []
        for r in self.rows:
            hcell = "P f" if r.h is None else format_rational(r.h)
            if r.error is not None:
                body.append([hcell, f"error: {r.error}"])
                continue
            cells = [hcell] + [format_rational(c) for c in r.coefficients]
            cells.append(format_rational(r.distance))
            if decimal:
                cells.append(f"{float(r.distance):.6e}")
            body.append(cells)
        widths = [max(len(row[i]) for row in [header] + body if i < len(row))
                  for i in range(len(header))]
        lines = []
        for row in [header] + body:
            lines.append("  ".join(c.rjust(widths[i]) for i, c in enumerate(row)).rstrip())
        return "\n".join(lines) + "\n"


def convergence_table(problem: Problem, f: Polynomial, hs: Sequence) -> ConvergenceTable:
    """One row per ``h`` with ``P_h f`` over the Hermite escalier, then ``P f``.

    A failing row records its error and the remaining rows still run.
    """
    basis = range_lex(problem)
    limit = hermite_interpolant(problem, f, basis)
    rows = []
    for h in hs:
        h = to_fraction(h)
        try:
            ph = lagrange_interpolant(problem, h, f, basis)
        except (IdealProjError, ValueError) as exc:
            rows.append(ConvergenceRow(h, None, None, str(exc)))
            continue
        rows.append(ConvergenceRow(h, ph.coefficients,
                                   sup_distance(ph.coefficients, limit.coefficients)))
    rows.append(ConvergenceRow(None, limit.coefficients, Fraction(0)))
    return ConvergenceTable(basis, tuple(rows))
