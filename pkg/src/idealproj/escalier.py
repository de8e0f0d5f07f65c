"""Lex Groebner escaliers of functional kernels.

The escalier of ``ker Lambda`` is the set of monomials whose value vector
``(lambda_1(x^b), ..., lambda_n(x^b))`` is not in the span of the vectors
of lex-smaller monomials.  :func:`groebner_escalier` finds it greedily,
Buchberger-Moeller style: candidates are visited in increasing lex order,
accepted ones spawn their variable successors, and rejected ones close
off all their multiples.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from typing import Sequence

from .errors import CoincidentPointsError, DependentFunctionalsError
from .linalg import Echelon
from .poly import format_rational, monomial_name
from .problem import Functional, Problem, hermite_basis, lagrange_basis, perturbed_sites

__all__ = [
    "Escalier",
    "groebner_escalier",
    "range_lex",
    "range_lex_perturbed",
    "ranges_equal",
]


@dataclass(frozen=True)
class Escalier:
    """Monomial basis of the quotient, increasing lex order."""

    monomials: tuple[tuple[int, ...], ...]
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "monomials", tuple(sorted(tuple(m) for m in self.monomials)))

    def __iter__(self):
        return iter(self.monomials)

    def __len__(self):
        return len(self.monomials)

    def __contains__(self, alpha):
        return tuple(alpha) in self.monomials

    def as_set(self) -> frozenset:
        return frozenset(self.monomials)

    def to_json(self) -> str:
        return json.dumps([list(m) for m in self.monomials])

    def __str__(self):
        return "{" + ", ".join(monomial_name(m) for m in self.monomials) + "}"


def _successors(beta):
    for k in range(len(beta)):
        yield beta[:k] + (beta[k] + 1,) + beta[k + 1:]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def groebner_escalier(functionals: Sequence[Functional], dim: int | None = None) -> Escalier:
    functionals = list(functionals)
    if not functionals:
        raise ValueError("at least one functional is required")
    if dim is None:
        dim = functionals[0].dim
    n = len(functionals)
    ech = Echelon(n)
    accepted: list[tuple[int, ...]] = []
    rejected: list[tuple[int, ...]] = []
    zero = (0,) * dim
    pool = [zero]
    queued = {zero}
    while pool and len(accepted) < n:
        beta = heapq.heappop(pool)
        if any(_divides(r, beta) for r in rejected):
            continue
        vec = [f.monomial_value(beta) for f in functionals]
        if ech.add(vec):
            accepted.append(beta)
            for s in _successors(beta):
                if s not in queued:
                    queued.add(s)
                    heapq.heappush(pool, s)
        else:
            rejected.append(beta)
    if len(accepted) < n:
        raise DependentFunctionalsError(
            f"functionals span only {len(accepted)} of {n} dimensions",
            index=_first_dependent(functionals, accepted),
        )
    return Escalier(tuple(accepted), dim)


def _first_dependent(functionals, monomials):
    # once the search is exhausted every monomial reduces onto `monomials`,
    # so row dependence over these columns is dependence on the whole ring
    ech = Echelon(len(monomials))
    for i, f in enumerate(functionals):
        if not ech.add([f.monomial_value(m) for m in monomials]):
            return i
    return None


def range_lex(problem: Problem) -> Escalier:
    return groebner_escalier(hermite_basis(problem), problem.dimension)


def check_distinct(points):
    seen = {}
    for i, pt in enumerate(points):
        if pt in seen:
            j = seen[pt]
            coords = ",".join(format_rational(c) for c in pt)
            raise CoincidentPointsError(
                f"perturbed points {j} and {i} coincide at ({coords})", pair=(j, i)
            )
        seen[pt] = i


def range_lex_perturbed(problem: Problem, h) -> Escalier:
    check_distinct(perturbed_sites(problem, h))
    return groebner_escalier(lagrange_basis(problem, h), problem.dimension)


def ranges_equal(problem: Problem, h) -> bool:
    return range_lex(problem).as_set() == range_lex_perturbed(problem, h).as_set()
