"""Forward differences of polynomials, expanded exactly in ``h``.

The i-th forward difference at ``xi``,

    sum_{0 <= j <= i} (-1)^|j| C(i, j) p(xi + h (i - j)),

is a polynomial in ``h``.  Its coefficients below ``h^|i|`` vanish, the
``h^|i|`` coefficient is ``(D^i p)(xi)``, and nothing survives above that
unless some support exponent of ``p`` lies strictly above ``i``.  This
module computes the expansion two independent ways and checks all three
facts without taking any limits.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from .errors import DimensionError
from .poly import Polynomial, UniPoly, less_m, product_leq, product_lt, substitute_line, to_fraction

__all__ = [
    "DifferenceReport",
    "binomial_sum",
    "forward_difference_poly",
    "forward_difference_tensor",
    "lemma_case",
    "random_case",
    "verify_difference_lemmas",
]


def binomial_sum(i: int, m: int) -> int:
    """``sum_{j=0}^{i-1} (-1)^j C(i,j) (i-j)^m``: ``i!`` if ``m == i``, 0 if ``m < i``."""
    if not (isinstance(i, int) and isinstance(m, int)) or not i >= m > 0:
        raise ValueError(f"need integers with i >= m > 0, got i={i}, m={m}")
    return sum((-1) ** j * comb(i, j) * (i - j) ** m for j in range(i))


def _check(p: Polynomial, xi, i):
    xi = tuple(to_fraction(c) for c in xi)
    i = tuple(int(v) for v in i)
    if len(xi) != p.dim or len(i) != p.dim:
        raise DimensionError(f"expected dimension {p.dim}")
    if any(v < 0 for v in i):
        raise ValueError(f"negative difference order {i}")
    return xi, i


def forward_difference_poly(p: Polynomial, xi, i) -> UniPoly:
    """Direct route: sum the shifted line expansions over the whole box ``0 <= j <= i``."""
    xi, i = _check(p, xi, i)
    total = UniPoly()
    for j in itertools.product(*(range(v + 1) for v in i)):
        weight = (-1) ** sum(j) * prod(comb(a, b) for a, b in zip(i, j))
        shift = tuple(a - b for a, b in zip(i, j))
        total = total + substitute_line(p, xi, shift) * weight
    return total


def _univariate(x: Fraction, i: int, a: int) -> UniPoly:
    total = UniPoly()
    for j in range(i + 1):
        line = UniPoly([x, i - j]) ** a
        total = total + line * ((-1) ** j * comb(i, j))
    return total


def forward_difference_tensor(p: Polynomial, xi, i) -> UniPoly:
    """Per-monomial product of one-variable differences, summed over the support."""
    xi, i = _check(p, xi, i)
    total = UniPoly()
    for alpha, c in p.terms().items():
        term = UniPoly([c])
        for x, ik, ak in zip(xi, i, alpha):
            term = term * _univariate(x, ik, ak)
        total = total + term
    return total


def lemma_case(alpha, i) -> str:
    """Which branch a monomial falls into: ``"alpha<=i"``, ``"i<alpha"`` or ``"incomparable"``."""
    if product_leq(alpha, i):
        return "alpha<=i"
    if product_lt(i, alpha):
        return "i<alpha"
    return "incomparable"


@dataclass(frozen=True)
class DifferenceReport:
    p: Polynomial
    xi: tuple[Fraction, ...]
    i: tuple[int, ...]
    result: UniPoly
    low_order_vanishing: bool
    matched_derivative: bool
    exact_no_remainder: bool
    has_less_m: bool
    tensor_consistent: bool

    @property
    def order(self) -> int:
        return sum(self.i)

    @property
    def passed(self) -> bool:
        return (
            self.low_order_vanishing
            and self.matched_derivative
            and self.tensor_consistent
            and (self.has_less_m or self.exact_no_remainder)
        )

    def quotient(self) -> UniPoly:
        """The expansion divided by ``h^|i|``; its value at ``h = 0`` is ``(D^i p)(xi)``."""
        return self.result.shift_down(self.order)


def verify_difference_lemmas(p: Polynomial, xi, i) -> DifferenceReport:
    if p.is_zero():
        raise ValueError("the difference lemmas concern nonzero polynomials")
    xi, i = _check(p, xi, i)
    result = forward_difference_poly(p, xi, i)
    k = sum(i)
    derivative = p.diff(i)(xi)
    return DifferenceReport(
        p=p,
        xi=xi,
        i=i,
        result=result,
        low_order_vanishing=all(result.coeff(t) == 0 for t in range(k)),
        matched_derivative=result.coeff(k) == derivative,
        exact_no_remainder=result.degree() <= k,
        has_less_m=less_m(p, i),
        tensor_consistent=result == forward_difference_tensor(p, xi, i),
    )


def random_case(rng: random.Random, max_dim: int = 3, max_order: int = 3, max_degree: int = 6):
    """A random ``(p, xi, i)`` triple with small rational data."""
    d = rng.randint(1, max_dim)
    i = tuple(rng.randint(0, max_order) for _ in range(d))
    nterms = 1 if rng.random() < 0.3 else rng.randint(2, 5)
    terms = {}
    while len(terms) < nterms:
        alpha = [rng.randint(0, max_degree) for _ in range(d)]
        while sum(alpha) > max_degree:
            k = rng.randrange(d)
            if alpha[k]:
                alpha[k] -= 1
        terms[tuple(alpha)] = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 4))
    xi = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(d))
    return Polynomial(terms, d), xi, i
