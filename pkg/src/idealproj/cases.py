"""Ready-made interpolation schemes and test functions.

``example1``: values and first partials at (0,0) and (1,1) in the plane.
``example2``: the same pattern at (0,0,0) and (1,1,1) in space.
"""

from __future__ import annotations

from .parsing import parse_polynomial
from .problem import Functional, Problem, validate_problem

__all__ = [
    "F1_TEXT",
    "F2_TEXT",
    "example1",
    "example2",
    "f1",
    "f2",
    "nonconvergent_functionals",
    "total_degree_two",
]

F1_TEXT = "1 + (1-x1)^4 + (1-x2)^4"
F2_TEXT = "1 + (1-x1)^2 + (1-x2)^2 + (1-x3)^2"

_FIRST_ORDER_2D = [(0, 0), (1, 0), (0, 1)]
_FIRST_ORDER_3D = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]


def example1() -> Problem:
    return validate_problem([((0, 0), _FIRST_ORDER_2D), ((1, 1), _FIRST_ORDER_2D)])


def example2() -> Problem:
    return validate_problem([((0, 0, 0), _FIRST_ORDER_3D), ((1, 1, 1), _FIRST_ORDER_3D)])


def f1():
    return parse_polynomial(F1_TEXT, 2)


def f2():
    return parse_polynomial(F2_TEXT, 3)


def nonconvergent_functionals() -> list[Functional]:
    """Hermite conditions whose limit range is not the total-degree-2 space."""
    return [Functional(pt, a) for pt in [(0, 0), (1, 1)] for a in _FIRST_ORDER_2D]


def total_degree_two() -> list[tuple[int, int]]:
    """``1, x1, x2, x1^2, x1*x2, x2^2`` as exponent vectors."""
    return [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
