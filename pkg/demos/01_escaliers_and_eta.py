"""Escaliers, the lex tree and the admissible perturbation size.

We take two sites in the plane, each carrying the value and both first
partial derivatives, and ask three questions:

* which monomials span the range of the Hermite projector (its lex escalier),
* how far the derivative conditions may be spread into point evaluations
  before that escalier changes (the bound eta),
* what the lex tree of the perturbed points looks like next to the tree of
  the algebraic multiset.
"""

from fractions import Fraction

from idealproj import (
    algebraic_multiset,
    algorithm1_eta,
    build_tree,
    dump_tree,
    eta0_squared,
    perturbed_sites,
    range_lex,
    range_lex_perturbed,
    same_structure,
)
from idealproj.cases import example1
from idealproj.problem import format_bound

problem = example1()
print("sites:")
for site in problem.sites:
    print("  point", tuple(str(c) for c in site.point), "derivatives", list(site.delta))

esc = range_lex(problem)
print("\nlex escalier of the Hermite projector:", esc)

eta = algorithm1_eta(problem)
print("eta from the lex tree:", format_bound(eta))
print("eta0^2 (distinctness bound):", format_bound(eta0_squared(problem)))

# The algebraic multiset pairs each coordinate with its derivative order.
omega = build_tree(algebraic_multiset(problem))
print("\ntree of the algebraic multiset:")
print(dump_tree(omega), end="")

# Spread the derivatives into nearby points: xi + h*alpha.  Only |h| < eta
# is guaranteed; h = 3/2 lies outside and happens to keep the escalier here.
for h in (eta / 2, eta / 10, Fraction(3, 2)):
    pts = perturbed_sites(problem, h)
    same_tree = same_structure(omega, build_tree(pts))
    same_range = range_lex_perturbed(problem, h) == esc
    print(f"h = {h}: same tree shape: {same_tree}, same escalier: {same_range}")
