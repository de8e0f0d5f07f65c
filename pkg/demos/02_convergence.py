"""Watching P_h f approach P f as the perturbation shrinks.

For each h the perturbed Lagrange projector P_h interpolates f at the points
xi + h*alpha.  Expressed in the Hermite escalier, its coefficients converge
to those of the Hermite interpolant P f.  The table lists the exact
sup-norm coefficient distance, which drops by roughly a factor of ten each
time h does: the error is first order in h.
"""

from fractions import Fraction

from idealproj import border_basis, convergence_table, hermite_interpolant
from idealproj.cases import example1, example2, f1, f2
from idealproj.projector import sup_distance

hs = [Fraction(1, 10**k) for k in range(1, 5)]

for name, problem, f in (("first example", example1(), f1()), ("second example", example2(), f2())):
    print(f"== {name}: f = {f}")
    print("P f =", hermite_interpolant(problem, f).polynomial)
    table = convergence_table(problem, f, hs)
    print(table.render(decimal=True))
    d = table.distances()
    print("successive ratios:", ", ".join(str(b / a) for a, b in zip(d, d[1:])))
    print()

# The kernel converges too: compare the border bases of ker P_h and ker P.
problem = example1()
target = border_basis(problem).coefficient_vector()
print("border-basis distance to ker P:")
for h in hs:
    gap = sup_distance(border_basis(problem, h).coefficient_vector(), target)
    print(f"  h = {h}: {gap}")
