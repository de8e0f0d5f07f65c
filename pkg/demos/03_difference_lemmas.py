"""Forward differences, expanded exactly in h.

The i-th forward difference of p at xi is a polynomial in h.  Its
coefficients below h^|i| vanish, and the h^|i| coefficient is the
unnormalised derivative D^i p at xi.  Higher powers of h survive only when
some exponent in the support of p lies strictly above i.  Nothing here
takes a limit; every claim is checked on the exact expansion.
"""

import random

from idealproj import parse_polynomial
from idealproj.differences import binomial_sum, lemma_case, random_case, verify_difference_lemmas

print("sum_j (-1)^j C(i,j) (i-j)^m for m <= i:")
for i in range(1, 6):
    print(f"  i = {i}:", [binomial_sum(i, m) for m in range(1, i + 1)])

examples = [
    ("x1^2", (3,), (1,)),
    ("3*x1^2*x2 - x1 + 4", (-1, 2), (2, 1)),
    ("x1^3*x2^2 + x1*x2", (1, 1), (1, 1)),
    ("x1*x2^2", (0, 0), (1, 0)),
]
for text, xi, i in examples:
    p = parse_polynomial(text, len(xi))
    rep = verify_difference_lemmas(p, xi, i)
    cases = sorted({lemma_case(a, i) for a in p.support()})
    print(f"\np = {p}, xi = {xi}, i = {i}")
    print("  expansion in h:", rep.result)
    print("  divided by h^|i| at h = 0:", rep.quotient()(0))
    print("  support cases:", ", ".join(cases))
    print("  terms above h^|i|:", not rep.exact_no_remainder)

rng = random.Random(0)
reports = [verify_difference_lemmas(*random_case(rng)) for _ in range(200)]
print(f"\n{sum(r.passed for r in reports)} of {len(reports)} random cases satisfy every check")
