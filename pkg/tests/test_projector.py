import random
from fractions import Fraction

import pytest
import sympy

from idealproj import (
    Escalier,
    Polynomial,
    SingularMatrixError,
    border_basis,
    border_set,
    collocation_matrix,
    convergence_table,
    hermite_basis,
    hermite_interpolant,
    interpolate,
    is_unisolvent,
    lagrange_basis,
    lagrange_interpolant,
    parse_polynomial,
    range_lex,
    solve_exact,
    validate_problem,
)
from idealproj.cases import example1, example2, f1, f2, nonconvergent_functionals, total_degree_two
from idealproj.projector import sup_distance
from randgen import random_problem

F = Fraction


def sympy_solve(functionals, basis, f):
    m = sympy.Matrix([[sympy.Rational(lam.monomial_value(b)) for b in basis] for lam in functionals])
    rhs = sympy.Matrix([sympy.Rational(lam(f)) for lam in functionals])
    return [F(int(v.p), int(v.q)) for v in m.LUsolve(rhs)]


def test_counterexample_is_singular():
    m = collocation_matrix(nonconvergent_functionals(), total_degree_two())
    assert m.determinant() == 0
    oracle = sympy.Matrix([[sympy.Rational(v) for v in row] for row in m.entries]).det()
    assert oracle == 0
    assert not is_unisolvent(nonconvergent_functionals(), total_degree_two())


def test_small_collocation():
    from idealproj import Functional

    lam = Functional.evaluation((0, 0))
    assert collocation_matrix([lam], [(0, 0)]).entries == ((1,),)
    assert is_unisolvent([lam], [(0, 0)])
    with pytest.raises(ValueError):
        collocation_matrix([lam], [(0, 0), (1, 0)])


def test_example1_collocation_nonsingular():
    prob = example1()
    m = collocation_matrix(hermite_basis(prob), range_lex(prob).monomials)
    assert m.determinant() != 0
    assert is_unisolvent(hermite_basis(prob), range_lex(prob).monomials)


def test_solve_exact():
    assert solve_exact([[1, 0], [0, 1]], [F(3, 7), -2]) == [F(3, 7), -2]
    assert solve_exact([[1, 1], [0, 1]], [2, 1]) == [1, 1]
    with pytest.raises(SingularMatrixError):
        solve_exact([[1, 2], [2, 4]], [1, 1])


def test_solve_exact_example1_system():
    prob = example1()
    basis = range_lex(prob)
    lams = hermite_basis(prob)
    m = collocation_matrix(lams, basis.monomials)
    coeffs = solve_exact(m, [lam(f1()) for lam in lams])
    got = dict(zip(basis.monomials, coeffs))
    assert got == {(0, 0): 3, (0, 1): -4, (1, 0): -4, (0, 2): 6, (1, 1): 4, (0, 3): -4}


def test_hermite_interpolants():
    pf1 = hermite_interpolant(example1(), f1())
    assert pf1.polynomial == parse_polynomial("3 - 4*x2 - 4*x1 + 6*x2^2 + 4*x1*x2 - 4*x2^3", 2)
    pf2 = hermite_interpolant(example2(), f2())
    assert pf2.polynomial == parse_polynomial(
        "4 - 2*x3 - 2*x2 - 2*x1 - x3^2 + 2*x2*x3 + 2*x1*x3", 3
    )
    x2 = Polynomial.var(1, 2)
    assert hermite_interpolant(example1(), x2).polynomial == x2


def test_lagrange_interpolants():
    p = lagrange_interpolant(example1(), F(1, 10), f1())
    assert p.polynomial == parse_polynomial(
        "3 - 385039/99000*x2 - 3439/1000*x1 + 719/150*x2^2 + 86/25*x1*x2 - 1438/495*x2^3", 2
    )
    assert p.h == F(1, 10)
    assert lagrange_interpolant(example1(), F(1, 100), f1()).polynomial.coeff((0, 2)) == F(970199, 165000)
    assert lagrange_interpolant(example2(), F(1, 10), f2()).polynomial.coeff((0, 0, 3)) == F(80, 99)


def test_interpolants_match_sympy_random():
    rng = random.Random(43)
    for _ in range(15):
        prob = random_problem(rng)
        d = prob.dimension
        f = Polynomial({tuple(rng.randint(0, 3) for _ in range(d)): rng.randint(-5, 5) for _ in range(5)}, d)
        basis = range_lex(prob)
        got = hermite_interpolant(prob, f, basis)
        assert list(got.coefficients) == sympy_solve(hermite_basis(prob), basis.monomials, f)


def test_singular_lagrange_is_reported():
    # nodes (0,0), (1/2,0), (0,1) are not collinear, yet they all miss the
    # x2 direction needed by {1, x2, x2^2}: x2^2 - x2 vanishes at each of them
    prob = validate_problem([((0, 0), [(0, 0), (1, 0)]), ((0, 1), [(0, 0)])])
    lams = lagrange_basis(prob, F(1, 2))
    vertical = Escalier(((0, 0), (0, 1), (0, 2)), 2)
    assert not is_unisolvent(lams, vertical.monomials)
    with pytest.raises(SingularMatrixError):
        interpolate(lams, Polynomial.var(0, 2), vertical)
    assert is_unisolvent(lams, range_lex(prob).monomials)


def test_border_set():
    assert border_set([(0, 0)]) == [(0, 1), (1, 0)]
    assert border_set([(0,), (1,)]) == [(2,)]
    assert border_set(range_lex(example1())) == [(0, 4), (1, 2), (1, 3), (2, 0), (2, 1)]


def test_border_basis_single_site():
    prob = validate_problem([((0, 0), [(0, 0)])])
    bb = border_basis(prob)
    assert bb.polynomials() == [Polynomial.var(1, 2), Polynomial.var(0, 2)]


def test_border_basis_example1():
    prob = example1()
    lams = hermite_basis(prob)
    bb = border_basis(prob)
    assert len(bb) == 5
    basis = range_lex(prob)
    x1sq = Polynomial.monomial((2, 0))
    coeffs = sympy_solve(lams, basis.monomials, x1sq)
    expected = x1sq - Polynomial(dict(zip(basis.monomials, coeffs)), 2)
    assert dict(bb.elements)[(2, 0)] == expected
    for b, g in bb:
        assert g.coeff(b) == 1
        assert all(lam(g) == 0 for lam in lams)


def test_border_basis_lagrange_close_to_hermite():
    prob = example1()
    herm = border_basis(prob).coefficient_vector()
    lag = border_basis(prob, F(1, 10))
    for g in lag.polynomials():
        assert all(lam(g) == 0 for lam in lagrange_basis(prob, F(1, 10)))
    gap10 = sup_distance(lag.coefficient_vector(), herm)
    gap100 = sup_distance(border_basis(prob, F(1, 100)).coefficient_vector(), herm)
    assert 0 < gap100 < gap10


def test_convergence_table_values():
    table = convergence_table(example1(), f1(), [F(1, 10), F(1, 100)])
    assert table.rows[0].distance == F(181, 150)
    idx = table.basis.monomials.index((0, 2))
    assert abs(table.rows[1].coefficients[idx] - 6) == F(19801, 165000)
    assert table.limit.h is None and table.limit.distance == 0


def test_convergence_table_in_range():
    f = parse_polynomial("2 - x2 + 3*x1*x2", 2)
    table = convergence_table(example1(), f, [F(1, 10), F(-1, 3), F(1, 7)])
    assert table.distances() == [0, 0, 0]


def test_convergence_table_empty_and_failures():
    assert len(convergence_table(example1(), f1(), []).rows) == 1
    prob = validate_problem([((0,), [(0,), (1,)]), ((1,), [(0,)])])
    table = convergence_table(prob, Polynomial.var(0, 1) ** 3, [F(1), F(1, 10)])
    assert not table.rows[0].ok and "coincide" in table.rows[0].error
    assert table.rows[1].ok


def test_table_rendering():
    table = convergence_table(example1(), f1(), [F(1, 10)])
    text = table.render(decimal=True)
    assert "181/150" in text and "decimal preview" in text and "P f" in text
    data = table.to_dict()
    assert data["rows"][0]["distance"] == "181/150"
    assert data["rows"][-1]["h"] is None


def test_residuals_certificate():
    interp = lagrange_interpolant(example2(), F(1, 1000), f2())
    assert interp.residuals(f2()) == [0] * 8
