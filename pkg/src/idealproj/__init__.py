"""Exact ideal projectors of type partial derivative and their Lagrange perturbations."""

from .differences import (
    DifferenceReport,
    binomial_sum,
    forward_difference_poly,
    forward_difference_tensor,
    verify_difference_lemmas,
)
from .errors import (
    CoincidentPointsError,
    DependentFunctionalsError,
    DimensionError,
    IdealProjError,
    ParseError,
    ProblemError,
    SingularMatrixError,
)
from .escalier import Escalier, groebner_escalier, range_lex, range_lex_perturbed, ranges_equal
from .parsing import parse_polynomial
from .poly import (
    MonomialOrder,
    Polynomial,
    UniPoly,
    differentiate,
    evaluate,
    format_rational,
    leading_monomial,
    less_m,
    parse_rational,
    product_leq,
    product_lt,
    substitute_line,
)
from .problem import (
    INFINITY,
    Functional,
    LowerSet,
    Problem,
    Site,
    algebraic_multiset,
    apply_functional,
    eta0_squared,
    hermite_basis,
    lagrange_basis,
    load_problem,
    perturbed_sites,
    validate_problem,
)
from .projector import (
    BorderBasis,
    CollocationMatrix,
    ConvergenceTable,
    Interpolant,
    border_basis,
    border_set,
    collocation_matrix,
    convergence_table,
    hermite_interpolant,
    interpolate,
    is_unisolvent,
    lagrange_interpolant,
    solve_exact,
)
from .tree import LexTree, algorithm1_eta, build_tree, dump_tree, same_structure

__version__ = "0.1.0"
