import itertools
import random
from fractions import Fraction

import pytest

from idealproj import (
    INFINITY,
    DimensionError,
    algebraic_multiset,
    algorithm1_eta,
    build_tree,
    dump_tree,
    perturbed_sites,
    same_structure,
    validate_problem,
)
from idealproj.cases import example1, example2
from idealproj.tree import tree_shape
from randgen import random_problem

F = Fraction


def eta_oracle(problem):
    """Pairs of multiset elements are siblings at level k when their last k-1 coordinates agree."""
    omega = algebraic_multiset(problem)
    d = problem.dimension
    best = INFINITY
    for s, t in itertools.combinations(omega, 2):
        for k in range(1, d + 1):
            if s[d - k + 1:] != t[d - k + 1:]:
                break
            (x1, a1), (x2, a2) = s[d - k], t[d - k]
            if x1 != x2 and a1 != a2:
                best = min(best, abs(x1 - x2) / abs(a1 - a2))
    return best


def path_agreement(tree, s, t):
    node_s = node_t = tree.root
    depth = 0
    for level in range(1, tree.depth + 1):
        node_s = next(c for c in node_s.children if c.label == s[tree.depth - level])
        node_t = next(c for c in node_t.children if c.label == t[tree.depth - level])
        if node_s is not node_t:
            break
        depth = level
    return depth


def common_suffix(s, t):
    n = 0
    for a, b in zip(reversed(s), reversed(t)):
        if a != b:
            break
        n += 1
    return n


def test_example1_multiset_tree():
    tree = build_tree(algebraic_multiset(example1()))
    level1 = [c.label for c in tree.root.children]
    assert level1 == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert [len(c.children) for c in tree.root.children] == [2, 1, 2, 1]
    assert tree.leaves == 6 and tree.node_count() == 11


def test_perturbed_tree_has_same_shape():
    om = build_tree(algebraic_multiset(example1()))
    xi = build_tree(perturbed_sites(example1(), F(1, 10)))
    assert same_structure(om, xi)


def test_single_tuple_is_a_path():
    tree = build_tree([(F(1), F(2), F(3))])
    assert tree.node_count() == 4
    assert tree_shape(tree) == (((((),),),))


def test_shape_differs_from_flat_tree():
    om = build_tree(algebraic_multiset(example1()))
    flat = build_tree([(F(0), F(k)) for k in range(6)])
    assert not same_structure(om, flat)
    assert same_structure(om, om)


def test_depth_mismatch():
    with pytest.raises(DimensionError):
        same_structure(build_tree([(1,)]), build_tree([(1, 2)]))


def test_build_errors():
    with pytest.raises(ValueError, match="duplicate"):
        build_tree([(1, 2), (1, 2)])
    with pytest.raises(DimensionError):
        build_tree([(1, 2), (1,)])


def test_leaf_count_and_suffix_sharing_random():
    rng = random.Random(21)
    for _ in range(40):
        d = rng.randint(1, 3)
        tuples = list({tuple(rng.randint(0, 2) for _ in range(d)) for _ in range(12)})
        tree = build_tree(tuples)
        assert tree.leaves == len(tuples)
        assert sum(1 for lev, labs in tree.sibling_groups() if lev == d for _ in labs) == len(tuples)
        for s, t in itertools.combinations(tuples, 2):
            assert path_agreement(tree, s, t) == common_suffix(s, t)


def test_same_structure_is_an_equivalence():
    rng = random.Random(4)
    trees = []
    for _ in range(15):
        tuples = list({(rng.randint(0, 1), rng.randint(0, 2)) for _ in range(5)})
        trees.append(build_tree(tuples))
        shuffled = tuples[:]
        rng.shuffle(shuffled)
        assert same_structure(trees[-1], build_tree(shuffled))
    for a, b, c in itertools.product(trees[:8], repeat=3):
        assert same_structure(a, a)
        assert same_structure(a, b) == same_structure(b, a)
        if same_structure(a, b) and same_structure(b, c):
            assert same_structure(a, c)


def test_algorithm1_examples():
    assert algorithm1_eta(example1()) == 1
    assert algorithm1_eta(example2()) == 1


def test_algorithm1_univariate():
    prob = validate_problem([((0,), [(0,), (1,), (2,)]), ((1,), [(0,)])])
    assert algorithm1_eta(prob) == eta_oracle(prob) == F(1, 2)


def test_algorithm1_single_site():
    prob = validate_problem([((F(1, 3), 2), [(0, 0), (1, 0), (0, 1), (0, 2)])])
    assert algorithm1_eta(prob) == INFINITY


def test_algorithm1_matches_oracle_random():
    rng = random.Random(13)
    for _ in range(80):
        prob = random_problem(rng)
        assert algorithm1_eta(prob) == eta_oracle(prob)


def test_algorithm1_order_independent():
    rng = random.Random(17)
    for _ in range(30):
        prob = random_problem(rng)
        raw = [(s.point, list(s.delta)) for s in prob.sites]
        rng.shuffle(raw)
        for _, delta in raw:
            rng.shuffle(delta)
        assert algorithm1_eta(validate_problem(raw)) == algorithm1_eta(prob)


@pytest.mark.parametrize("prob", [example1(), example2()], ids=["ex1", "ex2"])
def test_structure_preserved_below_eta(prob):
    eta = algorithm1_eta(prob)
    om = build_tree(algebraic_multiset(prob))
    for h in (eta / 2, -eta / 2, eta / 10):
        assert same_structure(om, build_tree(perturbed_sites(prob, h)))


def test_dump_ascii_and_dot():
    path = build_tree([(F(1), F(2))])
    assert dump_tree(path) == "*\n`-- 2\n    `-- 1\n"
    tree = build_tree(algebraic_multiset(example1()))
    dot = dump_tree(tree, "dot")
    assert dot.startswith("digraph lextree {") and dot.rstrip().endswith("}")
    assert dot.count("[label=") == 11
    assert dot.count("->") == 10
    assert '"0;1"' in dot
    with pytest.raises(ValueError):
        dump_tree(tree, "")
