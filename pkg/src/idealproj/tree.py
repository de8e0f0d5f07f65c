"""Rooted d-level trees over coordinate suffixes, and the tree-based bound eta.

Level 1 holds the last coordinate of each tuple, level 2 the one before,
and so on; two tuples share a path down to level k exactly when their
last k coordinates agree.  Only the branching pattern matters for the
lex escalier, so trees are compared as unordered rooted trees.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError
from .poly import format_rational
from .problem import INFINITY, Problem, algebraic_multiset

__all__ = [
    "LexTree",
    "Node",
    "algorithm1_eta",
    "build_tree",
    "dump_tree",
    "same_structure",
    "tree_shape",
]


@dataclass(frozen=True)
class Node:
    label: object
    children: tuple["Node", ...] = ()

    def count(self) -> int:
        return 1 + sum(c.count() for c in self.children)


@dataclass(frozen=True)
class LexTree:
    root: Node
    depth: int
    leaves: int

    def sibling_groups(self):
        """Yield ``(level, labels)`` for the children of every node."""
        stack = [(self.root, 1)]
        while stack:
            node, level = stack.pop()
            if node.children:
                yield level, [c.label for c in node.children]
                stack.extend((c, level + 1) for c in node.children)

    def level_labels(self, level: int) -> list:
        return [lab for lev, labs in self.sibling_groups() if lev == level for lab in labs]

    def node_count(self) -> int:
        return self.root.count()


def _build(items: list[tuple], level: int, depth: int) -> tuple[Node, ...]:
    if level > depth:
        return ()
    idx = depth - level  # coordinate consumed at this level
    groups: dict = {}
    for t in items:
        groups.setdefault(t[idx], []).append(t)
    return tuple(
        Node(label, _build(members, level + 1, depth))
        for label, members in sorted(groups.items())
    )


def build_tree(tuples: Sequence[Sequence]) -> LexTree:
    items = [tuple(t) for t in tuples]
    if not items:
        raise ValueError("cannot build a tree from no tuples")
    depth = len(items[0])
    if depth < 1 or any(len(t) != depth for t in items):
        raise DimensionError("tuples must share one positive dimension")
    if len(set(items)) != len(items):
        seen = set()
        dup = next(t for t in items if t in seen or seen.add(t))
        raise ValueError(f"duplicate tuple {dup}")
    return LexTree(Node(None, _build(items, 1, depth)), depth, len(items))


def tree_shape(tree: LexTree | Node):
    """Canonical label-blind form: nested tuples of sorted child shapes."""
    node = tree.root if isinstance(tree, LexTree) else tree
    return tuple(sorted(tree_shape(c) for c in node.children))


def same_structure(a: LexTree, b: LexTree) -> bool:
    if a.depth != b.depth:
        raise DimensionError(f"tree depths differ: {a.depth} vs {b.depth}")
    return tree_shape(a) == tree_shape(b)


def _group_bound(labels) -> Fraction | float:
    best = INFINITY
    for (x1, a1), (x2, a2) in itertools.combinations(labels, 2):
        if x1 != x2 and a1 != a2:
            best = min(best, abs(x1 - x2) / abs(a1 - a2))
    return best


def algorithm1_eta(problem: Problem):
    """Largest |h| bound keeping T(Xi_h) shaped like T(Omega).

    Minimum over every sibling group of the tree of the algebraic
    multiset of ``|xi_i - xi_j| / |alpha_i - alpha_j|`` for label pairs
    differing in both components; ``INFINITY`` if no such pair exists.
    """
    tree = build_tree(algebraic_multiset(problem))
    best = INFINITY
    for _, labels in tree.sibling_groups():
        if len(labels) >= 2:
            best = min(best, _group_bound(labels))
    return best


def _fmt_label(label) -> str:
    if isinstance(label, tuple):
        x, a = label
        return f"{format_rational(x)};{a}"
    return format_rational(Fraction(label))


def dump_tree(tree: LexTree, format: str = "ascii") -> str:
    if format == "ascii":
        lines = ["*"]

        def walk(node, prefix):
            for i, child in enumerate(node.children):
                last = i == len(node.children) - 1
                lines.append(f"{prefix}{'`-- ' if last else '|-- '}{_fmt_label(child.label)}")
                walk(child, prefix + ("    " if last else "|   "))

        walk(tree.root, "")
        return "\n".join(lines) + "\n"
    if format == "dot":
        # node names are "L<level>_<path index>"
        lines = ["digraph lextree {", '  L0_0 [label="root"];']
        counters = [itertools.count() for _ in range(tree.depth + 1)]

        def walk_dot(node, name, level):
            for child in node.children:
                cname = f"L{level}_{next(counters[level])}"
                lines.append(f'  {cname} [label="{_fmt_label(child.label)}"];')
                lines.append(f"  {name} -> {cname};")
                walk_dot(child, cname, level + 1)

        walk_dot(tree.root, "L0_0", 1)
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown tree format {format!r}; use 'ascii' or 'dot'")
