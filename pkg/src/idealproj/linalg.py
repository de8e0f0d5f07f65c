"""Exact Gaussian elimination over Fractions.

No magnitude pivoting: with exact arithmetic the first nonzero entry in a
column is as good a pivot as any.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import SingularMatrixError

__all__ = ["Echelon", "determinant", "rank", "solve"]


def _copy(matrix) -> list[list[Fraction]]:
    rows = [[Fraction(v) for v in row] for row in matrix]
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
    return rows


def _square(rows):
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError(f"expected a square matrix, got {n} rows of width {len(rows[0])}")
    return n


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    a = _copy(matrix)
    n = _square(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f /= p
                row_r, row_c = a[r], a[col]
                for c in range(col, n):
                    row_r[c] -= f * row_c[c]
    return det


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly; raises SingularMatrixError."""
    a = _copy(matrix)
    n = _square(a)
    if len(rhs) != n:
        raise ValueError(f"right-hand side has length {len(rhs)}, expected {n}")
    for r, v in zip(a, rhs):
        r.append(Fraction(v))
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {col})")
        a[col], a[piv] = a[piv], a[col]
        row_c = a[col]
        p = row_c[col]
        for c in range(col, n + 1):
            row_c[c] /= p
        for r in range(n):
            if r == col:
                continue
            f = a[r][col]
            if f:
                row_r = a[r]
                for c in range(col, n + 1):
                    row_r[c] -= f * row_c[c]
    return [row[n] for row in a]


class Echelon:
    """Incrementally maintained reduced row-echelon basis of a vector span."""

    def __init__(self, width: int):
        self.width = width
        self._rows: list[tuple[int, list[Fraction]]] = []

    def __len__(self):
        return len(self._rows)

    def reduce(self, vector) -> list[Fraction]:
        v = [Fraction(x) for x in vector]
        if len(v) != self.width:
            raise ValueError(f"vector has length {len(v)}, expected {self.width}")
        for piv, row in self._rows:
            f = v[piv]
            if f:
                for c in range(self.width):
                    if row[c]:
                        v[c] -= f * row[c]
        return v

    def contains(self, vector) -> bool:
        return not any(self.reduce(vector))

    def add(self, vector) -> bool:
        """Insert ``vector``; returns False (and leaves the span unchanged) if dependent."""
        v = self.reduce(vector)
        piv = next((c for c, x in enumerate(v) if x), None)
        if piv is None:
            return False
        p = v[piv]
        v = [x / p for x in v]
        # keep earlier rows reduced against the new pivot
        for _, row in self._rows:
            f = row[piv]
            if f:
                for c in range(self.width):
                    row[c] -= f * v[c]
        self._rows.append((piv, v))
        return True


def rank(matrix: Sequence[Sequence]) -> int:
    rows = _copy(matrix)
    if not rows:
        return 0
    ech = Echelon(len(rows[0]))
    return sum(ech.add(r) for r in rows)
