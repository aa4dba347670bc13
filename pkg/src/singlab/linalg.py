"""Exact linear algebra: Bareiss determinants, rational null spaces and a
sparse fraction-free row echelon routine used for Macaulay matrices."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def integer_row(row: Sequence) -> list[int]:
    """Scale a rational row to a primitive integer row (sign preserved)."""
    den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    ints = [int(Fraction(x) * den) for x in row]
    g = gcd(*ints)
    return [x // g for x in ints] if g > 1 else ints


def bareiss_det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-free Bareiss elimination.

    Rational entries are accepted; rows are cleared of denominators first and
    the scale factors are divided back out at the end.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for row in matrix:
        den = lcm(*(Fraction(x).denominator for x in row))
        scale /= den
        m.append([int(Fraction(x) * den) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1] * scale


def rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m[:r], pivots


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    return len(rref(matrix)[1])


def nullspace(matrix: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : matrix @ x = 0}`` in ``ncols`` unknowns."""
    if not matrix:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


class SparseEchelon:
    """Incremental fraction-free row echelon form over the integers.

    Rows are dicts ``{column: int}``. A row's pivot is its smallest column.
    Inserting a row reduces its leading entry against existing pivots by
    cross-multiplication, then strips the integer content, so no rational
    arithmetic is ever needed.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def insert(self, row: dict[int, int]) -> int | None:
        """Add ``row``; return its new pivot column, or None if it was dependent."""
        row = {c: v for c, v in row.items() if v}
        pivots = self.pivots
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    row = {k: v // g for k, v in row.items()}
                pivots[c] = row
                return c
            a = row[c]
            b = prow[c]
            g = gcd(a, b)
            fa, fb = b // g, a // g
            new = {k: v * fa for k, v in row.items()} if fa != 1 else dict(row)
            for k, v in prow.items():
                val = new.get(k, 0) - fb * v
                if val:
                    new[k] = val
                else:
                    new.pop(k, None)
            row = new
        return None

    def extend(self, rows: Iterable[dict[int, int]]):
        for row in rows:
            self.insert(row)
