"""Exact Gaussian elimination over the rationals.

Small dense systems only; everything here is Fraction arithmetic with
deterministic pivot choices (first nonzero entry, scanning in index
order), so repeated runs produce identical output.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _echelon(rows: list[list[Fraction]], width: int) -> list[int]:
    """Reduce in place to row echelon form; return the pivot column of
    each used row (entries past `width` ride along as an augment)."""
    pivot_cols: list[int] = []
    r = 0
    for c in range(width):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [v * inv if v else Fraction(0) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    return pivot_cols


def gauss_solve(
    matrix: Sequence[Sequence], rhs: Sequence
) -> tuple[list[Fraction] | None, bool]:
    """Solve matrix . z = rhs exactly.

    Returns (None, False) when inconsistent, otherwise (solution, unique)
    where free variables, if any, are set to zero.
    """
    m = len(matrix)
    ncols = len(matrix[0]) if m else 0
    rows = [
        [Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)
    ]
    pivot_cols = _echelon(rows, ncols)
    for i in range(len(pivot_cols), m):
        if rows[i][ncols] != 0:
            return None, False
    sol = [Fraction(0)] * ncols
    for r, c in enumerate(pivot_cols):
        sol[c] = rows[r][ncols]
    return sol, len(pivot_cols) == ncols


def kernel_vector(matrix: Sequence[Sequence]) -> list[Fraction] | None:
    """A nontrivial kernel vector of the matrix, or None at full column rank.

    Deterministic: the first non-pivot column is set to one and the rest
    of the free columns to zero.
    """
    m = len(matrix)
    ncols = len(matrix[0]) if m else 0
    rows = [[Fraction(v) for v in row] for row in matrix]
    pivot_cols = _echelon(rows, ncols)
    pivots = set(pivot_cols)
    free = next((c for c in range(ncols) if c not in pivots), None)
    if free is None:
        return None
    z = [Fraction(0)] * ncols
    z[free] = Fraction(1)
    # Rows are fully reduced, so each pivot variable reads off directly.
    for r, c in enumerate(pivot_cols):
        z[c] = -rows[r][free]
    return z


def affine_dependency(points: Sequence[Sequence[int]]) -> list[Fraction] | None:
    """Coefficients mu with sum(mu) = 0 and sum(mu_i * p_i) = 0, not all
    zero, or None when the points are affinely independent."""
    if not points:
        return None
    d = len(points[0])
    matrix = [[Fraction(p[r]) for p in points] for r in range(d)]
    matrix.append([Fraction(1)] * len(points))
    return kernel_vector(matrix)
