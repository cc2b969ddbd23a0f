"""Phase-1 simplex over exact rationals with Bland's anti-cycling rule.

This is a pure feasibility engine: find z >= 0 with A z = b, or prove
there is none.  Entries may be ints or Fractions; no floating point is
ever introduced, so there are no tolerances anywhere in the package.

The pivot rule is Bland's: the entering column is the smallest improving
index, and ratio-test ties are broken on the smallest basic variable.
That choice guarantees finite termination and makes the returned basic
solution a deterministic function of the input.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import Defect

_ONE = Fraction(1)


def feasible_point(
    matrix: Sequence[Sequence], rhs: Sequence, *, max_pivots: int = 5_000_000
) -> list[Fraction] | None:
    """Solve the feasibility problem {z >= 0 : matrix . z = rhs} exactly.

    Returns a basic feasible solution (so at most len(matrix) entries are
    nonzero), or None when the system is infeasible.
    """
    m = len(matrix)
    if m == 0:
        raise Defect("feasibility system with no rows")
    n = len(matrix[0])

    # Copy, then flip row signs until the right-hand side is nonnegative;
    # one artificial column per row then forms a feasible starting basis.
    rows: list[list] = []
    b: list = []
    for i in range(m):
        r = list(matrix[i])
        v = rhs[i]
        if v < 0:
            r = [-x for x in r]
            v = -v
        rows.append(r)
        b.append(v)

    basis = [n + i for i in range(m)]
    art_in_basis = m

    # Reduced-cost row for "minimize the sum of artificials", kept over
    # the structural columns only: once an artificial leaves the basis it
    # never re-enters, which preserves both correctness and termination.
    obj = [sum(rows[i][j] for i in range(m)) for j in range(n)]

    pivots = 0
    while art_in_basis:
        enter = -1
        for j in range(n):
            if obj[j] > 0:
                enter = j
                break
        if enter < 0:
            break

        leave = -1
        best = None
        for i in range(m):
            coeff = rows[i][enter]
            if coeff > 0:
                ratio = Fraction(b[i]) / coeff
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise Defect("phase-1 objective unbounded")

        pivots += 1
        if pivots > max_pivots:
            raise Defect("pivot budget exhausted")

        piv = rows[leave][enter]
        inv = _ONE / piv
        prow = [v * inv if v else 0 for v in rows[leave]]
        rows[leave] = prow
        b[leave] = b[leave] * inv
        nz = [(k, v) for k, v in enumerate(prow) if v]
        for i in range(m):
            if i == leave:
                continue
            f = rows[i][enter]
            if f:
                ri = rows[i]
                for k, v in nz:
                    ri[k] = ri[k] - f * v
                b[i] = b[i] - f * b[leave]
        f = obj[enter]
        if f:
            for k, v in nz:
                obj[k] = obj[k] - f * v
        if basis[leave] >= n:
            art_in_basis -= 1
        basis[leave] = enter

    residual = sum(b[i] for i in range(m) if basis[i] >= n)
    if residual != 0:
        return None
    z = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            z[var] = Fraction(b[i])
    return z
