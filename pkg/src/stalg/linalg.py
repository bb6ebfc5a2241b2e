"""Gaussian elimination over dual-mode complex scalars.

Small dense solvers used for rank counts and kernel computations on
coefficient vectors.  Exact mode pivots on any nonzero entry and produces
exact answers; float mode uses partial pivoting with a fixed threshold.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .multivector import Multivector
from .scalars import EXACT, ComplexScalar, check_mode, same_mode

#: Pivot threshold for float-mode rank and kernel decisions.
FLOAT_PIVOT_TOL = 1e-9

Row = list


def _rows_mode(rows: Sequence[Sequence[ComplexScalar]]) -> str:
    mode = None
    for row in rows:
        for c in row:
            mode = c.mode if mode is None else same_mode(mode, c.mode)
    if mode is None:
        raise ValueError("cannot infer mode from an empty matrix")
    return mode


def _is_pivot(c: ComplexScalar, mode: str) -> bool:
    if mode == EXACT:
        return not c.is_zero()
    return c.magnitude() > FLOAT_PIVOT_TOL


def row_reduce(rows: Sequence[Sequence[ComplexScalar]], mode: str | None = None):
    """Reduced row-echelon form. Returns (rref_rows, pivot_column_indices)."""
    work = [list(row) for row in rows]
    if not work:
        return [], []
    mode = check_mode(mode) if mode is not None else _rows_mode(work)
    ncols = len(work[0])
    if any(len(row) != ncols for row in work):
        raise ValueError("ragged matrix")
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r >= len(work):
            break
        best = None
        if mode == EXACT:
            for i in range(r, len(work)):
                if _is_pivot(work[i][col], mode):
                    best = i
                    break
        else:
            mag = FLOAT_PIVOT_TOL
            for i in range(r, len(work)):
                m = work[i][col].magnitude()
                if m > mag:
                    mag = m
                    best = i
        if best is None:
            continue
        work[r], work[best] = work[best], work[r]
        inv = work[r][col].inverse()
        work[r] = [c * inv for c in work[r]]
        for i in range(len(work)):
            if i != r and not work[i][col].is_zero():
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
    return work, pivots


def rank(rows: Sequence[Sequence[ComplexScalar]], mode: str | None = None) -> int:
    if not rows:
        return 0
    _, pivots = row_reduce(rows, mode)
    return len(pivots)


def nullspace(
    rows: Sequence[Sequence[ComplexScalar]], mode: str
) -> list[list[ComplexScalar]]:
    """Basis of solutions of rows * x = 0, one vector per free column."""
    check_mode(mode)
    if not rows:
        raise ValueError("nullspace needs at least the column count; got no rows")
    ncols = len(rows[0])
    reduced, pivots = row_reduce(rows, mode)
    free = [c for c in range(ncols) if c not in pivots]
    one = ComplexScalar.one(mode)
    zero = ComplexScalar.zero(mode)
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][fc]
        basis.append(vec)
    return basis


def operator_kernel(
    op: Callable[[Multivector], Multivector], basis: Sequence[Multivector]
) -> list[Multivector]:
    """Kernel of a linear map given its values on a multivector basis.

    Stacks the coefficient vectors of op(b_i) as columns, solves for the
    combinations that vanish, and returns them as multivectors over ``basis``.
    """
    if not basis:
        return []
    mode = basis[0].mode
    images = [op(b).coefficient_vector() for b in basis]
    rows = [[images[j][i] for j in range(len(basis))] for i in range(16)]
    combos = nullspace(rows, mode)
    out = []
    for combo in combos:
        total = Multivector.zero(mode)
        for x, b in zip(combo, basis):
            total = total + b.scale(x)
        out.append(total)
    return out


def real_expanded(vector: Sequence[ComplexScalar]) -> list[ComplexScalar]:
    """Realify a complex vector: each entry becomes its (re, im) pair.

    The expanded entries are real-valued scalars, so rank over the complex
    field of the expanded vectors equals rank over the reals of the originals.
    """
    out = []
    for c in vector:
        zero = ComplexScalar.zero(c.mode).re
        out.append(ComplexScalar(c.mode, c.re, zero))
        out.append(ComplexScalar(c.mode, c.im, zero))
    return out
