"""Exact two-phase simplex over the rationals for ``A x = b, x >= 0``.

Dense tableau, Bland's rule (no cycling).  Intended for the small systems
that arise from nerve computations, not for large-scale LPs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


@dataclass
class LPResult:
    status: str
    value: Fraction | None = None
    x: list[Fraction] | None = None


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    inv = 1 / T[r][c]
    T[r] = [v * inv for v in T[r]]
    row = T[r]
    for i in range(len(T)):
        if i != r and T[i][c] != 0:
            f = T[i][c]
            T[i] = [a - f * b for a, b in zip(T[i], row)]
    basis[r] = c


def _optimize(T, basis, obj, allowed) -> str:
    """Maximize ``obj . x`` over the tableau in place; ``allowed`` limits entering columns."""
    rhs = len(T[0]) - 1
    while True:
        entering = None
        for j in allowed:
            if j in basis:
                continue
            reduced = obj[j] - sum(obj[basis[i]] * T[i][j] for i in range(len(T)))
            if reduced > 0:
                entering = j
                break
        if entering is None:
            return OPTIMAL
        best = None
        for i in range(len(T)):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][rhs] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(T, basis, best[1], entering)


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Maximize ``c . x`` subject to ``A x = b`` and ``x >= 0``, exactly."""
    n = len(c)
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    for i in range(len(A)):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
    r = len(A)
    if r == 0:
        if any(Fraction(v) > 0 for v in c):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, Fraction(0), [Fraction(0)] * n)

    # phase one: artificial column n + i for row i
    T = [A[i] + [Fraction(int(k == i)) for k in range(r)] + [b[i]] for i in range(r)]
    basis = [n + i for i in range(r)]
    obj1 = [Fraction(0)] * n + [Fraction(-1)] * r
    _optimize(T, basis, obj1, range(n + r))
    infeas = sum(T[i][-1] for i in range(r) if basis[i] >= n)
    if infeas > 0:
        return LPResult(INFEASIBLE)

    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, col)
        i += 1
    T = [row[:n] + [row[-1]] for row in T]

    obj = [Fraction(v) for v in c]
    if not T:
        if any(v > 0 for v in obj):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, Fraction(0), [Fraction(0)] * n)
    status = _optimize(T, basis, obj, range(n))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    return LPResult(OPTIMAL, sum(ci * xi for ci, xi in zip(obj, x)), x)


def feasible_point(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """A basic feasible solution of ``A x = b, x >= 0`` or ``None``."""
    n = len(A[0]) if A else 0
    res = maximize([0] * n, A, b)
    return res.x if res.status == OPTIMAL else None
