"""Exact matrix rank over the rationals and over prime fields.

Matrices are given as lists of sparse rows ``{column: int}``.  Elimination
uses the first nonzero pivot available; exact arithmetic needs no pivoting
strategy for stability.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def rank(rows: list[dict[int, int]], characteristic: int = 0) -> int:
    if characteristic == 0:
        return rank_rational(rows)
    if characteristic == 2:
        return rank_f2(rows)
    return rank_mod_p(rows, characteristic)


def rank_f2(rows: list[dict[int, int]]) -> int:
    pivots: dict[int, int] = {}  # leading bit -> row
    for row in rows:
        r = 0
        for col, val in row.items():
            if val & 1:
                r ^= 1 << col
        while r:
            lead = r.bit_length() - 1
            if lead in pivots:
                r ^= pivots[lead]
            else:
                pivots[lead] = r
                break
    return len(pivots)


def rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}  # pivot column -> row normalised to 1 there
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            col = min(r)
            if col not in pivots:
                inv = pow(r[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in r.items()}
                break
            factor = r[col]
            for c, v in pivots[col].items():
                nv = (r.get(c, 0) - factor * v) % p
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return len(pivots)


def rank_rational(rows: list[dict[int, int]]) -> int:
    """Rank over Q by fraction-free elimination with content reduction."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            col = min(r)
            if col not in pivots:
                pivots[col] = r
                break
            prow = pivots[col]
            a, b = prow[col], r[col]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {}
            for c in set(r) | set(prow):
                v = a * r.get(c, 0) - b * prow.get(c, 0)
                if v:
                    new[c] = v
            if new:
                content = 0
                for v in new.values():
                    content = gcd(content, v)
                    if content == 1:
                        break
                if content > 1:
                    new = {c: v // content for c, v in new.items()}
            r = new
    return len(pivots)


def rref(matrix: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a dense rational matrix and its pivot columns."""
    M = [list(map(Fraction, row)) for row in matrix]
    pivots = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def dense_rank(matrix: list[list[Fraction]]) -> int:
    if not matrix:
        return 0
    return len(rref(matrix)[1])


def nullspace(matrix: list[list[Fraction]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{x : M x = 0}`` over Q."""
    if ncols is None:
        ncols = len(matrix[0])
    if not matrix:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis
