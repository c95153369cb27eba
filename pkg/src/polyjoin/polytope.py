"""Natural stochastic polytopes ``P = {x >= 0 : C x = 1}`` with a positive matrix ``C``.

All arithmetic is exact (``fractions.Fraction``).  Coordinates are numbered
``1..m``; facet ``i`` is ``P`` intersected with ``{x_i = 0}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .complex_core import SimplicialComplex, members
from .errors import DomainError, MalformedInputError, ResourceLimitError
from .linalg import dense_rank, nullspace, rref
from .lp import OPTIMAL, feasible_point, maximize

DEFAULT_AMBIENT_LIMIT = 16


@dataclass(frozen=True)
class StochasticPolytope:
    relations: tuple[tuple[Fraction, ...], ...]
    claimed_dim: int | None = None

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.relations)
        if not rows:
            raise MalformedInputError("a stochastic polytope needs at least one relation")
        m = len(rows[0])
        if m == 0 or any(len(r) != m for r in rows):
            raise MalformedInputError("relation rows must be nonempty and of equal length")
        if any(v <= 0 for r in rows for v in r):
            raise MalformedInputError("relation coefficients must be strictly positive")
        object.__setattr__(self, "relations", rows)

    @property
    def m(self) -> int:
        return len(self.relations[0])

    def contains(self, x: Sequence) -> bool:
        x = [Fraction(v) for v in x]
        return len(x) == self.m and all(v >= 0 for v in x) and all(
            sum(c * v for c, v in zip(row, x)) == 1 for row in self.relations
        )

    def restricted(self, zero: int) -> tuple[list[int], list[list[Fraction]]]:
        """Columns surviving ``x_i = 0`` for ``i`` in the mask, and the restricted matrix."""
        cols = [j for j in range(self.m) if not zero >> j & 1]
        return cols, [[row[j] for j in cols] for row in self.relations]

    def point_with_zeros(self, zero: int) -> list[Fraction] | None:
        cols, A = self.restricted(zero)
        if not cols:
            return None
        x = feasible_point(A, [1] * len(A))
        if x is None:
            return None
        full = [Fraction(0)] * self.m
        for j, v in zip(cols, x):
            full[j] = v
        return full


def simplex_polytope(l: int) -> StochasticPolytope:
    """The standard simplex ``{x >= 0 : x_1 + ... + x_l = 1}``."""
    return StochasticPolytope(((Fraction(1),) * l,), l - 1)


def point() -> StochasticPolytope:
    return simplex_polytope(1)


def _zero_set(x: Sequence[Fraction]) -> int:
    return sum(1 << j for j, v in enumerate(x) if v == 0)


def nerve_complex(P: StochasticPolytope, limit: int | None = None) -> SimplicialComplex:
    """``I`` is a face iff some point of ``P`` vanishes on every coordinate of ``I``."""
    limit = DEFAULT_AMBIENT_LIMIT if limit is None else limit
    if P.m > limit:
        raise ResourceLimitError(P.m, limit, "ambient coordinates")
    zero_sets: list[int] = []
    nonfaces: list[int] = []
    for I in sorted(range(1 << P.m), key=lambda x: (x.bit_count(), x)):
        if any(I & ~Z == 0 for Z in zero_sets):
            continue
        if any(N & ~I == 0 for N in nonfaces):
            continue
        x = P.point_with_zeros(I)
        if x is None:
            nonfaces.append(I)
        else:
            zero_sets.append(_zero_set(x))
    return SimplicialComplex(P.m, zero_sets)


def support(P: StochasticPolytope, zero: int = 0) -> int | None:
    """Coordinates not identically zero on the face ``x_i = 0 (i in zero)``; None if empty."""
    cols, A = P.restricted(zero)
    if not cols or feasible_point(A, [1] * len(A)) is None:
        return None
    out = 0
    for k, j in enumerate(cols):
        c = [0] * len(cols)
        c[k] = 1
        res = maximize(c, A, [1] * len(A))
        if res.status == OPTIMAL and res.value > 0:
            out |= 1 << j
    return out


def affine_dim(P: StochasticPolytope, zero: int = 0) -> int:
    """Affine dimension of the face ``P`` meet ``{x_i = 0, i in zero}``; -1 when empty."""
    S = support(P, zero)
    if S is None:
        return -1
    cols = [j for j in range(P.m) if S >> j & 1]
    return len(cols) - dense_rank([[row[j] for j in cols] for row in P.relations])


def relative_interior_point(P: StochasticPolytope, zero: int = 0) -> list[Fraction] | None:
    """Barycenter of coordinate maximizers: positive exactly on the face's support."""
    cols, A = P.restricted(zero)
    if not cols:
        return None
    pts = []
    for k in range(len(cols)):
        c = [0] * len(cols)
        c[k] = 1
        res = maximize(c, A, [1] * len(A))
        if res.status != OPTIMAL:
            return None
        pts.append(res.x)
    full = [Fraction(0)] * P.m
    for k, j in enumerate(cols):
        full[j] = sum(p[k] for p in pts) / len(pts)
    return full


@dataclass(frozen=True)
class NaturalityCheck:
    natural: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.natural


def is_natural(P: StochasticPolytope) -> NaturalityCheck:
    """Every ``{x_i = 0}`` must cut a facet, and distinct coordinates distinct facets."""
    n = affine_dim(P)
    if n < 0:
        return NaturalityCheck(False, "polytope is empty")
    supports = {}
    for i in range(P.m):
        S = support(P, 1 << i)
        if S is None:
            return NaturalityCheck(False, f"x_{i + 1} = 0 does not meet the polytope")
        d = affine_dim(P, 1 << i)
        if d != n - 1:
            return NaturalityCheck(False, f"x_{i + 1} = 0 cuts a face of dimension {d}, not {n - 1}")
        if S in supports:
            return NaturalityCheck(False, f"x_{supports[S] + 1} = 0 and x_{i + 1} = 0 cut the same facet")
        supports[S] = i
    return NaturalityCheck(True)


def compose_polytopes(P: StochasticPolytope, parts: Sequence[StochasticPolytope]) -> StochasticPolytope:
    """One relation per row ``i`` of ``P`` and per choice of a row from every part:
    ``sum_s c_i^s <c_{s, j_s}, x_s> = 1``.  The full redundant system is kept."""
    if len(parts) != P.m:
        raise DomainError(f"polytope in R^{P.m} needs {P.m} parts, got {len(parts)}")
    rows = []
    for crow in P.relations:
        for pick in product(*(Q.relations for Q in parts)):
            rows.append(tuple(cs * v for cs, prow in zip(crow, pick) for v in prow))
    dim = None
    if P.claimed_dim is not None and all(Q.claimed_dim is not None for Q in parts):
        dim = P.claimed_dim + sum(Q.claimed_dim for Q in parts)
    return StochasticPolytope(tuple(rows), dim)


def reduced_relations(P: StochasticPolytope) -> StochasticPolytope:
    """An independent subsystem with the same solution set."""
    kept: list[tuple[Fraction, ...]] = []
    for row in P.relations:
        if dense_rank([list(r) + [1] for r in kept + [row]]) > len(kept):
            kept.append(row)
    return StochasticPolytope(tuple(kept), P.claimed_dim)


def from_h_representation(normals: Sequence[Sequence], offsets: Sequence) -> StochasticPolytope:
    """Natural stochastic form of ``{y : A y + b >= 0}`` via ``y -> A y + b``.

    The first relation of the result is ``x_1 + ... + x_m = 1``.
    """
    A = [[Fraction(v) for v in row] for row in normals]
    b = [Fraction(v) for v in offsets]
    m = len(A)
    if m == 0 or len(b) != m:
        raise MalformedInputError("need one offset per halfspace")
    n = len(A[0])
    if dense_rank(A) != n:
        raise DomainError("normals do not span R^n: the region is unbounded")

    # strictly positive relation: c >= 1 with A^T c = 0, written as c = 1 + z, z >= 0
    At = [[A[i][k] for i in range(m)] for k in range(n)]
    rhs = [-sum(row) for row in At]
    z = feasible_point(At, rhs)
    if z is None:
        raise DomainError("no positive linear relation among the normals: the region is unbounded")
    positive = [1 + v for v in z]

    basis = nullspace(At, m)
    # swap the positive relation into the basis
    pos_coords = _express(basis, positive)
    k = next(i for i, a in enumerate(pos_coords) if a != 0)
    relations = [positive] + [v for i, v in enumerate(basis) if i != k]
    shifted = [positive]
    for v in relations[1:]:
        lam = max([Fraction(0)] + [-vj / pj for vj, pj in zip(v, positive)]) + 1
        shifted.append([vj + lam * pj for vj, pj in zip(v, positive)])

    rows = []
    for v in shifted:
        d = sum(vj * bj for vj, bj in zip(v, b))
        if d <= 0:
            raise DomainError("halfspace system has empty interior")
        rows.append([vj / d for vj in v])
    scale = rows[0]
    C = tuple(tuple(r[j] / scale[j] for j in range(m)) for r in rows)
    P = StochasticPolytope(C, n)
    if affine_dim(P) != n:
        raise DomainError("halfspace system is empty or not full-dimensional")
    check = is_natural(P)
    if not check:
        raise DomainError(f"redundant halfspaces: {check.reason}")
    return P


def _express(basis: list[list[Fraction]], v: list[Fraction]) -> list[Fraction]:
    """Coordinates of ``v`` in ``basis`` (``v`` is known to lie in the span)."""
    m = len(v)
    k = len(basis)
    # solve sum_i a_i basis_i = v via the augmented system
    M = [[basis[i][j] for i in range(k)] + [v[j]] for j in range(m)]
    R, piv = rref(M)
    a = [Fraction(0)] * k
    for row, pc in zip(R, piv):
        if pc < k:
            a[pc] = row[-1]
    return a


def sample_points(P: StochasticPolytope, count: int = 4, seed: int = 0) -> list[list[Fraction]]:
    """Rational points of ``P``: optimal vertices for random positive objectives and their barycenter."""
    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        c = [rng.randint(1, 9) for _ in range(P.m)]
        res = maximize(c, P.relations, [1] * len(P.relations))
        if res.status == OPTIMAL:
            pts.append(res.x)
    if pts:
        pts.append([sum(p[j] for p in pts) / len(pts) for j in range(P.m)])
    rip = relative_interior_point(P)
    if rip is not None:
        pts.append(rip)
    return pts


def same_solution_set_on_samples(P: StochasticPolytope, Q: StochasticPolytope, count: int = 4, seed: int = 0) -> bool:
    """Mutual satisfaction: sampled points of each polytope satisfy the other's system."""
    if P.m != Q.m:
        return False
    return all(Q.contains(x) for x in sample_points(P, count, seed)) and all(
        P.contains(x) for x in sample_points(Q, count, seed + 1)
    )


def describe_zero_set(x: Sequence[Fraction]) -> list[int]:
    return list(members(_zero_set(x)))
