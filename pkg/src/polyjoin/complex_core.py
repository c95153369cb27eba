"""Finite simplicial complexes with ghost vertices.

Vertices are the integers ``1..m``.  Internally a face is a bitmask in which
vertex ``v`` occupies bit ``v - 1``; a complex stores only the antichain of
its maximal faces and answers membership by a subset test against it.

A vertex that lies in no face is a *ghost* vertex.  Ghosts are part of the
combinatorial data (they change ``m``) and are never dropped silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import DomainError, MalformedInputError

MAX_VERTICES = 64


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def members(mask: int) -> tuple[int, ...]:
    """1-indexed vertices of a bitmask, increasing."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def submasks(mask: int):
    """Yield every submask of ``mask`` (including 0 and ``mask`` itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def remap(mask: int, positions: dict[int, int]) -> int:
    """Move bit ``i`` of ``mask`` to bit ``positions[i]`` (both 0-indexed)."""
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << positions[i]
        mask >>= 1
        i += 1
    return out


def antichain(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal elements of ``masks``; ``(0,)`` when nothing is left."""
    kept: list[int] = []
    for mk in sorted(set(masks), key=lambda x: (-x.bit_count(), x)):
        if not any(mk & ~other == 0 for other in kept):
            kept.append(mk)
    if not kept:
        return (0,)
    return tuple(sorted(kept))


class SimplicialComplex:
    """An immutable simplicial complex on the vertex set ``{1, ..., m}``.

    ``generators`` are bitmasks; the complex is their downward closure
    together with the empty face.
    """

    __slots__ = ("m", "maximal", "_faces")

    def __init__(self, m: int, generators: Iterable[int] = ()):
        if m < 0 or m > MAX_VERTICES:
            raise MalformedInputError(f"vertex count {m} outside 0..{MAX_VERTICES}")
        gens = list(generators)
        full = (1 << m) - 1
        for g in gens:
            if g < 0 or g & ~full:
                raise MalformedInputError(
                    f"face {list(members(g))} mentions a vertex outside 1..{m}"
                )
        self.m = m
        self.maximal = antichain(gens)
        self._faces = None

    @property
    def vertex_count(self) -> int:
        return self.m

    def __contains__(self, face) -> bool:
        if not isinstance(face, int):
            face = to_mask(face)
        return any(face & ~mx == 0 for mx in self.maximal)

    def faces(self) -> frozenset[int]:
        """All faces as bitmasks, the empty face (0) included."""
        if self._faces is None:
            out = set()
            for mx in self.maximal:
                out.update(submasks(mx))
            self._faces = frozenset(out)
        return self._faces

    @property
    def dim(self) -> int:
        return max(mx.bit_count() for mx in self.maximal) - 1

    @property
    def support(self) -> int:
        """Mask of the non-ghost vertices."""
        out = 0
        for mx in self.maximal:
            out |= mx
        return out

    @property
    def ghost_vertices(self) -> tuple[int, ...]:
        return members(((1 << self.m) - 1) & ~self.support)

    def is_void_of_faces(self) -> bool:
        """True when the only face is the empty one (the complex is ``o^m``)."""
        return self.maximal == (0,)

    def is_pure(self) -> bool:
        return len({mx.bit_count() for mx in self.maximal}) == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.m == other.m and self.maximal == other.maximal

    def __hash__(self) -> int:
        return hash((self.m, self.maximal))

    def __repr__(self) -> str:
        faces = "; ".join(" ".join(map(str, members(mx))) for mx in self.maximal)
        return f"SimplicialComplex(m={self.m}, maximal=[{faces}])"


class Relabeled(NamedTuple):
    """A complex on a re-indexed vertex set with its ``old -> new`` index table."""

    complex: SimplicialComplex
    index: dict[int, int]


def build(m: int, generators: Iterable[Iterable[int]]) -> SimplicialComplex:
    masks = []
    for g in generators:
        g = list(g)
        bad = [v for v in g if not 1 <= v <= m]
        if bad:
            raise MalformedInputError(f"generator {sorted(g)} mentions vertex {bad[0]} not in 1..{m}")
        masks.append(to_mask(g))
    return SimplicialComplex(m, masks)


def simplex(m: int) -> SimplicialComplex:
    return SimplicialComplex(m, [(1 << m) - 1])


def boundary(m: int) -> SimplicialComplex:
    """Boundary of the simplex on ``m`` vertices; for ``m == 1`` this is ``o^1``."""
    full = (1 << m) - 1
    return SimplicialComplex(m, [full & ~(1 << i) for i in range(m)])


def ghost(m: int) -> SimplicialComplex:
    return SimplicialComplex(m, [])


def standard(kind: str, m: int) -> SimplicialComplex:
    if m < 1:
        raise DomainError(f"standard complexes need m >= 1, got {m}")
    makers = {"simplex": simplex, "boundary": boundary, "ghost": ghost}
    if kind not in makers:
        raise DomainError(f"unknown standard complex kind {kind!r}")
    return makers[kind](m)


def _compress(keep: int, m: int) -> dict[int, int]:
    """0-indexed positions of the kept bits after deleting the others."""
    positions = {}
    j = 0
    for i in range(m):
        if keep >> i & 1:
            positions[i] = j
            j += 1
    return positions


def _relabeled(K: SimplicialComplex, keep: int, masks: Iterable[int]) -> Relabeled:
    positions = _compress(keep, K.m)
    new = SimplicialComplex(len(positions), [remap(mk, positions) for mk in masks])
    return Relabeled(new, {i + 1: j + 1 for i, j in positions.items()})


def link(K: SimplicialComplex, face) -> Relabeled:
    """Link of a face, on the vertex set ``[m] minus face`` re-indexed in order."""
    I = face if isinstance(face, int) else to_mask(face)
    if I not in K:
        raise DomainError(f"{list(members(I))} is not a face of the complex")
    keep = ((1 << K.m) - 1) & ~I
    return _relabeled(K, keep, [mx & ~I for mx in K.maximal if I & ~mx == 0])


def full_subcomplex(K: SimplicialComplex, A) -> Relabeled:
    A = A if isinstance(A, int) else to_mask(A)
    if A & ~((1 << K.m) - 1):
        raise MalformedInputError(f"{list(members(A))} is not a subset of 1..{K.m}")
    return _relabeled(K, A, [mx & A for mx in K.maximal])


def join(*complexes: SimplicialComplex) -> SimplicialComplex:
    """Join on the disjoint union of vertex sets, blocks in argument order."""
    if not complexes:
        return SimplicialComplex(0)
    maximal = [0]
    shift = 0
    for K in complexes:
        maximal = [a | (b << shift) for a in maximal for b in K.maximal]
        shift += K.m
    return SimplicialComplex(shift, maximal)


def union(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    if K.m != L.m:
        raise DomainError("union needs complexes on the same vertex set")
    return SimplicialComplex(K.m, K.maximal + L.maximal)


def embed(K: SimplicialComplex, m: int, positions: list[int]) -> SimplicialComplex:
    """Place vertex ``v`` of ``K`` at vertex ``positions[v - 1]`` of a complex on ``m`` vertices."""
    table = {i: p - 1 for i, p in enumerate(positions)}
    return SimplicialComplex(m, [remap(mx, table) for mx in K.maximal])


def maximal_faces(K: SimplicialComplex) -> list[frozenset[int]]:
    return [frozenset(members(mx)) for mx in K.maximal]


@dataclass
class GradedPoset:
    """Finite poset of vertex subsets under inclusion, with a rank if graded.

    ``rank`` maps each element (bitmask) to the length of every saturated
    chain from the bottom element; it is ``None`` when grading fails.
    """

    elements: tuple[int, ...]
    rank: dict[int, int] | None = None
    top_rank: int | None = None
    covers: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def graded(self) -> bool:
        return self.rank is not None

    @property
    def bottom(self) -> int:
        return self.elements[0]

    def subsets(self) -> list[frozenset[int]]:
        return [frozenset(members(e)) for e in self.elements]


def intersection_poset(K: SimplicialComplex) -> GradedPoset:
    """Intersections of nonempty families of maximal faces, graded when possible."""
    F = set(K.maximal)
    frontier = set(F)
    while frontier:
        new = {a & b for a in frontier for b in K.maximal} - F
        F |= new
        frontier = new
    elements = tuple(sorted(F, key=lambda x: (x.bit_count(), x)))

    # lower covers of each element
    covers: dict[int, tuple[int, ...]] = {}
    for y in elements:
        below = [x for x in elements if x != y and x & ~y == 0]
        covers[y] = tuple(
            x for x in below if not any(z != x and x & ~z == 0 for z in below)
        )

    lengths: dict[int, set[int]] = {}
    for y in elements:
        lower = covers[y]
        lengths[y] = {l + 1 for x in lower for l in lengths[x]} if lower else {0}
    poset = GradedPoset(elements, covers=covers)
    if any(len(v) != 1 for v in lengths.values()):
        return poset
    rank = {e: next(iter(v)) for e, v in lengths.items()}
    tops = {rank[mx] for mx in K.maximal}
    if len(tops) != 1:
        return poset
    poset.rank = rank
    poset.top_rank = tops.pop()
    return poset


def f_vector(K: SimplicialComplex) -> list[int]:
    """Face counts ``(f_0, f_1, ...)`` by cardinality; ``f_0 = 1`` counts the empty face."""
    counts = [0] * (K.dim + 2)
    for face in K.faces():
        counts[face.bit_count()] += 1
    return counts
