"""Reduced simplicial (co)homology ranks over Q and F_p, and sphere predicates.

Over a field the ranks of reduced homology and reduced cohomology agree, so
everything here is computed from the augmented boundary matrices.  The
complex whose only face is the empty one has the homology of ``S^-1``:
rank 1 in degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex_core import SimplicialComplex, intersection_poset, link, members
from .errors import DomainError
from .linalg import rank


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise DomainError(f"field characteristic must be 0 or prime, got {self.characteristic}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "qq", "0", "rational", "rationals"):
            return cls(0)
        if t.startswith("f") and t[1:].isdigit():
            return cls(int(t[1:]))
        if t.isdigit():
            return cls(int(t))
        raise DomainError(f"cannot parse field {text!r}; use q, f2 or f<p>")

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"


QQ = FieldSpec(0)
F2 = FieldSpec(2)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced cohomology dimensions; ``ranks[k]`` is the dimension in degree ``k - 1``."""

    ranks: tuple[int, ...]
    field: FieldSpec = QQ

    def __getitem__(self, degree: int) -> int:
        k = degree + 1
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    def nonzero(self) -> dict[int, int]:
        return {k - 1: r for k, r in enumerate(self.ranks) if r}

    @property
    def total(self) -> int:
        return sum(self.ranks)

    def euler(self) -> int:
        return sum((-1) ** (k - 1) * r for k, r in enumerate(self.ranks))


def _faces_by_size(K: SimplicialComplex) -> list[list[int]]:
    by_size: list[list[int]] = [[] for _ in range(K.dim + 2)]
    for f in K.faces():
        by_size[f.bit_count()].append(f)
    for layer in by_size:
        layer.sort()
    return by_size


def boundary_rows(faces: list[int], lower_index: dict[int, int]) -> list[dict[int, int]]:
    """Rows of the boundary map, one per face, with the standard alternating signs."""
    rows = []
    for f in faces:
        row = {}
        sign = 1
        rest = f
        while rest:
            low = rest & -rest
            row[lower_index[f & ~low]] = sign
            sign = -sign
            rest &= rest - 1
        rows.append(row)
    return rows


def _has_cone_vertex(K: SimplicialComplex) -> bool:
    common = K.maximal[0]
    for mx in K.maximal[1:]:
        common &= mx
    return common != 0


def reduced_cohomology(K: SimplicialComplex, field: FieldSpec = QQ) -> HomologyProfile:
    top = K.dim
    if top >= 0 and _has_cone_vertex(K):
        return HomologyProfile((0,) * (top + 2), field)
    layers = _faces_by_size(K)
    index = [{f: i for i, f in enumerate(layer)} for layer in layers]
    # ranks[d] = rank of the boundary map from faces of size d to size d - 1
    ranks = [0] * (len(layers) + 1)
    for d in range(1, len(layers)):
        ranks[d] = rank(boundary_rows(layers[d], index[d - 1]), field.characteristic)
    out = tuple(len(layers[d]) - ranks[d] - ranks[d + 1] for d in range(len(layers)))
    return HomologyProfile(out, field)


def is_homology_sphere(K: SimplicialComplex, field: FieldSpec = QQ, n: int = 0) -> bool:
    """True iff ``K`` has the reduced homology of ``S^(n-1)`` (``S^-1`` is the empty complex)."""
    if K.dim < n - 1:
        return False
    return reduced_cohomology(K, field).nonzero() == {n - 1: 1}


def is_generalized_homology_sphere(K: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Gorenstein* test: ``K`` and the link of every face have the homology of spheres
    of the matching dimensions (ghost vertices ignored)."""
    d = K.dim
    if not K.is_pure():
        return False
    if not is_homology_sphere(K, field, d + 1):
        return False
    for face in sorted(K.faces(), key=int.bit_count):
        if face == 0:
            continue
        lk = link(K, face).complex
        if not is_homology_sphere(lk, field, d + 1 - face.bit_count()):
            return False
    return True


@dataclass(frozen=True)
class NerveCheck:
    """Outcome of the spherical nerve-complex test.

    ``rank`` is set on success; otherwise ``condition`` names the first
    failing condition (``"a"``, ``"b"`` or ``"c"``) and ``reason`` explains it.
    """

    rank: int | None
    condition: str | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.rank is not None


def is_spherical_nerve_complex(K: SimplicialComplex, field: FieldSpec = QQ) -> NerveCheck:
    """Check the three spherical nerve-complex conditions.

    Condition (c) asks for links homotopy equivalent to spheres; this test
    only compares reduced homology over ``field``.
    """
    poset = intersection_poset(K)
    if poset.bottom != 0:
        return NerveCheck(None, "a", f"maximal faces share {list(members(poset.bottom))}")
    if not poset.graded:
        return NerveCheck(None, "b", "intersection poset of maximal faces is not graded")
    n = poset.top_rank
    for face in poset.elements:
        lk = link(K, face).complex
        want = n - poset.rank[face]
        if not is_homology_sphere(lk, field, want):
            return NerveCheck(
                None, "c",
                f"link of {list(members(face))} lacks the homology of S^{want - 1}",
            )
    return NerveCheck(n)
