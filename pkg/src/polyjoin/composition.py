"""Composition of simplicial complexes and its structural consequences.

For ``K`` on ``m`` vertices and parts ``K_1, ..., K_m`` on ``l_1, ..., l_m``
vertices, ``K(K_1, ..., K_m)`` lives on the concatenated blocks
``[l_1] + ... + [l_m]``.  A set ``I_1 + ... + I_m`` is a face exactly when
``{i : I_i not a face of K_i}`` is a face of ``K``.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .complex_core import (
    SimplicialComplex,
    boundary,
    embed,
    full_subcomplex,
    ghost,
    join,
    link,
    members,
    union,
)
from .errors import DomainError


def _offsets(parts: Sequence[SimplicialComplex]) -> list[int]:
    out = [0]
    for P in parts:
        out.append(out[-1] + P.m)
    return out


def split(mask: int, parts: Sequence[SimplicialComplex]) -> list[int]:
    """Cut a mask on the composed vertex set into one mask per block."""
    offs = _offsets(parts)
    return [(mask >> offs[i]) & ((1 << P.m) - 1) for i, P in enumerate(parts)]


def _check_arity(K: SimplicialComplex, parts: Sequence[SimplicialComplex]) -> None:
    if len(parts) != K.m:
        raise DomainError(f"complex on {K.m} vertices needs {K.m} parts, got {len(parts)}")


def compose(K: SimplicialComplex, parts: Sequence[SimplicialComplex]) -> SimplicialComplex:
    """``K(K_1, ..., K_m)``, generated from maximal data.

    Each maximal face ``I`` of ``K`` contributes the full blocks for ``i`` in
    ``I`` together with a choice of maximal face of ``K_j`` for ``j`` outside ``I``.
    """
    _check_arity(K, parts)
    offs = _offsets(parts)
    maximal = []
    for I in K.maximal:
        choices = []
        for j, P in enumerate(parts):
            if I >> j & 1:
                choices.append([((1 << P.m) - 1) << offs[j]])
            else:
                choices.append([mx << offs[j] for mx in P.maximal])
        for pick in product(*choices):
            face = 0
            for piece in pick:
                face |= piece
            maximal.append(face)
    return SimplicialComplex(offs[-1], maximal)


def is_composed_face(K: SimplicialComplex, parts: Sequence[SimplicialComplex], mask: int) -> bool:
    """Membership straight from the definition."""
    bad = 0
    for i, (piece, P) in enumerate(zip(split(mask, parts), parts)):
        if piece not in P:
            bad |= 1 << i
    return bad in K


def compose_by_definition(K: SimplicialComplex, parts: Sequence[SimplicialComplex]) -> SimplicialComplex:
    """Slow reference: test all ``2^(sum l_i)`` subsets against the definition."""
    _check_arity(K, parts)
    total = sum(P.m for P in parts)
    return SimplicialComplex(
        total, [A for A in range(1 << total) if is_composed_face(K, parts, A)]
    )


def iterated_wedge(K: SimplicialComplex, lengths: Sequence[int]) -> SimplicialComplex:
    """``K(l_1, ..., l_m)``: composition with boundaries of simplices."""
    if any(l < 1 for l in lengths):
        raise DomainError(f"wedge lengths must be positive, got {list(lengths)}")
    return compose(K, [boundary(l) for l in lengths])


def vertex_blowup(K: SimplicialComplex, v: int, l: int) -> SimplicialComplex:
    """Replace vertex ``v`` by a block of ``l`` vertices:
    ``K_{[m]-v} * bd(simplex_l)  union  link(v) * simplex_l``, block at ``v``'s position.
    """
    if l < 1:
        raise DomainError(f"blow-up length must be positive, got {l}")
    if not 1 <= v <= K.m or (1 << (v - 1)) not in K:
        raise DomainError(f"vertex {v} is a ghost vertex or out of range")
    m_new = K.m + l - 1
    block = [v + k for k in range(l)]
    others = [u if u < v else u + l - 1 for u in range(1, K.m + 1) if u != v]
    rest = full_subcomplex(K, ((1 << K.m) - 1) & ~(1 << (v - 1))).complex
    lk = link(K, [v]).complex
    left = embed(join(rest, boundary(l)), m_new, others + block)
    right = embed(join(lk, SimplicialComplex(l, [(1 << l) - 1])), m_new, others + block)
    return union(left, right)


def composed_link(K: SimplicialComplex, parts: Sequence[SimplicialComplex], face) -> SimplicialComplex:
    """Link of a face of ``K(K_1..K_m)`` assembled from links in ``K`` and the parts.

    With ``J = {i : A_i not a face of K_i}`` the link is
    ``link_K(J)(link_{K_i} A_i for i not in J)`` joined with the simplices on
    ``[l_i] - A_i`` for ``i`` in ``J``.  Vertices come out in the same order
    as in ``link(compose(K, parts), face)``.
    """
    _check_arity(K, parts)
    A = face if isinstance(face, int) else sum(1 << (v - 1) for v in face)
    pieces = split(A, parts)
    J = 0
    for i, (piece, P) in enumerate(zip(pieces, parts)):
        if piece not in P:
            J |= 1 << i
    if J not in K:
        raise DomainError(f"{list(members(A))} is not a face of the composition")

    outside = [i for i in range(K.m) if not J >> i & 1]
    inside = [i for i in range(K.m) if J >> i & 1]
    base = link(K, J).complex
    sub_parts = [link(parts[i], pieces[i]).complex for i in outside]
    simplices = [SimplicialComplex(parts[i].m - pieces[i].bit_count(),
                                   [(1 << (parts[i].m - pieces[i].bit_count())) - 1])
                 for i in inside]
    assembled = join(compose(base, sub_parts), *simplices)

    # new index of every surviving vertex, in block order as the direct link numbers them
    offs = _offsets(parts)
    new_pos = {}
    k = 1
    for i, P in enumerate(parts):
        for b in range(P.m):
            if not pieces[i] >> b & 1:
                new_pos[offs[i] + b] = k
                k += 1
    order = []
    for i in outside + inside:
        for b in range(parts[i].m):
            if not pieces[i] >> b & 1:
                order.append(new_pos[offs[i] + b])
    return embed(assembled, len(order), order)


def substitute_stepwise(K: SimplicialComplex, parts: Sequence[SimplicialComplex], i: int) -> SimplicialComplex:
    """``K(o, .., K_i, .., o)`` composed with the remaining parts (``i`` is 1-indexed)."""
    _check_arity(K, parts)
    if not 1 <= i <= K.m:
        raise DomainError(f"position {i} outside 1..{K.m}")
    o1 = ghost(1)
    first = compose(K, [parts[j] if j == i - 1 else o1 for j in range(K.m)])
    rest = list(parts[: i - 1]) + [o1] * parts[i - 1].m + list(parts[i:])
    return compose(first, rest)


operad_substitute_stepwise = substitute_stepwise
