"""Multigraded Betti numbers of Stanley-Reisner rings and enumerative polynomials.

Two independent routes produce the same :class:`BettiTable`:

* :func:`hochster_betti` takes reduced cohomology of every full subcomplex;
* :func:`koszul_betti` computes Tor directly from the Koszul complex in each
  squarefree multidegree, never building a full subcomplex.

Enumeration over vertex subsets costs ``2^m`` rank computations, so both
refuse complexes above a vertex cap (16 unless overridden).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .complex_core import SimplicialComplex, f_vector, full_subcomplex, members, submasks, to_mask
from .errors import DomainError, ResourceLimitError
from .homology import QQ, FieldSpec, reduced_cohomology
from .linalg import rank
from .polyring import LAURENT, MultiPoly, specialize_b

DEFAULT_VERTEX_LIMIT = 16


@dataclass
class BettiTable:
    """Nonzero ``beta^{-i, 2A}``, keyed by ``(i, A)`` with ``A`` a vertex bitmask."""

    m: int
    entries: dict[tuple[int, int], int] = dc_field(default_factory=dict)
    field: FieldSpec = QQ

    def get(self, i: int, A) -> int:
        A = A if isinstance(A, int) else to_mask(A)
        return self.entries.get((i, A), 0)

    def bigraded(self) -> dict[tuple[int, int], int]:
        """``beta^{-i, 2j}`` as ``{(i, j): dim}``, summed over ``|A| = j``."""
        out: dict[tuple[int, int], int] = {}
        for (i, A), d in self.entries.items():
            key = (i, A.bit_count())
            out[key] = out.get(key, 0) + d
        return out

    def lines(self) -> list[str]:
        def key(item):
            (i, A), _ = item
            return (A.bit_count(), members(A), i)

        return [
            f"i={i} A=[{','.join(map(str, members(A)))}] dim={d}"
            for (i, A), d in sorted(self.entries.items(), key=key)
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.m == other.m and self.entries == other.entries


def _check_limit(K: SimplicialComplex, limit: int | None) -> None:
    limit = DEFAULT_VERTEX_LIMIT if limit is None else limit
    if K.m > limit:
        raise ResourceLimitError(K.m, limit)


def _hochster_chunk(args):
    m, maximal, char, lo, hi = args
    K = SimplicialComplex(m, maximal)
    fld = FieldSpec(char)
    out = []
    for A in range(lo, hi):
        if A and A in K:
            continue  # a simplex is acyclic
        sub = full_subcomplex(K, A).complex
        size = A.bit_count()
        for degree, r in reduced_cohomology(sub, fld).nonzero().items():
            out.append(((size - degree - 1, A), r))
    return out


def _koszul_chunk(args):
    m, maximal, char, lo, hi = args
    K = SimplicialComplex(m, maximal)
    out = []
    for A in range(lo, hi):
        # basis: J inside A with A \ J a face, graded by |J|
        layers: dict[int, list[int]] = {}
        for J in submasks(A):
            if (A & ~J) in K:
                layers.setdefault(J.bit_count(), []).append(J)
        index = {d: {J: k for k, J in enumerate(sorted(Js))} for d, Js in layers.items()}
        ranks = {}
        for d, Js in layers.items():
            if d == 0 or d - 1 not in index:
                ranks[d] = 0
                continue
            rows = []
            for J in Js:
                row = {}
                below = 0  # number of elements of J smaller than the current j
                rest = J
                while rest:
                    j = rest & -rest
                    if ((A & ~J) | j) in K:
                        row[index[d - 1][J & ~j]] = -1 if below & 1 else 1
                    below += 1
                    rest &= rest - 1
                rows.append(row)
            ranks[d] = rank(rows, char)
        for d, Js in layers.items():
            h = len(Js) - ranks[d] - ranks.get(d + 1, 0)
            if h:
                out.append(((d, A), h))
    return out


def _run(worker, K: SimplicialComplex, field: FieldSpec, jobs: int | None) -> dict:
    total = 1 << K.m
    jobs = jobs or 1
    if jobs < 0:
        jobs = os.cpu_count() or 1
    chunks = max(1, min(jobs * 4, total))
    bounds = [total * k // chunks for k in range(chunks + 1)]
    tasks = [(K.m, K.maximal, field.characteristic, bounds[k], bounds[k + 1]) for k in range(chunks)]
    if jobs == 1 or total < 64:
        results = map(worker, tasks)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, tasks))
    entries = {}
    for chunk in results:
        for key, d in chunk:
            entries[key] = d
    return entries


def hochster_betti(K: SimplicialComplex, field: FieldSpec = QQ, *,
                   jobs: int | None = 1, limit: int | None = None) -> BettiTable:
    _check_limit(K, limit)
    return BettiTable(K.m, _run(_hochster_chunk, K, field, jobs), field)


def koszul_betti(K: SimplicialComplex, field: FieldSpec = QQ, *,
                 jobs: int | None = 1, limit: int | None = None) -> BettiTable:
    _check_limit(K, limit)
    return BettiTable(K.m, _run(_koszul_chunk, K, field, jobs), field)


# generating functions ------------------------------------------------------


def default_names(m: int, prefix: str = "t", start: int = 1) -> tuple[str, ...]:
    return tuple(f"{prefix}{k}" for k in range(start, start + m))


def beta_poly(T: BettiTable, names: tuple[str, ...] | None = None) -> MultiPoly:
    """``sum beta^{-i,2A} s^i t^A`` over the variables ``s`` and ``names``."""
    names = default_names(T.m) if names is None else tuple(names)
    if len(names) != T.m:
        raise DomainError(f"need {T.m} variable names, got {len(names)}")
    variables = ("s",) + names
    terms = {}
    for (i, A), d in T.entries.items():
        exps = [i] + [0] * T.m
        for v in members(A):
            exps[v] = 1
        terms[tuple(exps)] = d
    return MultiPoly(variables, terms)


def reduced_beta_poly(T: BettiTable, names: tuple[str, ...] | None = None) -> MultiPoly:
    return beta_poly(T, names) - 1


def compose_beta(beta_K: MultiPoly, reduced_parts: list[MultiPoly]) -> MultiPoly:
    """Substitute ``s^-1 * reduced_part_i`` for the i-th vertex variable of ``beta_K``."""
    slots = [v for v in beta_K.vars if v not in LAURENT]
    if len(slots) != len(reduced_parts):
        raise DomainError(f"beta polynomial has {len(slots)} vertex variables, got {len(reduced_parts)} parts")
    seen: dict[str, int] = {}
    for k, part in enumerate(reduced_parts):
        for v in part.vars:
            if v in LAURENT:
                continue
            if v in seen:
                raise DomainError(f"variable {v} appears in parts {seen[v] + 1} and {k + 1}")
            seen[v] = k
    s_inv = MultiPoly.monomial({"s": -1})
    bindings = {v: s_inv * part for v, part in zip(slots, reduced_parts)}
    out = beta_K.substitute(bindings)
    order = ("s",) + tuple(v for part in reduced_parts for v in part.vars if v not in LAURENT)
    return out.aligned(order)


def b_poly(T: BettiTable) -> MultiPoly:
    return specialize_b(beta_poly(T))


def _t(k: int = 1) -> MultiPoly:
    return MultiPoly.monomial({"t": k})


def f_poly(K: SimplicialComplex) -> MultiPoly:
    return MultiPoly.univariate(f_vector(K))


def h_poly(K: SimplicialComplex) -> MultiPoly:
    """``sum f_i t^i (1-t)^(n-i)`` with ``n = dim K + 1``."""
    f = f_vector(K)
    n = K.dim + 1
    one_minus_t = 1 - _t()
    out = MultiPoly.const(0, ("t",))
    for i, fi in enumerate(f):
        out = out + fi * _t(i) * one_minus_t ** (n - i)
    return out.aligned(("t",))


def q_poly(K: SimplicialComplex) -> MultiPoly:
    """``1 - (1-t)^(m-n) h_K(t)``; ``m`` counts ghost vertices."""
    n = K.dim + 1
    return (1 - (1 - _t()) ** (K.m - n) * h_poly(K)).aligned(("t",))


def chi_poly(K: SimplicialComplex, field: FieldSpec = QQ, table: BettiTable | None = None,
             *, jobs: int | None = 1, limit: int | None = None) -> MultiPoly:
    """``sum_j chi_j t^(2j)`` with ``chi_j = sum_i (-1)^i beta^{-i,2j}``."""
    T = table if table is not None else hochster_betti(K, field, jobs=jobs, limit=limit)
    terms: dict[tuple[int], int] = {}
    for (i, j), d in T.bigraded().items():
        terms[(2 * j,)] = terms.get((2 * j,), 0) + (-1) ** i * d
    return MultiPoly(("t",), terms)


def hilbert_series(K: SimplicialComplex) -> tuple[MultiPoly, int]:
    """Numerator ``h_K(t^2)`` and the exponent ``n`` of the denominator ``(1-t^2)^n``."""
    num = h_poly(K).substitute({"t": _t(2)}).aligned(("t",))
    return num, K.dim + 1
