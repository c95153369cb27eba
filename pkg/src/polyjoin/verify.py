"""Both-sides checks of the composition identities, and a seeded driver.

Every ``check_*`` function returns ``None`` when the identity holds and a
dict describing the mismatch otherwise.
"""

from __future__ import annotations

import random
from typing import Sequence

from .betti import (
    b_poly,
    beta_poly,
    compose_beta,
    default_names,
    h_poly,
    hochster_betti,
    q_poly,
    reduced_beta_poly,
)
from .complex_core import SimplicialComplex, boundary, ghost, join
from .composition import compose, iterated_wedge
from .corpus import random_complex, random_composition, random_grand_composition
from .homology import QQ, FieldSpec, reduced_cohomology
from .polyring import MultiPoly


def _t(k: int = 1) -> MultiPoly:
    return MultiPoly.monomial({"t": k})


def composition_sides(K: SimplicialComplex, parts: Sequence[SimplicialComplex],
                      field: FieldSpec = QQ) -> tuple[MultiPoly, MultiPoly]:
    """Beta polynomial of the composed complex, and the substituted beta polynomial of ``K``."""
    direct = beta_poly(hochster_betti(compose(K, parts), field))
    reduced = []
    start = 1
    for P in parts:
        reduced.append(reduced_beta_poly(hochster_betti(P, field), default_names(P.m, start=start)))
        start += P.m
    return direct, compose_beta(beta_poly(hochster_betti(K, field)), reduced)


def check_composition_theorem(K, parts, field: FieldSpec = QQ):
    direct, substituted = composition_sides(K, parts, field)
    if direct != substituted:
        return {"identity": "composition-theorem", "direct": direct.render(),
                "substituted": substituted.render()}
    return None


def check_join_homology(K, parts, field: FieldSpec = QQ):
    a = reduced_cohomology(compose(K, parts), field).nonzero()
    b = reduced_cohomology(join(K, *parts), field).nonzero()
    if a != b:
        return {"identity": "join-homology", "composed": a, "join": b}
    return None


def check_identity_laws(K: SimplicialComplex):
    if compose(K, [ghost(1)] * K.m) != K:
        return {"identity": "right-unit"}
    if compose(ghost(1), [K]) != K:
        return {"identity": "left-unit"}
    return None


def check_associativity(K, parts, grand):
    inner = compose(K, [compose(P, g) for P, g in zip(parts, grand)])
    outer = compose(compose(K, parts), [G for g in grand for G in g])
    if inner != outer:
        return {"identity": "associativity", "inner": repr(inner), "outer": repr(outer)}
    return None


def check_q_boundary(parts: Sequence[SimplicialComplex]):
    lhs = q_poly(compose(boundary(len(parts)), parts))
    rhs = MultiPoly.const(1, ("t",))
    for P in parts:
        rhs = rhs * q_poly(P)
    if lhs != rhs:
        return {"identity": "q-boundary", "lhs": lhs.render(), "rhs": rhs.render()}
    return None


def check_q_composite(K: SimplicialComplex, L: SimplicialComplex):
    lhs = q_poly(compose(K, [L] * K.m))
    rhs = q_poly(K).substitute({"t": q_poly(L)}).aligned(("t",))
    if lhs != rhs:
        return {"identity": "q-composite", "lhs": lhs.render(), "rhs": rhs.render()}
    return None


def h_of_lK_sides(K: SimplicialComplex, l: int) -> tuple[MultiPoly, MultiPoly]:
    direct = h_poly(iterated_wedge(K, [l] * K.m))
    n = K.dim + 1
    geometric = MultiPoly.univariate([1] * l)
    rhs = geometric ** (K.m - n) * h_poly(K).substitute({"t": _t(l)})
    return direct, rhs.aligned(("t",))


def check_h_of_lK(K: SimplicialComplex, l: int):
    direct, rhs = h_of_lK_sides(K, l)
    if direct != rhs:
        return {"identity": "h-of-lK", "l": l, "direct": direct.render(), "formula": rhs.render()}
    return None


def b_at_minus_one_sides(K: SimplicialComplex, field: FieldSpec = QQ) -> tuple[MultiPoly, MultiPoly]:
    b = b_poly(hochster_betti(K, field))
    left = b.substitute({"s": MultiPoly.const(-1)}).aligned(("t",))
    n = K.dim + 1
    right = (1 - _t(2)) ** (K.m - n) * h_poly(K).substitute({"t": _t(2)})
    return left, right.aligned(("t",))


def check_b_at_minus_one(K: SimplicialComplex, field: FieldSpec = QQ):
    left, right = b_at_minus_one_sides(K, field)
    if left != right:
        return {"identity": "b(-1,t)", "b": left.render(), "h": right.render()}
    return None


def check_wedge_b(K: SimplicialComplex, l: int, field: FieldSpec = QQ):
    lhs = b_poly(hochster_betti(iterated_wedge(K, [l] * K.m), field))
    rhs = b_poly(hochster_betti(K, field)).substitute({"t": _t(l)}).aligned(("s", "t"))
    if lhs != rhs:
        return {"identity": "wedge-b", "l": l, "lhs": lhs.render(), "rhs": rhs.render()}
    return None


def _dump(*complexes) -> list[str]:
    return [repr(c) for c in complexes]


def _instances(name: str, rng: random.Random, max_vertices: int):
    if name == "composition-theorem":
        K, parts = random_composition(rng, max_vertices)
        return check_composition_theorem(K, parts) or check_join_homology(K, parts), _dump(K, *parts)
    if name == "associativity":
        K, parts, grand = random_grand_composition(rng, max_vertices)
        bad = check_identity_laws(K) or check_associativity(K, parts, grand)
        return bad, _dump(K, *parts, *[G for g in grand for G in g])
    if name == "q-identities":
        m = rng.randint(1, 3)
        parts = [random_complex(rng, rng.randint(1, 3)) for _ in range(m)]
        K = random_complex(rng, rng.randint(1, 3))
        L = random_complex(rng, rng.randint(1, 3))
        bad = check_q_boundary(parts) or check_q_composite(K, L)
        return bad, _dump(*parts, K, L)
    if name == "h-of-lK":
        m = rng.randint(1, min(5, max_vertices))
        K = random_complex(rng, m)
        l = rng.randint(2, 3)
        return check_h_of_lK(K, l), _dump(K)
    raise ValueError(f"unknown identity {name!r}")


IDENTITIES = ("composition-theorem", "associativity", "q-identities", "h-of-lK")


def run(name: str, seed: int = 0, instances: int = 20, max_vertices: int = 10):
    """Run ``instances`` seeded checks; returns ``(ok, lines)`` stopping at the first mismatch."""
    rng = random.Random(seed)
    lines = [f"identity={name} seed={seed} instances={instances} max_vertices={max_vertices}"]
    for k in range(instances):
        bad, dump = _instances(name, rng, max_vertices)
        if bad is not None:
            lines.append(f"MISMATCH at instance {k}: {bad}")
            lines.extend(f"  input: {d}" for d in dump)
            return False, lines
    lines.append(f"ok: {instances} instances")
    return True, lines
