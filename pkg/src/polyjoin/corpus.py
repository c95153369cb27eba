"""Named fixture complexes and seeded random instance generators."""

from __future__ import annotations

import random

from .complex_core import SimplicialComplex, boundary, build, ghost, join, simplex


def pentagon() -> SimplicialComplex:
    """Boundary of the pentagon, the 5-cycle 1-2-3-4-5-1."""
    return build(5, [[1, 2], [2, 3], [3, 4], [4, 5], [5, 1]])


def rp2() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    return build(6, [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
    ])


def octahedron() -> SimplicialComplex:
    return join(boundary(2), boundary(2), boundary(2))


# H-representations {y : A y + b >= 0} with facets listed in cyclic order

PENTAGON_HREP = (
    [[1, 0], [0, 1], [-1, 0], [-1, -1], [0, -1]],
    [0, 0, 2, 3, 2],
)
SQUARE_HREP = ([[1, 0], [0, 1], [-1, 0], [0, -1]], [0, 0, 1, 1])
SEGMENT_HREP = ([[1], [-1]], [0, 1])
# square pyramid: base z >= 0 and four slanted sides meeting at the apex (1, 1, 2)
SQUARE_PYRAMID_HREP = (
    [[0, 0, 1], [2, 0, -1], [0, 2, -1], [-2, 0, -1], [0, -2, -1]],
    [0, 0, 0, 4, 4],
)


def golden_corpus() -> dict[str, SimplicialComplex]:
    """Small complexes covering spheres, ghosts, non-spheres and torsion."""
    corpus = {
        "pt": simplex(1),
        "o1": ghost(1),
        "o3": ghost(3),
        "simplex3": simplex(3),
        "boundary2": boundary(2),
        "boundary3": boundary(3),
        "boundary4": boundary(4),
        "boundary5": boundary(5),
        "pentagon": pentagon(),
        "square": join(boundary(2), boundary(2)),
        "octahedron": octahedron(),
        "rp2": rp2(),
        "path3": build(3, [[1, 2], [2, 3]]),
        "edge_and_point": build(3, [[1, 2], [3]]),
        "two_triangles": build(4, [[1, 2, 3], [1, 3, 4]]),
        "ghosted_edge": build(4, [[1, 2]]),
        "bowtie": build(5, [[1, 2, 3], [1, 4, 5]]),
        "square_pyramid_nerve": build(5, [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 2, 5], [2, 3, 4, 5]]),
    }
    return corpus


def all_complexes(m: int) -> list[SimplicialComplex]:
    """Every simplicial complex on ``[m]`` (ghost vertices allowed); practical for ``m <= 4``."""
    subsets = list(range(1, 1 << m))
    out = []
    for bits in range(1 << len(subsets)):
        family = {subsets[k] for k in range(len(subsets)) if bits >> k & 1}
        closed = all(
            (f & ~(1 << v)) in family or (f & ~(1 << v)) == 0
            for f in family for v in range(m) if f >> v & 1
        )
        if closed:
            out.append(SimplicialComplex(m, family))
    return out


def random_complex(rng: random.Random, m: int, max_faces: int = 4) -> SimplicialComplex:
    """Downward closure of up to ``max_faces`` random nonempty subsets of ``[m]``.

    Face sizes are drawn uniformly and the full vertex set is rare, so that
    compositions do not collapse into simplices.  Most draws get the
    uncovered vertices as extra singletons.
    """
    if m == 1:
        return simplex(1) if rng.random() < 0.3 else ghost(1)
    k = rng.randint(0, max_faces)
    gens = []
    for _ in range(k):
        size = m if rng.random() < 0.05 else rng.randint(1, m - 1)
        gens.append(sum(1 << v for v in rng.sample(range(m), size)))
    if rng.random() < 0.7:
        # cover the vertex set so that ghost vertices stay the exception
        covered = 0
        for g in gens:
            covered |= g
        gens.extend(1 << v for v in range(m) if not covered >> v & 1)
    return SimplicialComplex(m, gens)


def random_sizes(rng: random.Random, count: int, budget: int, cap: int = 3) -> list[int]:
    """``count`` positive sizes, each at most ``cap``, summing to at most ``budget``."""
    sizes = [1] * count
    spare = budget - count
    for i in rng.sample(range(count), count):
        extra = rng.randint(0, max(0, min(cap - 1, spare)))
        sizes[i] += extra
        spare -= extra
    return sizes


def random_composition(rng: random.Random, max_vertices: int = 10, max_m: int = 4,
                       max_part: int = 3) -> tuple[SimplicialComplex, list[SimplicialComplex]]:
    """``K`` on at most ``max_m`` vertices and parts with total vertex count within budget."""
    top = min(max_m, max_vertices)
    m = 1 if top == 1 or rng.random() < 0.1 else rng.randint(2, top)
    K = random_complex(rng, m)
    sizes = random_sizes(rng, m, max_vertices, max_part)
    return K, [random_complex(rng, l) for l in sizes]


def random_grand_composition(rng: random.Random, max_vertices: int = 12):
    """``K``, parts ``K_i`` and grandparts ``K_ij`` (one per vertex of each part)."""
    m = rng.randint(1, 3)
    K = random_complex(rng, m)
    ls = random_sizes(rng, m, min(max_vertices, 3 * m), 3)
    parts = [random_complex(rng, l) for l in ls]
    total_slots = sum(ls)
    rs = random_sizes(rng, total_slots, max_vertices, 3)
    grand = []
    k = 0
    for l in ls:
        grand.append([random_complex(rng, rs[k + j]) for j in range(l)])
        k += l
    return K, parts, grand

