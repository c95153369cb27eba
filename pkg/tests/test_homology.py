import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complexes
from polyjoin.complex_core import boundary, build, f_vector, ghost, intersection_poset, join, link, simplex
from polyjoin.corpus import golden_corpus, pentagon, rp2
from polyjoin.homology import (
    F2,
    QQ,
    FieldSpec,
    boundary_rows,
    is_generalized_homology_sphere,
    is_homology_sphere,
    is_spherical_nerve_complex,
    reduced_cohomology,
)
from polyjoin.linalg import rank


def test_field_parse():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("f2") == F2
    assert FieldSpec.parse("F5").characteristic == 5
    with pytest.raises(ValueError):
        FieldSpec.parse("f4")


@pytest.mark.parametrize("m", range(2, 7))
def test_boundary_is_sphere(m):
    assert reduced_cohomology(boundary(m)).nonzero() == {m - 2: 1}


def test_empty_complex():
    assert reduced_cohomology(ghost(3)).nonzero() == {-1: 1}


def test_pentagon():
    assert reduced_cohomology(pentagon()).nonzero() == {1: 1}


def test_simplex_acyclic():
    assert reduced_cohomology(simplex(4)).nonzero() == {}


def test_is_homology_sphere_examples():
    assert is_homology_sphere(boundary(3), QQ, 2)
    assert not any(is_homology_sphere(simplex(3), QQ, n) for n in range(1, 5))
    assert is_homology_sphere(ghost(1), QQ, 0)


def test_rp2_torsion_separates_fields():
    assert reduced_cohomology(rp2(), QQ).nonzero() == {}
    assert reduced_cohomology(rp2(), F2).nonzero() == {1: 1, 2: 1}
    assert reduced_cohomology(rp2(), FieldSpec(3)).nonzero() == {}


def test_torsion_free_fields_agree():
    for K in (boundary(4), pentagon(), join(boundary(2), boundary(3)), golden_corpus()["octahedron"]):
        expected = reduced_cohomology(K, QQ).nonzero()
        assert reduced_cohomology(K, F2).nonzero() == expected
        assert reduced_cohomology(K, FieldSpec(5)).nonzero() == expected


def _sympy_ranks(K):
    faces = sorted(K.faces(), key=lambda f: (f.bit_count(), f))
    by_size = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    out = {}
    for k in range(1, K.dim + 2):
        lower = {f: i for i, f in enumerate(by_size.get(k - 1, []))}
        rows = boundary_rows(by_size[k], lower)
        M = sympy.zeros(len(rows), len(lower))
        for r, row in enumerate(rows):
            for c, v in row.items():
                M[r, c] = v
        out[k] = M.rank()
    return out


@given(complexes(max_m=6, max_faces=5))
@settings(max_examples=40, deadline=None)
def test_boundary_rank_matches_sympy(K):
    faces = sorted(K.faces(), key=lambda f: (f.bit_count(), f))
    by_size = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    for k, expected in _sympy_ranks(K).items():
        lower = {f: i for i, f in enumerate(by_size.get(k - 1, []))}
        assert rank(boundary_rows(by_size[k], lower), 0) == expected


@given(complexes(max_m=6, max_faces=5), st.sampled_from([QQ, F2, FieldSpec(3)]))
@settings(max_examples=60, deadline=None)
def test_euler_characteristic(K, field):
    f = f_vector(K)
    reduced_euler = sum((-1) ** (k - 1) * fk for k, fk in enumerate(f))
    assert reduced_cohomology(K, field).euler() == reduced_euler


@given(complexes(max_m=4), complexes(max_m=4), st.sampled_from([QQ, F2]))
@settings(max_examples=40, deadline=None)
def test_join_kunneth(K, L, field):
    a = reduced_cohomology(K, field)
    b = reduced_cohomology(L, field)
    j = reduced_cohomology(join(K, L), field)
    for d in range(-1, K.m + L.m):
        expected = sum(a[p] * b[d - 1 - p] for p in range(-1, d + 1))
        assert j[d] == expected


@given(complexes(max_m=6, max_faces=5))
@settings(max_examples=50, deadline=None)
def test_links_off_the_intersection_poset_are_acyclic(K):
    F = set(intersection_poset(K).elements)
    for I in K.faces():
        if I not in F:
            assert reduced_cohomology(link(K, I).complex).nonzero() == {}


def test_nerve_check_boundaries():
    for m in range(2, 6):
        assert is_spherical_nerve_complex(boundary(m)).rank == m - 1


def test_nerve_check_shared_vertex_fails_a():
    res = is_spherical_nerve_complex(build(4, [[1, 2, 3], [1, 3, 4]]))
    assert not res and res.condition == "a"


def test_nerve_check_ghost():
    for m in range(1, 4):
        assert is_spherical_nerve_complex(ghost(m)).rank == 0


def test_nerve_check_pentagon_and_pyramid():
    assert is_spherical_nerve_complex(pentagon()).rank == 2
    assert is_spherical_nerve_complex(golden_corpus()["square_pyramid_nerve"]).rank == 3


def test_nerve_check_fails_c():
    # three points: graded of rank 1, but not a 0-sphere
    res = is_spherical_nerve_complex(build(3, [[1], [2], [3]]))
    assert not res and res.condition == "c"


def test_generalized_sphere():
    assert is_generalized_homology_sphere(pentagon())
    assert is_generalized_homology_sphere(boundary(4))
    # homology of S^1, but the link of vertex 3 is three points
    K = build(5, [[1, 2], [3, 4], [3, 5], [4, 5], [1, 3]])
    assert not is_generalized_homology_sphere(K)
