import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import complexes
from polyjoin.complex_core import (
    SimplicialComplex,
    boundary,
    build,
    f_vector,
    full_subcomplex,
    ghost,
    intersection_poset,
    join,
    link,
    maximal_faces,
    members,
    simplex,
    standard,
    to_mask,
)
from polyjoin.errors import DomainError, MalformedInputError


def masks(*faces):
    return {to_mask(f) for f in faces}


def test_build_closes_downward():
    K = build(3, [[1, 2], [2, 3]])
    assert K.faces() == masks([], [1], [2], [3], [1, 2], [2, 3])


def test_build_ghost_complex():
    K = build(2, [])
    assert K.faces() == {0}
    assert K.ghost_vertices == (1, 2)


def test_build_point():
    assert build(1, [[1]]) == simplex(1)


def test_build_rejects_bad_vertex():
    with pytest.raises(MalformedInputError):
        build(3, [[1, 4]])
    with pytest.raises(MalformedInputError):
        build(3, [[0, 1]])


def test_standard():
    assert standard("boundary", 1) == ghost(1)
    assert standard("boundary", 3).faces() == set(range(7))
    assert standard("ghost", 4).faces() == {0}
    assert standard("simplex", 2).faces() == {0, 1, 2, 3}
    with pytest.raises(DomainError):
        standard("boundary", 0)
    with pytest.raises(DomainError):
        standard("cube", 2)


def test_link_examples():
    K = build(4, [[1, 2, 3], [3, 4]])
    assert link(K, []).complex == K
    assert link(boundary(3), [1]).complex == boundary(2)
    lk = link(build(3, [[1, 2], [3]]), [3]).complex
    assert lk.m == 2 and lk.faces() == {0}


def test_link_of_nonface():
    with pytest.raises(DomainError):
        link(boundary(3), [1, 2, 3])


def test_full_subcomplex_examples():
    K = boundary(3)
    assert full_subcomplex(K, [1, 2, 3]).complex == K
    assert full_subcomplex(K, [1, 2]).complex == simplex(2)
    assert full_subcomplex(ghost(4), [2, 4]).complex == ghost(2)


def test_join_examples():
    K = build(2, [[1, 2]])
    assert join(ghost(1), K) == build(3, [[2, 3]])
    square = join(boundary(2), boundary(2))
    assert square == build(4, [[1, 3], [1, 4], [2, 3], [2, 4]])
    cone = join(simplex(1), boundary(3))
    assert cone == build(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4]])


def test_maximal_faces():
    assert maximal_faces(boundary(3)) == [frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3})]
    assert maximal_faces(ghost(3)) == [frozenset()]
    assert maximal_faces(simplex(4)) == [frozenset({1, 2, 3, 4})]


def test_intersection_poset_boundary():
    P = intersection_poset(boundary(3))
    assert set(P.elements) == masks([], [1], [2], [3], [1, 2], [1, 3], [2, 3])
    assert P.graded and P.rank[0] == 0 and P.top_rank == 2


def test_intersection_poset_simplex_and_ghost():
    P = intersection_poset(simplex(3))
    assert P.elements == (7,)
    assert intersection_poset(ghost(3)).elements == (0,)


def test_intersection_poset_ungraded():
    # saturated chains: {} < {5} and {} < {1} < {1,4}
    K = build(5, [[1, 2, 3], [1, 4], [5]])
    P = intersection_poset(K)
    assert not P.graded


def test_f_vector():
    assert f_vector(build(5, [[1, 2], [2, 3], [3, 4], [4, 5], [5, 1]])) == [1, 5, 5]
    assert f_vector(simplex(2)) == [1, 2, 1]
    assert f_vector(ghost(3)) == [1]


@given(complexes(max_m=6))
def test_downward_closed(K):
    faces = K.faces()
    for F in faces:
        for v in members(F):
            assert F & ~(1 << (v - 1)) in faces


@given(complexes(max_m=6), st.data())
def test_link_brute_force(K, data):
    I = data.draw(st.sampled_from(sorted(K.faces())))
    rel = link(K, I)
    inverse = {new: old for old, new in rel.index.items()}
    found = set()
    for J in rel.complex.faces():
        old = to_mask(inverse[v] for v in members(J))
        assert old & I == 0 and (old | I) in K
        found.add(old)
    expected = {J for J in K.faces() if J & I == 0 and (J | I) in K}
    assert found == expected


@given(complexes(max_m=6), st.data())
def test_full_subcomplex_nested(K, data):
    A = data.draw(st.integers(0, (1 << K.m) - 1))
    B = data.draw(st.integers(0, A)) & A
    outer = full_subcomplex(K, A)
    inner = full_subcomplex(outer.complex, [outer.index[v] for v in members(B)])
    assert inner.complex == full_subcomplex(K, B).complex


@given(complexes(max_m=3), complexes(max_m=3), complexes(max_m=3))
def test_join_associative(K, L, M):
    assert join(join(K, L), M) == join(K, join(L, M)) == join(K, L, M)


@given(complexes(max_m=4), complexes(max_m=4))
def test_join_commutative_after_relabel(K, L):
    a = join(K, L)
    b = join(L, K)
    swap = {v: (v + L.m if v <= K.m else v - K.m) for v in range(1, K.m + L.m + 1)}
    moved = SimplicialComplex(a.m, [to_mask(swap[v] for v in members(F)) for F in a.maximal])
    assert moved == b


def test_resource_cap():
    from polyjoin.errors import ResourceLimitError

    with pytest.raises((ResourceLimitError, MalformedInputError)):
        SimplicialComplex(65, [1])
