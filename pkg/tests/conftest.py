from hypothesis import strategies as st

from polyjoin.complex_core import SimplicialComplex


@st.composite
def complexes(draw, min_m=1, max_m=5, max_faces=4):
    m = draw(st.integers(min_m, max_m))
    gens = draw(st.lists(st.integers(1, (1 << m) - 1), max_size=max_faces))
    return SimplicialComplex(m, gens)


@st.composite
def compositions(draw, max_m=3, max_part=3):
    K = draw(complexes(1, max_m))
    parts = [draw(complexes(1, max_part)) for _ in range(K.m)]
    return K, parts
