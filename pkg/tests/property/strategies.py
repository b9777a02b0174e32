from hypothesis import strategies as st

from services.catalog import atom_coatom, boolean_lattice
from services.complex import graph_from_edges
from services.poset_core import build_poset

# Boolean posets small enough for many examples
BOOLEAN_POSETS = [boolean_lattice(n) for n in range(2, 5)] + [atom_coatom(k) for k in range(3, 6)]


def _index_pairs(n: int, max_size: int):
    return st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_size)


@st.composite
def posets(draw, max_size: int = 7):
    """Random posets; relations only go from smaller to larger index, so no cycles"""
    n = draw(st.integers(min_value=1, max_value=max_size))
    raw = draw(_index_pairs(n, 2 * n))
    return build_poset([f"e{i}" for i in range(n)], [(a, b) for a, b in raw if a < b])


@st.composite
def graphs(draw, min_vertices: int = 1, max_vertices: int = 10):
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    raw = draw(_index_pairs(n, 3 * n))
    return graph_from_edges([(a, b) for a, b in raw if a != b], vertices=range(n))


@st.composite
def facet_lists(draw, max_vertices: int = 7):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    facets = draw(st.lists(
        st.sets(st.integers(0, n - 1), min_size=1, max_size=4),
        min_size=1, max_size=5,
    ))
    return [tuple(sorted(f)) for f in facets]


@st.composite
def bounded_posets(draw, max_size: int = 7):
    """Random posets with e0 as least and the last element as greatest"""
    n = draw(st.integers(min_value=2, max_value=max_size))
    raw = draw(_index_pairs(n, 2 * n))
    pairs = [(a, b) for a, b in raw if a < b]
    pairs += [(0, i) for i in range(1, n)] + [(i, n - 1) for i in range(n - 1)]
    return build_poset([f"e{i}" for i in range(n)], pairs)
