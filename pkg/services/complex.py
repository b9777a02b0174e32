import logging
from typing import Iterable, List, Optional, Tuple

import networkx as nx

from config import DEFAULT_MAX_VERTICES
from errors import (
    ContractViolation, EmptyComplex, EmptyGraphNoVariables, NotBoolean, NotIndependent,
    SizeLimitExceeded,
)
from models import EdgeIdealScript, Graph, IndependenceComplex, Poset, ZdGraph
from services.poset_core import complements_of, is_boolean, weights

# Configure logging
logger = logging.getLogger(__name__)


def graph_from_edges(edges: Iterable[Tuple[int, int]], vertices: Iterable[int] = (),
                     labels: Optional[dict] = None) -> Graph:
    """Plain graph from an edge list (extra isolated vertices allowed)"""
    adjacency = {v: set() for v in vertices}
    for v, w in edges:
        adjacency.setdefault(v, set()).add(w)
        adjacency.setdefault(w, set()).add(v)
    return Graph(
        vertices=tuple(sorted(adjacency)),
        adjacency={v: frozenset(n) for v, n in adjacency.items()},
        labels=dict(labels or {}),
    )


def _canonical(facets: Iterable[Iterable[int]]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(sorted({tuple(sorted(f)) for f in facets}))


def independence_complex(G: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> IndependenceComplex:
    """All maximal independent sets, as maximal cliques of the complement graph"""
    if len(G.vertices) > max_vertices:
        raise SizeLimitExceeded(
            f"{len(G.vertices)} vertices exceed the facet-enumeration cap of {max_vertices}"
        )
    if not G.vertices:
        facets = ((),)
    else:
        facets = _canonical(nx.find_cliques(nx.complement(G.nx_graph)))
    logger.debug(f"Enumerated {len(facets)} facets on {len(G.vertices)} vertices")
    return IndependenceComplex(facets=facets, vertices=G.vertices, graph=G)


def complex_from_facets(facets: Iterable[Iterable[int]], labels: Optional[dict] = None) -> IndependenceComplex:
    """Complex generated by `facets`; non-maximal generators are dropped"""
    candidates = [frozenset(f) for f in facets]
    maximal = [f for f in candidates if not any(f < g for g in candidates)]
    vertices = tuple(sorted(set().union(*maximal))) if maximal else ()
    return IndependenceComplex(
        facets=_canonical(maximal) or ((),),
        vertices=vertices,
        labels=dict(labels or {}),
    )


def brute_force_facets(G: Graph) -> Tuple[Tuple[int, ...], ...]:
    """Maximal independent sets by checking every vertex subset"""
    vertices = list(G.vertices)
    index = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    closed = [sum(1 << index[w] for w in G.adjacency[v]) | 1 << i for i, v in enumerate(vertices)]
    full = (1 << n) - 1
    # each subset extends the one without its lowest member
    independent = [True] * (1 << n)
    covered = [0] * (1 << n)
    facets = []
    for subset in range(1, 1 << n):
        low = (subset & -subset).bit_length() - 1
        rest = subset & (subset - 1)
        independent[subset] = independent[rest] and not (closed[low] & rest)
        covered[subset] = covered[rest] | closed[low]
        if independent[subset] and covered[subset] == full:
            facets.append(tuple(vertices[i] for i in range(n) if subset >> i & 1))
    if n == 0:
        facets.append(())
    return _canonical(facets)


def is_independent(G: Graph, S: Iterable[int]) -> bool:
    members = set(S)
    return not any(G.adjacency[v] & members for v in members)


def is_maximal_independent(G: Graph, S: Iterable[int]) -> bool:
    members = set(S)
    if not is_independent(G, members):
        return False
    return all(G.adjacency[v] & members for v in G.vertices if v not in members)


def is_vertex_cover(G: Graph, S: Iterable[int]) -> bool:
    members = set(S)
    return all(v in members or w in members for v, w in G.edges())


def is_minimal_vertex_cover(G: Graph, S: Iterable[int]) -> bool:
    members = set(S)
    if not is_vertex_cover(G, members):
        return False
    # every member needs a neighbor outside the cover
    return all(G.adjacency[v] - members for v in members)


def minimal_vertex_covers(C: IndependenceComplex) -> List[Tuple[int, ...]]:
    return [tuple(v for v in C.vertices if v not in facet) for facet in C.facets]


def is_well_covered(C: IndependenceComplex) -> bool:
    if not C.facets:
        raise EmptyComplex("complex has no facets")
    return len(C.facet_sizes) == 1


def is_very_well_covered(C: IndependenceComplex) -> bool:
    """Well-covered, no isolated vertices, and |V| twice the facet size"""
    if not is_well_covered(C):
        return False
    if C.graph is None or not C.graph.vertices:
        return False
    if any(not C.graph.adjacency[v] for v in C.graph.vertices):
        return False
    return len(C.graph.vertices) == 2 * C.facet_sizes[0]


def complementary_pairs(P: Poset, G: Graph) -> List[Tuple[int, int]]:
    """Unique-complement pairs (a, a') of a Boolean poset, ascending by smaller id"""
    pairs = set()
    for v in G.vertices:
        (complement,) = complements_of(P, v)
        pairs.add((min(v, complement), max(v, complement)))
    return sorted(pairs)


def extend_independent(P: Poset, G: ZdGraph, S: Iterable[int]) -> Tuple[int, ...]:
    """Greedy pair extension of an independent set to a facet of size |V|/2"""
    verdict = is_boolean(P)
    if not verdict:
        raise NotBoolean(f"poset is not Boolean ({verdict.reason} fails)")
    current = set(S)
    if not current <= set(G.vertices) or not is_independent(G, current):
        raise NotIndependent("seed set is not an independent set of Γ(P)")

    weight_of = weights(P)
    for a, b in complementary_pairs(P, G):
        if a in current or b in current:
            continue
        addable = [v for v in (a, b) if not (G.adjacency[v] & current)]
        if not addable:
            logger.error(f"Neither {G.label(a)} nor {G.label(b)} extends {sorted(current)}")
            raise ContractViolation("greedy pair extension got stuck on a Boolean poset")
        # heavier member first, then smaller id
        current.add(min(addable, key=lambda v: (-weight_of[v], v)))

    if 2 * len(current) != len(G.vertices):
        raise ContractViolation(f"extension reached {len(current)} of {len(G.vertices) // 2}")
    return tuple(sorted(current))


def export_edge_ideal(G: Graph, dialect: str = "m2") -> EdgeIdealScript:
    """Edge ideal generated by v_i*v_j over the edges of G"""
    if not G.vertices:
        raise EmptyGraphNoVariables("a graph without vertices has no polynomial ring")
    position = {v: k for k, v in enumerate(G.vertices)}
    generators = sorted((position[v], position[w]) for v, w in G.edges())
    return EdgeIdealScript(
        variables=tuple(f"v{k}" for k in range(len(G.vertices))),
        names=tuple(G.label(v) for v in G.vertices),
        generators=tuple(generators),
        dialect=dialect,
    )
