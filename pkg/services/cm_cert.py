import logging
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from config import DEFAULT_MAX_HOMOLOGY_VERTICES, DEFAULT_MAX_SEARCH_NODES, DEFAULT_MAX_VERTICES
from errors import (
    ContractViolation, EmptyGraph, FewerThanTwoAtoms, NotBoolean, PairsDontPartition,
    SizeLimitExceeded,
)
from models import (
    CM, INCONCLUSIVE, NOT_CM, CmVerdict, ConditionStatus, Graph, MY_CONDITIONS, MyCertificate,
    OrderingResult, Poset, Stratification,
)
from services.complex import (
    independence_complex, is_maximal_independent, is_very_well_covered, is_well_covered,
)
from services.homology import reisner_cm
from services.poset_core import atoms, complements_of, is_boolean, poset_weight, weights
from services.zdg import graph_complements, zero_divisor_graph

# Configure logging
logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def boolean_facet(P: Poset) -> Stratification:
    """Facet B of Γ(P) assembled from the heavy weight strata of a Boolean poset"""
    verdict = is_boolean(P)
    if not verdict:
        raise NotBoolean(f"poset is not Boolean ({verdict.reason} fails)")
    if len(atoms(P)) < 2:
        raise FewerThanTwoAtoms(f"need at least two atoms, found {len(atoms(P))}")

    k = poset_weight(P)
    weight_of = weights(P)
    strata: Dict[int, Tuple[int, ...]] = {}
    i = 1
    while 2 * (k - i) > k:
        strata[i] = tuple(x for x in range(P.size) if weight_of[x] == k - i)
        i += 1

    b_hat: List[int] = []
    if k % 2 == 0:
        for x in range(P.size):
            if weight_of[x] == k // 2:
                (complement,) = complements_of(P, x)
                if x < complement:
                    b_hat.append(x)

    B = tuple(sorted([x for stratum in strata.values() for x in stratum] + b_hat))
    G = zero_divisor_graph(P)
    if 2 * len(B) != len(G.vertices) or not is_maximal_independent(G, B):
        logger.error(f"Stratum union {P.names(B)} is not a facet of size {len(G.vertices) // 2}")
        raise ContractViolation("weight strata do not assemble a facet of half size")
    logger.debug(f"k={k}, strata sizes {[len(s) for s in strata.values()]}, |b_hat|={len(b_hat)}")
    return Stratification(k=k, strata=strata, b_hat=tuple(b_hat), B=B)


def boolean_labeling(P: Poset, S: Stratification) -> MyCertificate:
    """y_i walks B by decreasing weight (ids ascending within a stratum, b_hat last); x_i = y_i'"""
    ys = [y for i in sorted(S.strata) for y in S.strata[i]] + list(S.b_hat)
    pairs = []
    for y in ys:
        (x,) = complements_of(P, y)
        pairs.append((x, y))
    return MyCertificate(pairs=tuple(pairs), labels=dict(enumerate(P.elements)))


# Conditions

def _condition_a(G: Graph, xs: Sequence[int], ys: Sequence[int]) -> Optional[Tuple[str, ...]]:
    cover, independent = set(xs), set(ys)
    for v, w in G.edges():
        if v not in cover and w not in cover:
            return (G.label(v), G.label(w))
    for x in xs:
        if G.adjacency[x] <= cover:
            return (G.label(x),)
    for y in ys:
        inside = G.adjacency[y] & independent
        if inside:
            return (G.label(y), G.label(min(inside)))
    for v in G.vertices:
        if v not in independent and not G.adjacency[v] & independent:
            return (G.label(v),)
    return None


def _condition_b(G: Graph, pairs: Sequence[Pair]) -> Optional[Tuple[str, ...]]:
    for x, y in pairs:
        if not G.adjacent(x, y):
            return (G.label(x), G.label(y))
    return None


def _condition_c(G: Graph, pairs: Sequence[Pair]) -> Optional[Tuple[str, ...]]:
    for i, j, k in permutations(range(len(pairs)), 3):
        x_j, y_j = pairs[j]
        x_k = pairs[k][0]
        if not G.adjacent(y_j, x_k):
            continue
        for z in pairs[i]:
            if G.adjacent(z, x_j) and not G.adjacent(z, x_k):
                return (G.label(z), G.label(x_j), G.label(y_j), G.label(x_k))
    return None


def _condition_d(G: Graph, pairs: Sequence[Pair]) -> Optional[Tuple[str, ...]]:
    for x_i, _ in pairs:
        for x_j, y_j in pairs:
            if G.adjacent(x_i, y_j) and G.adjacent(x_i, x_j):
                return (G.label(x_i), G.label(y_j), G.label(x_j))
    return None


def _condition_e(G: Graph, pairs: Sequence[Pair]) -> Optional[Tuple[str, ...]]:
    for i, (x_i, _) in enumerate(pairs):
        for j in range(i):
            if G.adjacent(x_i, pairs[j][1]):
                return (G.label(x_i), G.label(pairs[j][1]))
    return None


def verify_my_conditions(G: Graph, pairs: Sequence[Pair]) -> MyCertificate:
    """Check conditions (a)-(e) literally, with a witness for each failure.

    (a) {x_i} is a minimal vertex cover and {y_i} a maximal independent set
    (b) x_i ~ y_i for every i
    (c) z_i ~ x_j and y_j ~ x_k imply z_i ~ x_k, for distinct i, j, k and z_i in {x_i, y_i}
    (d) x_i ~ y_j implies x_i and x_j are not adjacent
    (e) x_i ~ y_j implies i <= j
    """
    pairs = tuple((x, y) for x, y in pairs)
    flat = [v for pair in pairs for v in pair]
    if len(set(flat)) != len(flat) or set(flat) != set(G.vertices):
        raise PairsDontPartition(f"{len(pairs)} pairs do not partition the {len(G.vertices)} vertices")

    xs = [x for x, _ in pairs]
    ys = [y for _, y in pairs]
    witnesses = {
        "a": _condition_a(G, xs, ys),
        "b": _condition_b(G, pairs),
        "c": _condition_c(G, pairs),
        "d": _condition_d(G, pairs),
        "e": _condition_e(G, pairs),
    }
    conditions = {
        name: ConditionStatus(name, witnesses[name] is None, witnesses[name])
        for name in MY_CONDITIONS
    }
    return MyCertificate(pairs=pairs, labels=dict(G.labels), conditions=conditions)


def find_ordering(G: Graph, matching: Sequence[Pair]) -> OrderingResult:
    """Order the pairs so that x_p ~ y_q forces p before q, or report a cycle"""
    matching = tuple(matching)
    constraints = nx.DiGraph()
    constraints.add_nodes_from(range(1, len(matching) + 1))
    for p, (x_p, _) in enumerate(matching, start=1):
        for q, (_, y_q) in enumerate(matching, start=1):
            if p != q and G.adjacent(x_p, y_q):
                constraints.add_edge(p, q)

    if not nx.is_directed_acyclic_graph(constraints):
        edges = nx.find_cycle(constraints)
        cycle = tuple(u for u, _ in edges) + (edges[0][0],)
        logger.debug(f"Ordering constraints contain the cycle {cycle}")
        return OrderingResult(cycle=cycle)
    order = nx.lexicographical_topological_sort(constraints)
    return OrderingResult(pairs=tuple(matching[p - 1] for p in order))


# Matching search for non-Boolean very well-covered graphs

class _SearchBudgetExceeded(Exception):
    pass


def _conflicts_d(G: Graph, new: Pair, chosen: Sequence[Pair]) -> bool:
    x, y = new
    for x_o, y_o in chosen:
        if G.adjacent(x, y_o) and G.adjacent(x, x_o):
            return True
        if G.adjacent(x_o, y) and G.adjacent(x_o, x):
            return True
    return False


def _search_facet(G: Graph, facet: Tuple[int, ...], budget: List[int]) -> Optional[MyCertificate]:
    Y = set(facet)
    X = [v for v in G.vertices if v not in Y]
    chosen: List[Pair] = []
    used = set()

    def candidates(x: int) -> List[int]:
        # graph complements of x are tried first
        preferred = graph_complements(G, x)
        return sorted(G.adjacency[x] & Y - used, key=lambda y: (y not in preferred, y))

    def extend(position: int) -> Optional[MyCertificate]:
        budget[0] -= 1
        if budget[0] < 0:
            raise _SearchBudgetExceeded()
        if position == len(X):
            if _condition_c(G, chosen) is not None:
                return None
            ordering = find_ordering(G, chosen)
            if not ordering.feasible:
                return None
            return verify_my_conditions(G, ordering.pairs)
        x = X[position]
        for y in candidates(x):
            if _conflicts_d(G, (x, y), chosen):
                continue
            chosen.append((x, y))
            used.add(y)
            found = extend(position + 1)
            chosen.pop()
            used.discard(y)
            if found is not None:
                return found
        return None

    return extend(0)


def search_certificate(G: Graph, facets: Sequence[Tuple[int, ...]],
                       max_search_nodes: int = DEFAULT_MAX_SEARCH_NODES) -> Tuple[Optional[MyCertificate], bool]:
    """Backtrack over facets and perfect matchings; returns (certificate, exhaustive)"""
    budget = [max_search_nodes]
    half = len(G.vertices) // 2
    try:
        for facet in facets:
            if len(facet) != half:
                continue
            found = _search_facet(G, facet, budget)
            if found is not None:
                return found, True
    except _SearchBudgetExceeded:
        logger.warning(f"Matching search stopped after {max_search_nodes} nodes")
        return None, False
    logger.debug(f"Matching search exhausted after {max_search_nodes - budget[0]} nodes")
    return None, True


def is_cohen_macaulay(P: Poset,
                      max_vertices: int = DEFAULT_MAX_VERTICES,
                      max_homology_vertices: int = DEFAULT_MAX_HOMOLOGY_VERTICES,
                      max_search_nodes: int = DEFAULT_MAX_SEARCH_NODES) -> CmVerdict:
    """Decide whether Γ(P) is Cohen-Macaulay, recording which route settled it"""
    G = zero_divisor_graph(P)
    if not G.vertices:
        raise EmptyGraph("Γ(P) has no vertices")

    if is_boolean(P):
        S = boolean_facet(P)
        labeling = boolean_labeling(P, S)
        in_stratum_order = verify_my_conditions(G, labeling.pairs)
        if not in_stratum_order.passed:
            failed = [name for name, status in in_stratum_order.conditions.items() if not status.passed]
            logger.warning(f"Stratum-order labeling fails {failed} on a Boolean poset of size {P.size}")
        ordering = find_ordering(G, labeling.pairs)
        if not ordering.feasible:
            logger.error(f"Boolean labeling has cyclic ordering constraints {ordering.cycle}")
            raise ContractViolation("no valid ordering for the Boolean labeling")
        certificate = verify_my_conditions(G, ordering.pairs)
        if not certificate.passed:
            logger.error(f"Boolean certificate fails: {certificate.to_dict()['conditions']}")
            raise ContractViolation("Boolean certificate does not pass all conditions")
        logger.info(f"Γ(P) is Cohen-Macaulay by the Boolean certificate (h={certificate.h})")
        return CmVerdict(CM, "boolean-certificate", f"h={certificate.h}", certificate=certificate)

    try:
        C = independence_complex(G, max_vertices)
    except SizeLimitExceeded as e:
        logger.warning(f"Cannot enumerate facets: {e}")
        return CmVerdict(INCONCLUSIVE, "size-cap", str(e))

    if not is_well_covered(C):
        sizes = ",".join(str(s) for s in C.facet_sizes)
        logger.info(f"Γ(P) is not well-covered (facet sizes {sizes})")
        return CmVerdict(NOT_CM, "not-unmixed", f"facet sizes {sizes}")

    if is_very_well_covered(C):
        certificate, exhaustive = search_certificate(G, C.facets, max_search_nodes)
        if certificate is not None:
            return CmVerdict(CM, "matching-search", f"h={certificate.h}", certificate=certificate)
        if exhaustive:
            return CmVerdict(NOT_CM, "matching-search", "no relabeling satisfies the conditions")
        return CmVerdict(INCONCLUSIVE, "matching-search", f"search budget of {max_search_nodes} nodes exceeded")

    if len(C.vertices) > max_homology_vertices:
        return CmVerdict(
            INCONCLUSIVE, "homology-cap",
            f"{len(C.vertices)} vertices exceed the homology cap of {max_homology_vertices}",
        )
    result = reisner_cm(C, max_homology_vertices)
    if result.cm:
        return CmVerdict(CM, "reisner", "all links acyclic below their dimension", reisner=result)
    face, dim = result.witness
    return CmVerdict(NOT_CM, "reisner", f"link of {C.face_label(face)} has homology in dimension {dim}",
                     reisner=result)
