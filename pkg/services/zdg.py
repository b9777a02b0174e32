import logging
from typing import List, Set, Tuple

from errors import NoBottom, NotBoolean
from models import Check, ElementSet, Graph, Poset, ZdGraph, bits
from services.poset_core import atoms_mask, complements_of, is_boolean

# Configure logging
logger = logging.getLogger(__name__)


def zero_divisors(P: Poset) -> ElementSet:
    """Z(P): elements a with some nonzero b such that {a,b}^l = {0}"""
    if P.bottom is None:
        raise NoBottom("zero divisors need a least element")
    zero_bit = 1 << P.bottom
    nonzero = [b for b in range(P.size) if b != P.bottom]
    return tuple(
        a for a in range(P.size)
        if any(P.down[a] & P.down[b] == zero_bit for b in nonzero)
    )


def zero_divisor_graph(P: Poset) -> ZdGraph:
    """Γ(P) on Z(P) \\ {0}, adjacent exactly when the lower cone of the pair is {0}"""
    if P.bottom is None:
        raise NoBottom("zero-divisor graph needs a least element")
    zero_bit = 1 << P.bottom
    vertices = tuple(v for v in zero_divisors(P) if v != P.bottom)
    adjacency = {}
    for v in vertices:
        adjacency[v] = frozenset(
            w for w in vertices if w != v and P.down[v] & P.down[w] == zero_bit
        )
    graph = ZdGraph(
        vertices=vertices,
        adjacency=adjacency,
        labels={v: P.name_of(v) for v in vertices},
        owner=P,
    )
    logger.debug(f"Γ(P) has {len(vertices)} vertices and {graph.edge_count} edges")
    return graph


def graph_complements(G: Graph, v: int) -> Set[int]:
    """w with v ⊥ w: adjacent to v and sharing no neighbor with it"""
    neighbors = G.neighbors(v)
    return {w for w in neighbors if not (neighbors & G.neighbors(w))}


def ends(G: Graph) -> Set[int]:
    return {v for v in G.vertices if len(G.adjacency[v]) == 1}


def triangles(G: Graph) -> List[Tuple[int, int, int]]:
    result = []
    for v, w in G.edges():
        for u in sorted(G.adjacency[v] & G.adjacency[w]):
            if u > w:
                result.append((v, w, u))
    return result


def to_dot(G: Graph) -> str:
    lines = ["graph zdg {"]
    lines.extend(f'  "{G.label(v)}" -- "{G.label(w)}";' for v, w in G.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def _require_boolean(P: Poset) -> None:
    verdict = is_boolean(P)
    if not verdict:
        raise NotBoolean(f"poset is not Boolean ({verdict.reason} fails)")


def check_unique_complementation(P: Poset, G: ZdGraph) -> Check:
    """Every vertex has exactly one graph complement, equal to its order complement"""
    _require_boolean(P)
    violators = []
    for v in G.vertices:
        in_graph = graph_complements(G, v)
        in_order = set(complements_of(P, v))
        if len(in_graph) != 1 or in_graph != in_order:
            violators.append(G.label(v))
    if violators:
        logger.warning(f"Unique complementation fails at {violators}")
        return Check(False, "unique graph complement", tuple(violators))
    return Check(True)


def check_atom_end_lemma(P: Poset, G: ZdGraph) -> Check:
    """b is an atom iff its complement b' is the unique end adjacent to b"""
    _require_boolean(P)
    amask = atoms_mask(P)
    end_set = ends(G)
    violators = []
    for b in G.vertices:
        (complement,) = complements_of(P, b)
        unique_end = (G.adjacency[b] & end_set) == {complement}
        if bool(amask >> b & 1) != unique_end:
            violators.append(G.label(b))
    if violators:
        logger.warning(f"Atom/end correspondence fails at {violators}")
        return Check(False, "atom iff complement is its end", tuple(violators))
    return Check(True)


def vertex_set_is_middle(P: Poset, G: ZdGraph) -> bool:
    """Vertices are exactly P \\ {0, 1}"""
    middle = bits(P.all_mask & ~(1 << P.bottom) & ~(1 << P.top))
    return G.vertices == middle
