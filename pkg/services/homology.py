import logging
from itertools import combinations
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from config import DEFAULT_MAX_HOMOLOGY_VERTICES
from errors import ContractViolation, NotAFace, SizeLimitExceeded
from models import FaceRow, HomologyProfile, IndependenceComplex, ReisnerResult

# Configure logging
logger = logging.getLogger(__name__)

SparseRow = Dict[int, int]


def _normalize(row: SparseRow) -> SparseRow:
    content = 0
    for value in row.values():
        content = gcd(content, value)
    if content > 1:
        row = {c: v // content for c, v in row.items()}
    return row


def matrix_rank(rows: Iterable[SparseRow], column_order: Optional[Sequence[int]] = None) -> int:
    """Rank over the rationals of a sparse integer matrix.

    Rows are reduced against stored pivot rows by fraction-free combination and
    divided by their content, so entries stay small. `column_order` decides which
    column is eliminated first; any order gives the same rank.
    """
    rank_of = None
    if column_order is not None:
        rank_of = {c: position for position, c in enumerate(column_order)}

    def pivot_key(col: int) -> int:
        return col if rank_of is None else rank_of[col]

    pivots: Dict[int, Tuple[int, SparseRow]] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while row:
            col = min(row, key=pivot_key)
            if col not in pivots:
                pivots[col] = (row[col], row)
                break
            pivot_value, pivot_row = pivots[col]
            factor = row[col]
            combined = {c: v * pivot_value for c, v in row.items()}
            for c, v in pivot_row.items():
                value = combined.get(c, 0) - factor * v
                if value:
                    combined[c] = value
                else:
                    combined.pop(c, None)
            row = _normalize(combined)
    return len(pivots)


def _vertex_count(C: IndependenceComplex) -> int:
    return len({v for facet in C.facets for v in facet})


def faces_by_dimension(C: IndependenceComplex,
                       max_vertices: int = DEFAULT_MAX_HOMOLOGY_VERTICES) -> List[List[Tuple[int, ...]]]:
    """Downward closure of the facets; entry i holds the faces of dimension i - 1"""
    count = _vertex_count(C)
    if count > max_vertices:
        raise SizeLimitExceeded(f"{count} vertices exceed the homology cap of {max_vertices}")
    faces = set()
    for facet in C.facets:
        for size in range(len(facet) + 1):
            faces.update(combinations(facet, size))
    top = max((len(f) for f in C.facets), default=0)
    grouped: List[List[Tuple[int, ...]]] = [[] for _ in range(top + 1)]
    for face in faces:
        grouped[len(face)].append(face)
    for group in grouped:
        group.sort()
    return grouped


def _boundary_rows(faces: List[Tuple[int, ...]], lower: List[Tuple[int, ...]]) -> List[SparseRow]:
    position = {face: k for k, face in enumerate(lower)}
    rows = []
    for face in faces:
        row = {}
        for k in range(len(face)):
            row[position[face[:k] + face[k + 1:]]] = -1 if k % 2 else 1
        rows.append(row)
    return rows


def reduced_betti(C: IndependenceComplex,
                  max_vertices: int = DEFAULT_MAX_HOMOLOGY_VERTICES) -> HomologyProfile:
    """Reduced Betti numbers from the ranks of the augmented boundary maps"""
    grouped = faces_by_dimension(C, max_vertices)
    f_vector = tuple(len(g) for g in grouped)
    # ranks[i]: rank of the boundary from faces of size i to size i - 1
    ranks = [0] * (len(grouped) + 1)
    for size in range(1, len(grouped)):
        ranks[size] = matrix_rank(_boundary_rows(grouped[size], grouped[size - 1]))
    betti = {}
    for size, count in enumerate(f_vector):
        betti[size - 1] = count - ranks[size] - ranks[size + 1]

    euler_faces = sum((-1) ** (size + 1) * count for size, count in enumerate(f_vector))
    euler_betti = sum((-1) ** (dim + 2) * value for dim, value in betti.items())
    if euler_faces != euler_betti or min(betti.values()) < 0:
        logger.error(f"Euler relation failed: faces {euler_faces}, betti {euler_betti}")
        raise ContractViolation("reduced Betti numbers violate the Euler relation")
    return HomologyProfile(betti=betti, f_vector=f_vector)


def link_of(C: IndependenceComplex, F: Iterable[int]) -> IndependenceComplex:
    """{G : G ∩ F = ∅, G ∪ F ∈ C}, listed by facets"""
    face = frozenset(F)
    containing = [facet for facet in C.facets if face <= set(facet)]
    if not containing:
        raise NotAFace(f"{sorted(face)} is not a face of the complex")
    facets = tuple(sorted(tuple(v for v in facet if v not in face) for facet in containing))
    vertices = tuple(sorted({v for facet in facets for v in facet}))
    return IndependenceComplex(facets=facets, vertices=vertices, graph=C.graph, labels=C.labels)


def _reduced_h0(L: IndependenceComplex) -> int:
    """Components of the 1-skeleton minus one (the reduced zeroth Betti number)"""
    skeleton = nx.Graph()
    for facet in L.facets:
        skeleton.add_nodes_from(facet)
        skeleton.add_edges_from(combinations(facet, 2))
    if skeleton.number_of_nodes() == 0:
        return 0
    return nx.number_connected_components(skeleton) - 1


def reisner_cm(C: IndependenceComplex,
               max_vertices: int = DEFAULT_MAX_HOMOLOGY_VERTICES,
               verbose: bool = False) -> ReisnerResult:
    """Cohen-Macaulay over the rationals iff every link is acyclic below its dimension.

    Faces are visited from the largest down, so links are small first. Without
    `verbose`, a cheap connectivity pass runs before any rank computation and
    its first disconnected link is the witness; otherwise the witness is the
    first failing (face, dimension) in face order.
    """
    grouped = faces_by_dimension(C, max_vertices)
    ordered = [face for size in range(len(grouped) - 1, -1, -1) for face in grouped[size]]

    if not verbose:
        for face in ordered:
            link = link_of(C, face)
            if link.dimension >= 1 and _reduced_h0(link):
                logger.info(f"Reisner criterion fails at face {C.face_label(face)}: disconnected link")
                return ReisnerResult(cm=False, witness=(face, 0))

    rows: List[FaceRow] = []
    for face in ordered:
        link = link_of(C, face)
        dim = link.dimension
        if verbose:
            profile = reduced_betti(link, max_vertices)
            rows.append(FaceRow(face, dim, profile.as_tuple()))
            failing = profile.first_nonvanishing_below(dim)
        elif dim >= 2:
            failing = reduced_betti(link, max_vertices).first_nonvanishing_below(dim)
        else:
            failing = None
        if failing is not None:
            logger.info(f"Reisner criterion fails at face {C.face_label(face)} in dimension {failing}")
            return ReisnerResult(cm=False, witness=(face, failing), rows=tuple(rows))
    return ReisnerResult(cm=True, rows=tuple(rows))
