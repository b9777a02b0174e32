import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from math import prod
from typing import Iterable, List, Sequence, Tuple

from config import DEFAULT_MAX_HOMOLOGY_VERTICES, DEFAULT_MAX_SEARCH_NODES, DEFAULT_MAX_VERTICES
from errors import (
    ContractViolation, FactorHasZeroDivisors, IndexOutOfRange, IndicesNotDistinctOrOrdered,
    NeedEqualSizesForTriple, NotAscending, TooFewFactors, UnboundedFactor, WrongArity,
)
from models import (
    BipartiteReport, EquivalenceReport, Poset, PredictedCounts, ProductAnalysis, SweepRow,
    WellCoveredVerdict, bits, mask_of,
)
from services.catalog import chain
from services.cm_cert import is_cohen_macaulay
from services.complex import independence_complex, is_maximal_independent, is_well_covered
from services.poset_core import atoms, direct_product, is_boolean, is_boolean_lattice
from services.zdg import zero_divisor_graph

# Configure logging
logger = logging.getLogger(__name__)


def validate_factors(factors: Sequence[Poset]) -> ProductAnalysis:
    """Check the factor hypotheses and materialize the product, Γ and D (tuples with no zero coordinate)"""
    for i, factor in enumerate(factors, start=1):
        if not factor.is_bounded:
            raise UnboundedFactor(f"factor {i} is not bounded")
        found = len(atoms(factor))
        if found != 1:
            raise FactorHasZeroDivisors(f"factor {i} has {found} atoms; exactly one is required")
    sizes = tuple(f.size for f in factors)
    if list(sizes) != sorted(sizes):
        raise NotAscending(f"factor sizes {list(sizes)} are not ascending")

    product = direct_product(factors)
    bottoms = [f.bottom for f in factors]
    dense = tuple(
        i for i, c in enumerate(product.coords)
        if all(ci != zero for ci, zero in zip(c, bottoms))
    )
    graph = zero_divisor_graph(product.carrier)
    expected = prod(s - 1 for s in sizes)
    if len(dense) != expected or len(dense) + len(graph.vertices) + 1 != product.carrier.size:
        logger.error(f"|D|={len(dense)}, expected {expected}, |V|={len(graph.vertices)}")
        raise ContractViolation("dense elements are not the complement of the zero divisors")
    logger.debug(f"Product {list(sizes)}: |D|={len(dense)}, |V(Γ)|={len(graph.vertices)}")
    return ProductAnalysis(product=product, factor_sizes=sizes, dense=dense, graph=graph)


def _atom_id(A: ProductAnalysis, i: int) -> int:
    """Carrier id of q_i (1-based): the factor atom in coordinate i, zero elsewhere"""
    factors = A.product.factors
    coords = [f.bottom for f in factors]
    coords[i - 1] = atoms(factors[i - 1])[0]
    return A.product.id_of_coords(tuple(coords))


def _check_index(A: ProductAnalysis, i: int) -> None:
    if not 1 <= i <= A.n:
        raise IndexOutOfRange(f"factor index {i} outside 1..{A.n}")


def _require_maximal(A: ProductAnalysis, members: Tuple[int, ...], name: str) -> Tuple[int, ...]:
    if not is_maximal_independent(A.graph, members):
        logger.error(f"{name} = {A.product.carrier.names(members)} is not maximal independent")
        raise ContractViolation(f"{name} is not a maximal independent set")
    return members


def j_single(A: ProductAnalysis, i: int) -> Tuple[int, ...]:
    _check_index(A, i)
    up = A.product.carrier.up[_atom_id(A, i)]
    members = bits(up & ~mask_of(A.dense))
    return _require_maximal(A, members, f"J_{i}")


def j_triple(A: ProductAnalysis, i: int, j: int, k: int) -> Tuple[int, ...]:
    """Elements above two of q_i, q_j, q_k, minus the dense ones"""
    for index in (i, j, k):
        _check_index(A, index)
    if not i < j < k:
        raise IndicesNotDistinctOrOrdered(f"need i < j < k, got ({i}, {j}, {k})")
    up = A.product.carrier.up
    qi, qj, qk = (up[_atom_id(A, m)] for m in (i, j, k))
    members = bits(((qi & qj) | (qj & qk) | (qi & qk)) & ~mask_of(A.dense))
    return _require_maximal(A, members, f"J_{{{i},{j},{k}}}")


def predicted_counts(sizes: Sequence[int], require_triple: bool = True) -> PredictedCounts:
    """Inclusion-exclusion sizes of J_i and, for equal factor sizes, of J_{i,j,k}"""
    sizes = list(sizes)
    n = len(sizes)
    if n < 3:
        raise TooFewFactors(f"counting needs at least 3 factors, got {n}")
    dense = prod(s - 1 for s in sizes)
    singles = tuple(
        prod(sizes[m] for m in range(n) if m != i) * (sizes[i] - 1) - dense
        for i in range(n)
    )
    if len(set(sizes)) != 1:
        if require_triple:
            raise NeedEqualSizesForTriple(f"triple count needs equal factor sizes, got {sizes}")
        return PredictedCounts(j_single_sizes=singles)
    alpha = sizes[0]
    triple = (3 * ((alpha - 1) ** 2 * alpha ** (n - 2) - (alpha - 1) ** n)
              - 2 * ((alpha - 1) ** 3 * alpha ** (n - 3) - (alpha - 1) ** n))
    return PredictedCounts(j_single_sizes=singles, j_triple_size=triple)


def well_covered_verdict(A: ProductAnalysis) -> WellCoveredVerdict:
    """Well-covered iff every factor has two elements, shown by enumerated J sizes"""
    if A.n < 3:
        raise TooFewFactors(f"the product verdict needs at least 3 factors, got {A.n}")
    claimed = all(s == 2 for s in A.factor_sizes)

    first = len(j_single(A, 1))
    witness = None
    for i in range(2, A.n + 1):
        other = len(j_single(A, i))
        if other != first:
            witness = ("J_1", first, f"J_{i}", other)
            break
    if witness is None:
        triple = len(j_triple(A, 1, 2, 3))
        if triple != first:
            witness = ("J_1", first, "J_{1,2,3}", triple)

    if claimed != (witness is None):
        logger.error(f"Sizes {list(A.factor_sizes)} with J witness {witness}")
        raise ContractViolation("enumerated J sizes contradict the two-element criterion")
    if witness is None:
        return WellCoveredVerdict(True, "every factor has 2 elements")
    a, a_size, b, b_size = witness
    return WellCoveredVerdict(False, f"|{a}| = {a_size} != {b_size} = |{b}|", witness)


def equivalence_suite(A: ProductAnalysis,
                      max_vertices: int = DEFAULT_MAX_VERTICES,
                      max_homology_vertices: int = DEFAULT_MAX_HOMOLOGY_VERTICES,
                      max_search_nodes: int = DEFAULT_MAX_SEARCH_NODES) -> EquivalenceReport:
    """Evaluate the five equivalent statements independently and require agreement"""
    if A.n < 3:
        raise TooFewFactors(f"the equivalence suite needs at least 3 factors, got {A.n}")
    carrier = A.product.carrier
    flags: List[str] = []

    verdict = is_cohen_macaulay(carrier, max_vertices, max_homology_vertices, max_search_nodes)
    if verdict.is_cm is None:
        flags.append(f"cohen_macaulay:inconclusive ({verdict.evidence})")

    by_formula = well_covered_verdict(A).well_covered
    if len(A.graph.vertices) <= max_vertices:
        well_covered = is_well_covered(independence_complex(A.graph, max_vertices))
        if well_covered != by_formula:
            logger.error(f"Enumeration says {well_covered}, J sizes say {by_formula}")
            raise ContractViolation("facet enumeration disagrees with the J-size verdict")
    else:
        well_covered = by_formula
        flags.append("well_covered:unverified-by-enumeration")

    report = EquivalenceReport(
        statements={
            "cohen_macaulay": verdict.is_cm,
            "well_covered": well_covered,
            "all_sizes_two": all(s == 2 for s in A.factor_sizes),
            "boolean_lattice": bool(is_boolean_lattice(carrier)),
            "boolean_poset": bool(is_boolean(carrier)),
        },
        flags=tuple(flags),
    )
    if not report.consistent:
        logger.error(f"Equivalence suite split on {list(A.factor_sizes)}: {report.statements}")
        raise ContractViolation("the five equivalent statements disagree")
    return report


def bipartite_case(A: ProductAnalysis) -> BipartiteReport:
    """Two factors: Γ is complete bipartite between (x,0) and (0,y)"""
    if A.n != 2:
        raise WrongArity(f"the bipartite case needs exactly 2 factors, got {A.n}")
    zero_left, zero_right = (f.bottom for f in A.product.factors)
    left = {v for v in A.graph.vertices if A.product.coords[v][1] == zero_right}
    right = {v for v in A.graph.vertices if A.product.coords[v][0] == zero_left}

    complete = (
        left.isdisjoint(right)
        and left | right == set(A.graph.vertices)
        and all(A.graph.adjacency[v] == right for v in left)
        and all(A.graph.adjacency[w] == left for w in right)
    )
    if not complete:
        raise ContractViolation("Γ of a two-factor product is not complete bipartite")
    note = (
        f"part sizes are |P_1|-1 = {len(left)} and |P_2|-1 = {len(right)}; "
        f"the graph is sometimes written K_{{|P_1|,|P_2|}} = K_{{{A.factor_sizes[0]},{A.factor_sizes[1]}}}"
    )
    return BipartiteReport(
        left_size=len(left),
        right_size=len(right),
        complete_bipartite=complete,
        well_covered=len(left) == len(right),
        cohen_macaulay=len(left) == len(right) == 1,
        note=note,
    )


def analyze_sizes(sizes: Sequence[int],
                  max_vertices: int = DEFAULT_MAX_VERTICES,
                  max_homology_vertices: int = DEFAULT_MAX_HOMOLOGY_VERTICES,
                  max_search_nodes: int = DEFAULT_MAX_SEARCH_NODES) -> SweepRow:
    """One sweep row for the product of chains with the given sizes"""
    sizes = tuple(sizes)
    if len(sizes) < 2:
        raise TooFewFactors(f"a sweep vector needs at least 2 sizes, got {list(sizes)}")
    A = validate_factors([chain(s) for s in sizes])
    boolean_lattice = bool(is_boolean_lattice(A.product.carrier))
    j1 = len(j_single(A, 1))

    if A.n == 2:
        report = bipartite_case(A)
        return SweepRow(sizes, len(A.dense), j1, None, report.well_covered,
                        report.cohen_macaulay, boolean_lattice)

    suite = equivalence_suite(A, max_vertices, max_homology_vertices, max_search_nodes)
    triple = len(j_triple(A, 1, 2, 3))
    return SweepRow(sizes, len(A.dense), j1, triple, suite.statements["well_covered"],
                    suite.statements["cohen_macaulay"], boolean_lattice)


def sweep(vectors: Iterable[Sequence[int]], workers: int = 1, **caps) -> List[SweepRow]:
    """Analyze every size vector; rows come back sorted by (n, sizes) for any worker count"""
    ordered = sorted((tuple(v) for v in vectors), key=lambda v: (len(v), v))
    analyze = partial(analyze_sizes, **caps)
    if workers > 1 and len(ordered) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(analyze, ordered))
    else:
        rows = [analyze(v) for v in ordered]
    logger.info(f"Swept {len(rows)} size vectors with {workers} worker(s)")
    return rows
