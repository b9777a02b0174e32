import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from errors import UnknownName, UnknownVertex

# Sorted tuple of element ids of one poset
ElementSet = Tuple[int, ...]


def mask_of(ids: Iterable[int]) -> int:
    mask = 0
    for i in ids:
        mask |= 1 << i
    return mask


def bits(mask: int) -> ElementSet:
    """Element ids set in `mask`, ascending"""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Poset:
    """Finite poset stored as reflexive-transitive bit rows"""
    elements: Tuple[str, ...]
    up: Tuple[int, ...]  # up[i]: mask of j with i <= j
    down: Tuple[int, ...]  # down[i]: mask of j with j <= i
    bottom: Optional[int] = None
    top: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def all_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    @property
    def is_bounded(self) -> bool:
        return self.bottom is not None and self.top is not None

    @cached_property
    def index(self) -> Dict[str, int]:
        return {name: i for i, name in enumerate(self.elements)}

    def id_of(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownName(f"no element named {name!r}")

    def ids(self, names: Iterable[str]) -> ElementSet:
        return tuple(sorted(self.id_of(n) for n in names))

    def name_of(self, i: int) -> str:
        return self.elements[i]

    def names(self, ids: Iterable[int]) -> Tuple[str, ...]:
        return tuple(self.elements[i] for i in ids)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)


@dataclass(frozen=True)
class ProductPoset:
    """Direct product of bounded posets with componentwise order"""
    factors: Tuple[Poset, ...]
    carrier: Poset
    coords: Tuple[Tuple[int, ...], ...]  # coords[i]: factor ids of carrier element i

    def coord_of(self, i: int) -> Tuple[int, ...]:
        return self.coords[i]

    @cached_property
    def _by_coords(self) -> Dict[Tuple[int, ...], int]:
        return {c: i for i, c in enumerate(self.coords)}

    def id_of_coords(self, coords: Tuple[int, ...]) -> int:
        return self._by_coords[tuple(coords)]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on integer vertices"""
    vertices: Tuple[int, ...]
    adjacency: Dict[int, FrozenSet[int]]
    labels: Dict[int, str] = field(default_factory=dict)

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def neighbors(self, v: int) -> FrozenSet[int]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise UnknownVertex(f"{self.label(v)} is not a vertex")

    def adjacent(self, v: int, w: int) -> bool:
        return w in self.adjacency.get(v, ())

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (min id, max id), sorted"""
        return sorted((v, w) for v in self.vertices for w in self.adjacency[v] if v < w)

    @property
    def edge_count(self) -> int:
        return sum(len(n) for n in self.adjacency.values()) // 2

    @cached_property
    def nx_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges())
        return g


@dataclass(frozen=True)
class ZdGraph(Graph):
    """Zero-divisor graph Γ(P); vertex ids are element ids of `owner`"""
    owner: Optional[Poset] = None


@dataclass(frozen=True)
class IndependenceComplex:
    """Simplicial complex given by its facets"""
    facets: Tuple[Tuple[int, ...], ...]
    vertices: Tuple[int, ...]
    graph: Optional[Graph] = None
    labels: Dict[int, str] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def facet_sizes(self) -> Tuple[int, ...]:
        return tuple(sorted({len(f) for f in self.facets}))

    def label(self, v: int) -> str:
        if self.graph is not None:
            return self.graph.label(v)
        return self.labels.get(v, str(v))

    def face_label(self, face: Iterable[int]) -> str:
        return "{" + ",".join(self.label(v) for v in face) + "}"


@dataclass(frozen=True)
class EdgeIdealScript:
    """Edge ideal of a graph as a Macaulay2 or Singular script"""
    variables: Tuple[str, ...]
    names: Tuple[str, ...]  # element name of each variable
    generators: Tuple[Tuple[int, int], ...]  # variable index pairs
    dialect: str = "m2"

    def to_text(self) -> str:
        comment = "--" if self.dialect == "m2" else "//"
        lines = [f"{comment} {var} = {name}" for var, name in zip(self.variables, self.names)]
        last = self.variables[-1]
        monomials = ", ".join(f"v{i}*v{j}" for i, j in self.generators)
        if self.dialect == "m2":
            lines.append(f"R = QQ[v0..{last}];")
            lines.append(f"I = monomialIdeal({monomials or '0_R'});")
        else:
            lines.append(f"ring R = 0, (v0..{last}), dp;")
            lines.append(f"ideal I = {monomials or '0'};")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Check:
    """Boolean outcome with a reason and a witness on failure"""
    ok: bool
    reason: str = ""
    witness: Tuple[Any, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ConditionStatus:
    condition: str
    passed: bool
    witness: Optional[Tuple[str, ...]] = None


MY_CONDITIONS = ("a", "b", "c", "d", "e")


@dataclass(frozen=True)
class MyCertificate:
    """Ordered relabeling (x_i, y_i) and the outcome of each relabeling condition"""
    pairs: Tuple[Tuple[int, int], ...]
    labels: Dict[int, str] = field(default_factory=dict)
    conditions: Dict[str, ConditionStatus] = field(default_factory=dict)

    @property
    def h(self) -> int:
        return len(self.pairs)

    @property
    def verified(self) -> bool:
        return bool(self.conditions)

    @property
    def passed(self) -> bool:
        return self.verified and all(c.passed for c in self.conditions.values())

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'h': self.h,
            'pairs': [
                {'index': i, 'x': self.label(x), 'y': self.label(y)}
                for i, (x, y) in enumerate(self.pairs, start=1)
            ],
            'conditions': {},
            'passed': self.passed,
        }
        for name in MY_CONDITIONS:
            status = self.conditions.get(name)
            if status is None:
                continue
            result['conditions'][name] = {
                'passed': status.passed,
                'witness': list(status.witness) if status.witness else None,
            }
        return result

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


@dataclass(frozen=True)
class Stratification:
    """Weight strata B_i of a Boolean poset and the facet B they assemble"""
    k: int
    strata: Dict[int, ElementSet]  # i -> elements of weight k - i
    b_hat: ElementSet
    B: ElementSet


@dataclass(frozen=True)
class OrderingResult:
    pairs: Optional[Tuple[Tuple[int, int], ...]] = None
    cycle: Tuple[int, ...] = ()  # 1-based pair indices, first == last

    @property
    def feasible(self) -> bool:
        return self.pairs is not None


@dataclass(frozen=True)
class FaceRow:
    face: Tuple[int, ...]
    link_dimension: int
    betti: Tuple[int, ...]  # reduced Betti numbers from dimension -1 upward


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers over the rationals"""
    betti: Dict[int, int]
    f_vector: Tuple[int, ...]  # f_{-1}, f_0, ...

    @property
    def dimension(self) -> int:
        return len(self.f_vector) - 2

    def first_nonvanishing_below(self, dim: int) -> Optional[int]:
        for i in range(-1, dim):
            if self.betti.get(i, 0):
                return i
        return None

    def as_tuple(self) -> Tuple[int, ...]:
        return tuple(self.betti[i] for i in range(-1, self.dimension + 1))


@dataclass(frozen=True)
class ReisnerResult:
    cm: bool
    witness: Optional[Tuple[Tuple[int, ...], int]] = None
    rows: Tuple[FaceRow, ...] = ()

    def summary(self) -> str:
        return f"CM: {'yes' if self.cm else 'no'}"


CM = "CM"
NOT_CM = "NotCM"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CmVerdict:
    verdict: str
    path: str
    evidence: str = ""
    certificate: Optional[MyCertificate] = None
    reisner: Optional[ReisnerResult] = None

    @property
    def is_cm(self) -> Optional[bool]:
        if self.verdict == INCONCLUSIVE:
            return None
        return self.verdict == CM


@dataclass(frozen=True)
class ProductAnalysis:
    """Product of unique-atom bounded posets with its dense elements"""
    product: ProductPoset
    factor_sizes: Tuple[int, ...]
    dense: ElementSet
    graph: ZdGraph

    @property
    def n(self) -> int:
        return len(self.factor_sizes)


@dataclass(frozen=True)
class PredictedCounts:
    j_single_sizes: Tuple[int, ...]
    j_triple_size: Optional[int] = None  # only for equal factor sizes


@dataclass(frozen=True)
class WellCoveredVerdict:
    well_covered: bool
    explanation: str
    witness: Optional[Tuple[str, int, str, int]] = None


EQUIVALENCE_STATEMENTS = ("cohen_macaulay", "well_covered", "all_sizes_two", "boolean_lattice", "boolean_poset")


@dataclass(frozen=True)
class EquivalenceReport:
    statements: Dict[str, Optional[bool]]
    flags: Tuple[str, ...] = ()

    @property
    def truth_vector(self) -> Tuple[Optional[bool], ...]:
        return tuple(self.statements[name] for name in EQUIVALENCE_STATEMENTS)

    @property
    def consistent(self) -> bool:
        known = {v for v in self.statements.values() if v is not None}
        return len(known) <= 1


@dataclass(frozen=True)
class BipartiteReport:
    left_size: int
    right_size: int
    complete_bipartite: bool
    well_covered: bool
    cohen_macaulay: bool
    note: str = ""


@dataclass(frozen=True)
class SweepRow:
    sizes: Tuple[int, ...]
    dense: int
    j1: int
    triple: Optional[int]
    well_covered: Optional[bool]
    cohen_macaulay: Optional[bool]
    boolean_lattice: bool

    def to_tsv(self) -> str:
        def yes_no(value: Optional[bool]) -> str:
            if value is None:
                return "unknown"
            return "yes" if value else "no"

        return "\t".join([
            ",".join(str(s) for s in self.sizes),
            str(self.dense),
            str(self.j1),
            "-" if self.triple is None else str(self.triple),
            yes_no(self.well_covered),
            yes_no(self.cohen_macaulay),
            yes_no(self.boolean_lattice),
        ])


SWEEP_HEADER = "\t".join(["sizes", "dense", "j1", "triple", "well_covered", "cm", "boolean_lattice"])
