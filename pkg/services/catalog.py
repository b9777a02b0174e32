import logging
from itertools import combinations
from string import ascii_lowercase
from typing import Callable, Dict, List, Sequence, Tuple

from errors import BadParam, ContractViolation, UnknownCatalogName
from models import Poset
from services.poset_core import build_poset, direct_product, is_boolean

# Configure logging
logger = logging.getLogger(__name__)


def _subset_name(subset: Tuple[int, ...], n: int) -> str:
    if not subset:
        return "0"
    if len(subset) == n:
        return "1"
    return "{" + ",".join(str(i) for i in subset) + "}"


def boolean_lattice(n: int) -> Poset:
    """Power set of {1..n}, ranked, subsets named like {1,3}"""
    if n < 1:
        raise BadParam(f"boolean_lattice needs n >= 1, got {n}")
    subsets = [s for r in range(n + 1) for s in combinations(range(1, n + 1), r)]
    index = {s: i for i, s in enumerate(subsets)}
    pairs = []
    for s in subsets:
        for extra in range(1, n + 1):
            if extra not in s:
                pairs.append((index[s], index[tuple(sorted(s + (extra,)))]))
    return build_poset([_subset_name(s, n) for s in subsets], pairs)


def chain(k: int) -> Poset:
    """0 < c1 < ... < c(k-2) < 1"""
    if k < 1:
        raise BadParam(f"chain needs k >= 1, got {k}")
    if k == 1:
        return build_poset(["0"], [])
    names = ["0"] + [f"c{i}" for i in range(1, k - 1)] + ["1"]
    return build_poset(names, [(i, i + 1) for i in range(k - 1)])


def atom_coatom(k: int) -> Poset:
    """Ranks {0, 1, k-1, k} of 2^k: atoms q_i under the coatoms q_j' with j != i"""
    if k < 2:
        raise BadParam(f"atom_coatom needs k >= 2, got {k}")
    atom_names = [f"q{i}" for i in range(1, k + 1)]
    if k == 2:
        names = ["0"] + atom_names + ["1"]
        top = len(names) - 1
        return build_poset(names, [(0, 1), (0, 2), (1, top), (2, top)])

    coatom_names = [f"q{i}'" for i in range(1, k + 1)]
    names = ["0"] + atom_names + coatom_names + ["1"]
    top = len(names) - 1
    pairs = [(0, i) for i in range(1, k + 1)]
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i != j:
                pairs.append((i, k + j))
    pairs.extend((k + j, top) for j in range(1, k + 1))
    poset = build_poset(names, pairs)
    if not is_boolean(poset):
        raise ContractViolation(f"atom_coatom({k}) is expected to be Boolean")
    return poset


def m_atoms(k: int) -> Poset:
    """0 < k pairwise incomparable atoms < 1"""
    if k < 1:
        raise BadParam(f"m_atoms needs k >= 1, got {k}")
    if k <= len(ascii_lowercase):
        atom_names = list(ascii_lowercase[:k])
    else:
        atom_names = [f"a{i}" for i in range(1, k + 1)]
    names = ["0"] + atom_names + ["1"]
    top = k + 1
    pairs = [(0, i) for i in range(1, k + 1)] + [(i, top) for i in range(1, k + 1)]
    return build_poset(names, pairs)


def chain_product(*sizes: int) -> Poset:
    """Carrier of the direct product of chains of the given sizes"""
    if any(size < 2 for size in sizes):
        raise BadParam(f"chain_product factors need size >= 2, got {list(sizes)}")
    return direct_product([chain(size) for size in sizes]).carrier


CATALOG: Dict[str, Tuple[Callable[..., Poset], int, str]] = {
    # name: (builder, parameter count or -1 for variadic, description)
    "boolean_lattice": (boolean_lattice, 1, "power-set lattice 2^n"),
    "chain": (chain, 1, "k-element chain"),
    "atom_coatom": (atom_coatom, 1, "ranks {0,1,k-1,k} of 2^k"),
    "m_atoms": (m_atoms, 1, "k incomparable atoms between 0 and 1"),
    "chain_product": (chain_product, -1, "direct product of chains of the given sizes"),
}


def catalog_names() -> List[str]:
    return sorted(CATALOG)


def generate(name: str, params: Sequence[int]) -> Poset:
    """Build a catalog poset by name"""
    if name not in CATALOG:
        raise UnknownCatalogName(f"unknown catalog entry {name!r}; known: {', '.join(catalog_names())}")
    builder, arity, _ = CATALOG[name]
    if arity >= 0 and len(params) != arity:
        raise BadParam(f"{name} takes {arity} parameter(s), got {len(params)}")
    if arity < 0 and len(params) < 2:
        raise BadParam(f"{name} takes at least 2 parameters, got {len(params)}")
    logger.debug(f"Generating {name}{tuple(params)}")
    return builder(*params)
