import logging
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterable, List, Optional, Sequence, Tuple

from errors import (
    AntisymmetryViolation, BadParam, ContractViolation, DuplicateElement, NoBottom,
    NoTop, PosetSyntaxError, TooFewFactors, UnboundedFactor, UnknownName,
)
from models import Check, ElementSet, Poset, ProductPoset, bits, mask_of

# Configure logging
logger = logging.getLogger(__name__)

HEADER = "poset v1"


def _assemble(names: Sequence[str], up: Sequence[int]) -> Poset:
    """Build a Poset from already-closed up rows"""
    n = len(names)
    down = [0] * n
    for i, row in enumerate(up):
        for j in bits(row):
            down[j] |= 1 << i
    everything = (1 << n) - 1
    bottom = next((i for i in range(n) if up[i] == everything), None)
    top = next((i for i in range(n) if down[i] == everything), None)
    return Poset(tuple(names), tuple(up), tuple(down), bottom, top)


def build_poset(names: Sequence[str], pairs: Iterable[Tuple[int, int]]) -> Poset:
    """Poset whose order is the reflexive-transitive closure of `pairs` (a <= b)"""
    n = len(names)
    if len(set(names)) != n:
        dup = next(name for name in names if list(names).count(name) > 1)
        raise DuplicateElement(f"duplicate element {dup!r}")
    up = [1 << i for i in range(n)]
    for a, b in pairs:
        up[a] |= 1 << b

    # Warshall over bit rows
    for k in range(n):
        bit_k, row_k = 1 << k, up[k]
        for i in range(n):
            if up[i] & bit_k:
                up[i] |= row_k

    poset = _assemble(names, up)
    for i in range(n):
        both = poset.up[i] & poset.down[i] & ~(1 << i)
        if both:
            j = bits(both)[0]
            raise AntisymmetryViolation(
                f"{names[i]} <= {names[j]} and {names[j]} <= {names[i]} for distinct elements"
            )
    logger.debug(f"Built poset with {n} elements, bottom={poset.bottom}, top={poset.top}")
    return poset


def parse_poset(text: str) -> Poset:
    """Parse the line-oriented poset file format"""
    names: List[str] = []
    index = {}
    pending: List[Tuple[str, str, int]] = []
    header_seen = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if not header_seen:
            if " ".join(tokens) != HEADER:
                raise PosetSyntaxError(f"expected header {HEADER!r}, got {line!r}", lineno)
            header_seen = True
            continue

        directive = tokens[0]
        if directive == "elem":
            if len(tokens) != 2:
                raise PosetSyntaxError("usage: elem <name>", lineno)
            name = tokens[1]
            if name in index:
                raise DuplicateElement(f"duplicate element {name!r}", lineno)
            index[name] = len(names)
            names.append(name)
        elif directive == "le":
            if len(tokens) != 3:
                raise PosetSyntaxError("usage: le <nameA> <nameB>", lineno)
            pending.append((tokens[1], tokens[2], lineno))
        else:
            raise PosetSyntaxError(f"unknown directive {directive!r}", lineno)

    if not header_seen:
        raise PosetSyntaxError(f"empty poset file, expected header {HEADER!r}", 1)
    if not names:
        raise PosetSyntaxError("poset file declares no elements", 1)

    pairs = []
    for a, b, lineno in pending:
        for name in (a, b):
            if name not in index:
                raise UnknownName(f"undeclared element {name!r}", lineno)
        pairs.append((index[a], index[b]))
    return build_poset(names, pairs)


def covers(P: Poset) -> List[Tuple[int, int]]:
    """Cover pairs (a, b): a < b with nothing strictly between"""
    result = []
    for a in range(P.size):
        for b in bits(P.up[a] & ~(1 << a)):
            if P.up[a] & P.down[b] == (1 << a) | (1 << b):
                result.append((a, b))
    return result


def poset_to_text(P: Poset, comment: str = "") -> str:
    lines = [HEADER]
    if comment:
        lines.append(f"# {comment}")
    lines.extend(f"elem {name}" for name in P.elements)
    lines.extend(f"le {P.elements[a]} {P.elements[b]}" for a, b in covers(P))
    return "\n".join(lines) + "\n"


# Cones

def _check_ids(P: Poset, A: Iterable[int]) -> int:
    mask = 0
    for a in A:
        if not 0 <= a < P.size:
            raise BadParam(f"element id {a} out of range for a poset of size {P.size}")
        mask |= 1 << a
    return mask


def upper_mask(P: Poset, mask: int) -> int:
    result = P.all_mask
    for a in bits(mask):
        result &= P.up[a]
    return result


def lower_mask(P: Poset, mask: int) -> int:
    result = P.all_mask
    for a in bits(mask):
        result &= P.down[a]
    return result


def upper_cone(P: Poset, A: Iterable[int]) -> ElementSet:
    """A^u: elements above every member of A (all of P for empty A)"""
    return bits(upper_mask(P, _check_ids(P, A)))


def lower_cone(P: Poset, A: Iterable[int]) -> ElementSet:
    """A^l: elements below every member of A (all of P for empty A)"""
    return bits(lower_mask(P, _check_ids(P, A)))


def _require_bottom(P: Poset) -> int:
    if P.bottom is None:
        raise NoBottom("poset has no least element")
    return P.bottom


def _require_top(P: Poset) -> int:
    if P.top is None:
        raise NoTop("poset has no greatest element")
    return P.top


@lru_cache(maxsize=256)
def atoms_mask(P: Poset) -> int:
    zero = _require_bottom(P)
    mask = 0
    for a in range(P.size):
        if a != zero and P.down[a] == (1 << zero) | (1 << a):
            mask |= 1 << a
    return mask


def atoms(P: Poset) -> ElementSet:
    return bits(atoms_mask(P))


def weight(P: Poset, x: int) -> int:
    """Number of atoms lying below x"""
    return (P.down[x] & atoms_mask(P)).bit_count()


@lru_cache(maxsize=256)
def weights(P: Poset) -> Tuple[int, ...]:
    amask = atoms_mask(P)
    return tuple((row & amask).bit_count() for row in P.down)


def poset_weight(P: Poset) -> int:
    return weight(P, _require_top(P))


def complements_of(P: Poset, x: int) -> ElementSet:
    zero, one = _require_bottom(P), _require_top(P)
    lower, upper = P.down[x], P.up[x]
    return tuple(
        y for y in range(P.size)
        if lower & P.down[y] == 1 << zero and upper & P.up[y] == 1 << one
    )


def pseudocomplement_of(P: Poset, x: int) -> Optional[int]:
    """The b with b^l = x^perp, or None when x^perp is not principal"""
    zero = _require_bottom(P)
    perp = mask_of(y for y in range(P.size) if P.down[x] & P.down[y] == 1 << zero)
    found = [b for b in range(P.size) if P.down[b] == perp]
    if len(found) > 1:
        raise ContractViolation(f"{P.name_of(x)} has several pseudocomplements")
    return found[0] if found else None


# Structural predicates

@lru_cache(maxsize=256)
def is_distributive(P: Poset) -> Check:
    """Cone-theoretic distributivity {a, {b,c}^u}^l == {{a,b}^l u {a,c}^l}^{ul} for all triples"""
    n = P.size
    lower_cache, upper_cache = {}, {}

    def lower_of(mask: int) -> int:
        if mask not in lower_cache:
            lower_cache[mask] = lower_mask(P, mask)
        return lower_cache[mask]

    def upper_of(mask: int) -> int:
        if mask not in upper_cache:
            upper_cache[mask] = upper_mask(P, mask)
        return upper_cache[mask]

    for a in range(n):
        down_a = P.down[a]
        for b in range(n):
            down_ab = down_a & P.down[b]
            for c in range(n):
                lhs = down_a & lower_of(P.up[b] & P.up[c])
                rhs = lower_of(upper_of(down_ab | (down_a & P.down[c])))
                if lhs != rhs:
                    return Check(False, "distributivity", P.names((a, b, c)))
    return Check(True)


def is_complemented(P: Poset) -> Check:
    for x in range(P.size):
        if not complements_of(P, x):
            return Check(False, "complementation", (P.name_of(x),))
    return Check(True)


def is_uniquely_complemented(P: Poset) -> bool:
    return all(len(complements_of(P, x)) == 1 for x in range(P.size))


def is_pseudocomplemented(P: Poset) -> bool:
    return all(pseudocomplement_of(P, x) is not None for x in range(P.size))


def is_boolean(P: Poset) -> Check:
    """Bounded, distributive and complemented; reason names the first failed clause"""
    if not P.is_bounded:
        return Check(False, "bounded")
    distributive = is_distributive(P)
    if not distributive:
        return distributive
    return is_complemented(P)


def _semi_complemented(P: Poset, strict_below: bool) -> bool:
    zero = _require_bottom(P)
    zero_bit = 1 << zero
    for a in range(P.size):
        for b in range(P.size):
            if strict_below:
                if not P.lt(a, b):
                    continue
            elif P.leq(b, a):
                continue
            candidates = bits(P.down[b] & ~zero_bit)
            if not any(P.down[a] & P.down[c] == zero_bit for c in candidates):
                return False
    return True


def is_ssc(P: Poset) -> bool:
    """Section semi-complemented: b not<= a gives 0 < c <= b with {a,c}^l = {0}"""
    return _semi_complemented(P, strict_below=False)


def is_wssc(P: Poset) -> bool:
    """Weakly section semi-complemented: as is_ssc, for a < b only"""
    return _semi_complemented(P, strict_below=True)


def _least_of(P: Poset, mask: int) -> Optional[int]:
    for u in bits(mask):
        if mask & ~P.up[u] == 0:
            return u
    return None


def _greatest_of(P: Poset, mask: int) -> Optional[int]:
    for u in bits(mask):
        if mask & ~P.down[u] == 0:
            return u
    return None


def is_atomistic(P: Poset) -> bool:
    """Every x is the least element of the upper cone of the atoms below it"""
    amask = atoms_mask(P)
    return all(_least_of(P, upper_mask(P, P.down[x] & amask)) == x for x in range(P.size))


def is_lattice(P: Poset) -> Check:
    for a in range(P.size):
        for b in range(a + 1, P.size):
            if _least_of(P, P.up[a] & P.up[b]) is None:
                return Check(False, "join", P.names((a, b)))
            if _greatest_of(P, P.down[a] & P.down[b]) is None:
                return Check(False, "meet", P.names((a, b)))
    return Check(True)


def is_boolean_lattice(P: Poset) -> Check:
    """Boolean, a lattice, and order-isomorphic to 2^k through atom supports"""
    boolean = is_boolean(P)
    if not boolean:
        return boolean
    lattice = is_lattice(P)
    if not lattice:
        return lattice
    amask = atoms_mask(P)
    supports = [row & amask for row in P.down]
    if P.size != 1 << amask.bit_count() or len(set(supports)) != P.size:
        return Check(False, "atom supports are not a bijection onto 2^k")
    for a in range(P.size):
        for b in range(P.size):
            if P.leq(a, b) != (supports[a] & ~supports[b] == 0):
                return Check(False, "atom supports do not preserve order", P.names((a, b)))
    return Check(True)


def direct_product(factors: Sequence[Poset]) -> ProductPoset:
    """Componentwise-ordered product; carrier ids follow itertools.product order"""
    if len(factors) < 2:
        raise TooFewFactors(f"a direct product needs at least 2 factors, got {len(factors)}")
    for i, factor in enumerate(factors, start=1):
        if not factor.is_bounded:
            raise UnboundedFactor(f"factor {i} is not bounded")

    sizes = [f.size for f in factors]
    strides = [1] * len(sizes)
    for i in range(len(sizes) - 2, -1, -1):
        strides[i] = strides[i + 1] * sizes[i + 1]
    up_lists = [[bits(row) for row in f.up] for f in factors]

    coords = tuple(cartesian(*[range(s) for s in sizes]))
    names, up = [], []
    for c in coords:
        names.append("(" + ",".join(f.elements[ci] for f, ci in zip(factors, c)) + ")")
        partial = [0]
        for i, ci in enumerate(c):
            partial = [p + u * strides[i] for p in partial for u in up_lists[i][ci]]
        up.append(mask_of(partial))

    carrier = _assemble(names, up)
    result = ProductPoset(tuple(factors), carrier, coords)
    if all(len(atoms(f)) == 1 for f in factors):
        expected = []
        for i, factor in enumerate(factors):
            c = [other.bottom for other in factors]
            c[i] = atoms(factor)[0]
            expected.append(result.id_of_coords(tuple(c)))
        if tuple(sorted(expected)) != atoms(carrier):
            raise ContractViolation("product atoms differ from the coordinate atoms q_i")
    logger.debug(f"Built product of {len(factors)} factors with {carrier.size} elements")
    return result
