import logging
from typing import List, Sequence, Tuple

from config import RunConfig
from errors import EmptyGraph, PosetSyntaxError, SizeLimitExceeded, TooFewFactors
from models import CmVerdict, FaceRow, IndependenceComplex, Poset, SWEEP_HEADER, SweepRow
from services.cm_cert import is_cohen_macaulay
from services.complex import independence_complex, is_very_well_covered, is_well_covered
from services.homology import reisner_cm
from services.poset_core import atoms, is_boolean, is_distributive, is_ssc, is_wssc, poset_weight
from services.zdg import zero_divisor_graph, zero_divisors

# Configure logging
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONTRACT = 1
EXIT_INPUT = 2


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def info_report(P: Poset) -> str:
    lines = [f"elements: {P.size}", f"bounded: {yes_no(P.is_bounded)}"]
    if P.bottom is not None:
        found = atoms(P)
        lines.append(f"atoms: {len(found)} ({', '.join(P.names(found))})")
    else:
        lines.append("atoms: n/a (no least element)")
    lines.append(f"weight: {poset_weight(P)}" if P.is_bounded else "weight: n/a")

    distributive = is_distributive(P)
    lines.append("distributive: " + (
        "yes" if distributive else f"no (witness {','.join(distributive.witness)})"
    ))
    boolean = is_boolean(P)
    if boolean:
        lines.append("boolean: yes")
    elif boolean.witness:
        lines.append(f"boolean: no ({boolean.reason} witness {','.join(boolean.witness)})")
    else:
        lines.append(f"boolean: no (not {boolean.reason})")

    if P.bottom is not None:
        lines.append(f"ssc: {yes_no(is_ssc(P))}")
        lines.append(f"wssc: {yes_no(is_wssc(P))}")
        lines.append(f"zero-divisors: {len(zero_divisors(P))}")
    else:
        lines.extend(["ssc: n/a", "wssc: n/a", "zero-divisors: n/a"])
    return "\n".join(lines) + "\n"


def zdg_report(P: Poset) -> str:
    G = zero_divisor_graph(P)
    lines = [f"vertices: {len(G.vertices)}", f"edges: {G.edge_count}"]
    lines.extend(f"{G.label(v)} -- {G.label(w)}" for v, w in G.edges())
    return "\n".join(lines) + "\n"


def _my_line(verdict: CmVerdict) -> str:
    answer = {True: "yes", False: "no", None: "inconclusive"}[verdict.is_cm]
    return f"CM(MY): {answer} [{verdict.path}]"


def _face_row(C: IndependenceComplex, row: FaceRow) -> str:
    betti = ",".join(str(b) for b in row.betti)
    return f"  link of {C.face_label(row.face)}: dimension {row.link_dimension}, betti ({betti})"


def check_report(P: Poset, config: RunConfig) -> Tuple[str, int, CmVerdict]:
    """Run every applicable check; exit code 1 flags disagreeing verdicts"""
    G = zero_divisor_graph(P)
    if not G.vertices:
        raise EmptyGraph("Γ(P) has no vertices; nothing to check")

    lines: List[str] = []
    problems: List[str] = []
    try:
        C = independence_complex(G, config.max_vertices)
    except SizeLimitExceeded:
        C = None
        skipped = f"skipped ({len(G.vertices)} vertices > cap {config.max_vertices})"
        lines.append(f"well-covered: {skipped}")
        lines.append(f"very-well-covered: {skipped}")
    else:
        well_covered = is_well_covered(C)
        lines.append(f"well-covered: {yes_no(well_covered)}")
        lines.append(f"very-well-covered: {yes_no(is_very_well_covered(C))}")

    verdict = is_cohen_macaulay(P, config.max_vertices, config.max_homology_vertices, config.max_search_nodes)
    lines.append(_my_line(verdict))
    if C is not None and verdict.certificate is not None and not is_well_covered(C):
        problems.append("certificate passed on a graph that is not well-covered")
    if C is not None and is_boolean(P) and not is_very_well_covered(C):
        problems.append("Boolean poset with a graph that is not very well-covered")

    if len(G.vertices) > config.max_homology_vertices:
        lines.append(f"CM(Reisner): skipped ({len(G.vertices)} vertices > cap {config.max_homology_vertices})")
    elif C is None:
        lines.append("CM(Reisner): skipped (facets not enumerated)")
    else:
        if config.verbose:
            reisner = reisner_cm(C, config.max_homology_vertices, verbose=True)
        else:
            reisner = verdict.reisner or reisner_cm(C, config.max_homology_vertices)
        if reisner.cm:
            lines.append("CM(Reisner): yes")
        else:
            face, dim = reisner.witness
            lines.append(f"CM(Reisner): no (witness {C.face_label(face)}, dimension {dim})")
        lines.extend(_face_row(C, row) for row in reisner.rows)
        if verdict.is_cm is not None and verdict.is_cm != reisner.cm:
            problems.append(f"MY verdict {verdict.verdict} disagrees with the Reisner criterion")

    for problem in problems:
        logger.error(f"Internal disagreement: {problem}")
        lines.append(f"disagreement: {problem}")
    return "\n".join(lines) + "\n", EXIT_CONTRACT if problems else EXIT_OK, verdict


def parse_sizes(text: str) -> List[Tuple[int, ...]]:
    """One comma-separated factor-size vector per line; '#' starts a comment"""
    vectors = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            vector = tuple(int(part) for part in line.split(","))
        except ValueError:
            raise PosetSyntaxError(f"malformed size vector {line!r}", lineno)
        if len(vector) < 2:
            raise PosetSyntaxError(f"size vector {line!r} needs at least 2 entries", lineno)
        if list(vector) != sorted(vector) or vector[0] < 2:
            raise PosetSyntaxError(f"size vector {line!r} must be ascending with entries >= 2", lineno)
        vectors.append(vector)
    if not vectors:
        raise TooFewFactors("sizes file holds no vectors")
    return vectors


def sweep_report(rows: Sequence[SweepRow]) -> str:
    return "\n".join([SWEEP_HEADER] + [row.to_tsv() for row in rows]) + "\n"
