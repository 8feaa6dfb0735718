"""Forbidden-pattern dichotomy for the one-contraction question.

classify_h maps a forbidden pattern to the complexity of deciding whether a
single edge contraction lowers the semitotal domination number of graphs
avoiding it.  The two tractable families come with working deciders:
ec1_gt2_p5free for connected P5-free inputs, and ec1_gt2_p3kp2free for
connected P3+kP2-free inputs, the latter built on distance layers around an
induced P3+(k-1)P2 anchor.  poly_dispatch routes an (h-free graph, tractable
pattern) pair to the decider that applies after stripping isolated pattern
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb

from .errors import Infeasible, PreconditionViolated, ScaleLimit
from .graphs import (
    Graph,
    _bits,
    all_pairs_distances,
    components,
    contains_induced,
    disjoint_union,
    induced_subgraph,
    is_connected,
    path_graph,
)
from .domination import (
    DominationKind,
    _Instance,
    _feasible_mask,
    _set_mask,
    enumerate_min_sets,
    exists_within,
    search_budget,
    solve,
)
from .blocker import min_sds_has_friendly_triple


class HVerdict(Enum):
    POLYNOMIAL = "polynomial-time"
    NP_HARD = "NP-hard"
    CONP_HARD = "coNP-hard"


@dataclass(frozen=True)
class HClassification:
    verdict: HVerdict
    reason: str
    t: int | None = None
    p: int | None = None


def is_h_free(g: Graph, h: Graph) -> bool:
    """True iff g holds no induced copy of h."""
    return contains_induced(g, h) is None


def classify_h(h: Graph) -> HClassification:
    """Complexity of the one-contraction question restricted to h-free graphs.

    The decision tree needs no input validation: a cycle or a degree-3
    vertex is detected before the linear-forest cases apply.  For the two
    tractable shapes the counts of single-vertex (t) and two-vertex (p)
    components are reported alongside the verdict.
    """
    comps = components(h)
    if h.m > h.n - len(comps):
        return HClassification(HVerdict.NP_HARD, "Thm-girth")
    if any(h.degree(v) >= 3 for v in range(h.n)):
        return HClassification(HVerdict.CONP_HARD, "Thm-claw")
    # past this point every component is a path
    sizes = sorted((len(c) for c in comps), reverse=True)
    longest = sizes[0] if sizes else 0
    if longest >= 6:
        return HClassification(HVerdict.NP_HARD, "Thm-P6/P4+P2")
    if longest in (4, 5):
        if len(sizes) > 1 and sizes[1] >= 2:
            return HClassification(HVerdict.NP_HARD, "Thm-P6/P4+P2")
        return HClassification(HVerdict.POLYNOMIAL, "Thm-P5+tK1", t=sizes.count(1))
    if longest == 3 and sizes.count(3) >= 2:
        return HClassification(HVerdict.CONP_HARD, "Thm-2P3")
    return HClassification(
        HVerdict.POLYNOMIAL, "Thm-P3+pP2+tK1", t=sizes.count(1), p=sizes.count(2)
    )


_P5 = path_graph(5)


def _sds_pair_exists(g: Graph) -> bool:
    """Polynomial scan for a two-vertex semitotal dominating set."""
    inst = _Instance(g)
    return any(
        _feasible_mask(inst, DominationKind.SEMITOTAL, (1 << u) | (1 << v))
        for u, v in combinations(range(g.n), 2)
    )


def ec1_gt2_p5free(g: Graph) -> bool:
    """One contraction lowers the semitotal value of a connected P5-free graph.

    With the value at 2 nothing can decrease, and a value of at least 3 in
    this class always admits a lowering contraction, so the pair scan alone
    settles the answer.
    """
    if not is_connected(g) or not is_h_free(g, _P5):
        raise PreconditionViolated("expects a connected P5-free graph")
    if g.n < 2:
        raise Infeasible("semitotal domination needs at least two vertices")
    return not _sds_pair_exists(g)


def _p3_plus(p: int) -> Graph:
    return disjoint_union([path_graph(3)] + [path_graph(2)] * p)


def find_A(g: Graph, k: int) -> frozenset[int] | None:
    """Lexicographically first vertex set inducing a P3 plus k-1 disjoint edges."""
    if k < 1:
        raise PreconditionViolated("k must be at least 1")
    pattern = _p3_plus(k - 1)
    if pattern.n > g.n:
        return None
    for combo in combinations(range(g.n), pattern.n):
        if contains_induced(g, pattern, within=combo) is not None:
            return frozenset(combo)
    return None


@dataclass(frozen=True)
class ABCPartition:
    """Distance layers around the anchor: adjacent (B), at two (C), regular (R)."""

    A: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]
    R: frozenset[int]


def regular_vertices(g: Graph, part: ABCPartition, k: int) -> frozenset[int]:
    """Far-layer vertices in a group of k+1, pairwise at distance >= 4, all
    of whose neighbourhoods are cliques."""
    eligible = [
        v
        for v in sorted(part.C)
        if all(
            g.has_edge(x, y)
            for x, y in combinations(sorted(_bits(g.rows[v])), 2)
        )
    ]
    if len(eligible) < k + 1:
        return frozenset()
    cap = search_budget()
    if comb(len(eligible), k + 1) > cap:
        raise ScaleLimit(f"C({len(eligible)},{k + 1}) groups exceed the {cap} budget")
    dist = all_pairs_distances(g)
    regular: set[int] = set()
    for group in combinations(eligible, k + 1):
        if all(dist[x][y] >= 4 for x, y in combinations(group, 2)):
            regular.update(group)
    return frozenset(regular)


def abc_partition(g: Graph, anchor, k: int) -> ABCPartition:
    """Layer the graph around an induced P3+(k-1)P2 anchor set.

    In a connected P3+kP2-free graph every vertex sits within distance two
    of the anchor and the far layer is independent; both facts are enforced
    rather than assumed.
    """
    amask = _set_mask(anchor)
    bmask = 0
    for v in _bits(amask):
        bmask |= g.rows[v]
    bmask &= ~amask
    cmask = 0
    for v in _bits(bmask):
        cmask |= g.rows[v]
    cmask &= ~(amask | bmask)
    if amask | bmask | cmask != g.full_mask():
        raise PreconditionViolated("anchor does not reach every vertex in two steps")
    if any(g.rows[v] & cmask for v in _bits(cmask)):
        raise PreconditionViolated("far layer is not independent")
    part = ABCPartition(
        frozenset(_bits(amask)),
        frozenset(_bits(bmask)),
        frozenset(_bits(cmask)),
        frozenset(),
    )
    return ABCPartition(part.A, part.B, part.C, regular_vertices(g, part, k))


def sds_size_threshold(k: int, a: int) -> int:
    """Largest semitotal value compatible with a negative answer when no
    far-layer vertex is regular; a is the anchor size."""
    return (k + 1) * (a + 2) + k * (1 + 2 * (k + 1)) + 5 * a - 4


def _min_ds_has_edge(g: Graph, *, budget: int | None = None) -> bool:
    """One contraction lowers plain domination iff some minimum dominating
    set spans an edge."""
    for d in enumerate_min_sets(g, DominationKind.DOMINATION, budget=budget):
        dmask = _set_mask(d)
        if any(g.rows[v] & dmask for v in d):
            return True
    return False


def ec1_gt2_p3kp2free(g: Graph, k: int, *, budget: int | None = None) -> bool:
    """One contraction lowers the semitotal value of a connected P3+kP2-free
    graph.

    A regular far-layer vertex forces the semitotal and plain domination
    questions to coincide; otherwise a value above sds_size_threshold
    already guarantees a yes, and below it the minimum sets are few enough
    to scan directly for a friendly triple.
    """
    if k < 1:
        raise PreconditionViolated("k must be at least 1")
    if not is_connected(g) or not is_h_free(g, _p3_plus(k)):
        raise PreconditionViolated("expects a connected P3+kP2-free graph")
    if g.n < 2:
        raise Infeasible("semitotal domination needs at least two vertices")
    # value 2 is the floor; no contraction can help
    if _sds_pair_exists(g):
        return False
    while k >= 1:
        anchor = find_A(g, k)
        if anchor is not None:
            break
        k -= 1
    else:
        # no induced P3 and connected means a clique
        return False
    part = abc_partition(g, anchor, k)
    if part.R:
        return _min_ds_has_edge(g, budget=budget)
    bound = sds_size_threshold(k, len(anchor))
    if not exists_within(g, DominationKind.SEMITOTAL, bound, budget=budget):
        return True
    return min_sds_has_friendly_triple(g, budget=budget) is not None


def _decide_bounded(g: Graph, q: int, *, budget: int | None = None) -> bool:
    """Exact answer once the semitotal value is known to be at most q."""
    result = solve(g, DominationKind.SEMITOTAL, budget=budget)
    if result.value > q:
        raise PreconditionViolated(
            f"semitotal value {result.value} exceeds the containment bound {q}"
        )
    if result.value == 2:
        return False
    return min_sds_has_friendly_triple(g, budget=budget) is not None


def poly_dispatch(g: Graph, h: Graph, *, budget: int | None = None) -> bool:
    """Decide the one-contraction question for an h-free graph with h in a
    tractable family.

    Isolated pattern vertices are stripped one at a time: either g avoids
    the trimmed pattern too and recursion continues, or g holds a copy
    whose vertex set must dominate g, capping the semitotal value at twice
    the copy's order and reducing the question to a bounded search.  Bare
    path patterns delegate to the matching decider.
    """
    tag = classify_h(h)
    if tag.verdict is not HVerdict.POLYNOMIAL:
        raise PreconditionViolated("pattern is outside the tractable families")
    if not is_h_free(g, h):
        raise PreconditionViolated("input graph is not h-free")
    if not is_connected(g):
        raise PreconditionViolated("expects a connected graph")
    isolated = [v for v in range(h.n) if h.degree(v) == 0]
    if isolated:
        kept = [v for v in range(h.n) if v != isolated[-1]]
        trimmed, _ = induced_subgraph(h, kept)
        if is_h_free(g, trimmed):
            return poly_dispatch(g, trimmed, budget=budget)
        return _decide_bounded(g, 2 * trimmed.n, budget=budget)
    sizes = sorted((len(c) for c in components(h)), reverse=True)
    if sizes[0] >= 4:
        return ec1_gt2_p5free(g)
    if sizes[0] == 3:
        return ec1_gt2_p3kp2free(g, max(sizes.count(2), 1), budget=budget)
    return ec1_gt2_p3kp2free(g, max(len(sizes) - 1, 1), budget=budget)
