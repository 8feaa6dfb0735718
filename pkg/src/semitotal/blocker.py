"""Contraction blockers for semitotal domination.

ct(g) is the least number of edge contractions that strictly lowers the
parameter.  For semitotal domination with value at least 3 it is always at
most 3; the value is pinned down by two structures found inside small
dominating sets: friendly triples (ct = 1) and the seven two-contraction
configurations O1..O7 (ct = 2), with a shortest-path contraction covering
the remainder (ct = 3).  Plain and total domination classifiers for the
same question are included for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb

from .errors import FloorError, Infeasible, ScaleLimit
from .graphs import (
    Graph,
    _bits,
    contains_subgraph,
    contract_edges,
    is_connected,
    normalize_edge,
    path_graph,
    star_graph,
)
from .patterns import parse_pattern
from .domination import (
    DominationKind,
    _Instance,
    _feasible_mask,
    _set_mask,
    enumerate_min_sets,
    exists_within,
    search_budget,
    solve,
    solve_by_enumeration,
)

_FLOOR = {
    DominationKind.DOMINATION: 1,
    DominationKind.TOTAL: 2,
    DominationKind.SEMITOTAL: 2,
}


def _exact_value(g: Graph, kind: DominationKind) -> int:
    # enumeration keeps this oracle independent of the branch-and-bound
    if g.n <= 12:
        return solve_by_enumeration(g, kind).value
    return solve(g, kind).value


@dataclass(frozen=True)
class ContractionCertificate:
    edges: tuple[tuple[int, int], ...]
    value_before: int
    value_after: int
    vertex_map: dict[int, int]


def ct_exact(
    g: Graph,
    kind: DominationKind,
    kmax: int = 3,
    *,
    budget: int | None = None,
) -> tuple[int, ContractionCertificate] | None:
    """Smallest k <= kmax whose k edge contractions lower the parameter.

    Scans edge subsets by size then lexicographic order, so the returned
    certificate is reproducible.  None when no k <= kmax works.
    """
    if not is_connected(g):
        raise Infeasible("ct_exact requires a connected graph")
    base = _exact_value(g, kind)
    if base <= _FLOOR[kind]:
        return None
    cap = budget or search_budget()
    edges = sorted(g.edges())
    visited = 0
    for k in range(1, kmax + 1):
        for combo in combinations(edges, k):
            visited += 1
            if visited > cap:
                raise ScaleLimit(f"ct_exact exceeded {cap} contractions")
            contracted, vmap = contract_edges(g, combo)
            if contracted.n < 2 and kind is not DominationKind.DOMINATION:
                continue
            if exists_within(contracted, kind, base - 1):
                after = _exact_value(contracted, kind)
                return k, ContractionCertificate(combo, base, after, vmap)
    return None


# -- friendly triples ----------------------------------------------------


def has_friendly_triple(g: Graph, d) -> tuple[int, int, int] | None:
    """First (x, y, z) in d with xy an edge and d(y, z) <= 2, in lex order.

    The middle role is asymmetric, so both orientations of each edge are
    tried.  Contracting xy inside a minimum semitotal dominating set d
    lowers the parameter.
    """
    members = sorted(set(d))
    inst = _Instance(g)
    for x in members:
        for y in members:
            if y == x or not g.rows[x] >> y & 1:
                continue
            near_y = inst.ball2open[y]
            for z in members:
                if z not in (x, y) and near_y >> z & 1:
                    return (x, y, z)
    return None


def min_sds_has_friendly_triple(
    g: Graph, *, budget: int | None = None
) -> tuple[frozenset[int], tuple[int, int, int]] | None:
    """First minimum semitotal dominating set carrying a friendly triple."""
    for d in enumerate_min_sets(g, DominationKind.SEMITOTAL, budget=budget):
        triple = has_friendly_triple(g, d)
        if triple is not None:
            return d, triple
    return None


# -- the seven two-contraction configurations ----------------------------


class STConfigId(Enum):
    O1 = "O1"
    O2 = "O2"
    O3 = "O3"
    O4 = "O4"
    O5 = "O5"
    O6 = "O6"
    O7 = "O7"


@dataclass(frozen=True)
class _ConfigSpec:
    roles: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]       # required edges, by role index
    dist2: tuple[tuple[int, int], ...]       # required distance exactly 2
    thick: tuple[tuple[int, int], tuple[int, int]]
    allow_equal: tuple[tuple[int, int], ...] = ()


# Solid lines are edges, dashed lines distance exactly two (in the whole
# graph), absent lines are unconstrained.  Thick pairs are the two edges
# whose contraction lowers the parameter.
CONFIG_SPECS: dict[STConfigId, _ConfigSpec] = {
    STConfigId.O1: _ConfigSpec(
        roles=("a", "b", "c", "d", "e", "f"),
        edges=((0, 1), (1, 2), (3, 4), (4, 5)),
        dist2=(),
        thick=((0, 1), (3, 4)),
    ),
    STConfigId.O2: _ConfigSpec(
        roles=("a", "b", "c", "d", "e", "f"),
        edges=((0, 1), (3, 4), (4, 5)),
        dist2=((1, 2),),
        thick=((0, 1), (3, 4)),
    ),
    STConfigId.O3: _ConfigSpec(
        roles=("a", "b", "c", "d", "e", "f"),
        edges=((0, 1), (3, 4)),
        dist2=((1, 2), (4, 5)),
        thick=((0, 1), (3, 4)),
        allow_equal=((2, 5),),
    ),
    STConfigId.O4: _ConfigSpec(
        roles=("x", "p", "q", "r"),
        edges=((0, 1), (0, 2), (0, 3)),
        dist2=(),
        thick=((0, 1), (0, 2)),
    ),
    STConfigId.O5: _ConfigSpec(
        roles=("a", "b", "c", "d"),
        edges=((0, 1), (1, 2)),
        dist2=((2, 3),),
        thick=((0, 1), (1, 2)),
    ),
    STConfigId.O6: _ConfigSpec(
        roles=("a", "b", "c", "d"),
        edges=((0, 1), (1, 3)),
        dist2=((1, 2),),
        thick=((0, 1), (1, 3)),
    ),
    STConfigId.O7: _ConfigSpec(
        roles=("a", "b", "c", "d"),
        edges=((0, 1), (2, 3)),
        dist2=((1, 2),),
        thick=((0, 1), (2, 3)),
    ),
}


@dataclass(frozen=True)
class ConfigMatch:
    config: STConfigId
    assignment: dict[str, int]
    thick_edges: tuple[tuple[int, int], tuple[int, int]]

    def vertices(self) -> tuple[int, ...]:
        return tuple(self.assignment[r] for r in CONFIG_SPECS[self.config].roles)


def _match_config(g: Graph, inst: _Instance, spec: _ConfigSpec, members: list[int]):
    d2 = tuple(inst.ball2open[v] & ~g.rows[v] for v in range(g.n))
    arity = len(spec.roles)
    assign: list[int] = []

    def ok(pos: int, v: int) -> bool:
        for i, u in enumerate(assign):
            if u == v and (i, pos) not in spec.allow_equal:
                return False
        for i, j in spec.edges:
            if j == pos and i < pos and not g.rows[assign[i]] >> v & 1:
                return False
            if i == pos and j < pos and not g.rows[assign[j]] >> v & 1:
                return False
        for i, j in spec.dist2:
            if j == pos and i < pos and not d2[assign[i]] >> v & 1:
                return False
            if i == pos and j < pos and not d2[assign[j]] >> v & 1:
                return False
        return True

    def extend(pos: int):
        if pos == arity:
            return tuple(assign)
        for v in members:
            if ok(pos, v):
                assign.append(v)
                hit = extend(pos + 1)
                if hit:
                    return hit
                assign.pop()
        return None

    return extend(0)


def match_st_configuration(g: Graph, s) -> ConfigMatch | None:
    """First configuration O1..O7 realised inside s, scanning ids in order.

    Role tuples are tried in lexicographic order over the sorted members of
    s; distances are measured in the whole graph, not in the subgraph
    induced by s.
    """
    members = sorted(set(s))
    inst = _Instance(g)
    for cid in STConfigId:
        spec = CONFIG_SPECS[cid]
        if len(members) < len(spec.roles) - len(spec.allow_equal):
            continue
        hit = _match_config(g, inst, spec, members)
        if hit:
            assignment = dict(zip(spec.roles, hit))
            thick = tuple(normalize_edge(hit[i], hit[j]) for i, j in spec.thick)
            return ConfigMatch(cid, assignment, (thick[0], thick[1]))
    return None


def exists_plus1_sds_with_config(
    g: Graph, *, budget: int | None = None
) -> tuple[frozenset[int], ConfigMatch] | None:
    """Search all semitotal dominating sets of size value+1 for a config."""
    value = _exact_value(g, DominationKind.SEMITOTAL)
    k = value + 1
    cap = budget or search_budget()
    if comb(g.n, k) > cap:
        raise ScaleLimit(f"C({g.n},{k}) exceeds the {cap} subset budget")
    inst = _Instance(g)
    for combo in combinations(range(g.n), k):
        if not _feasible_mask(inst, DominationKind.SEMITOTAL, _set_mask(combo)):
            continue
        hit = match_st_configuration(g, combo)
        if hit is not None:
            return frozenset(combo), hit
    return None


# -- shortest-path fallback certificate ----------------------------------


def _shortest_path(g: Graph, src: int, dst: int) -> list[int]:
    """One shortest src-dst path, smallest-id tie-breaks."""
    from .graphs import _bfs_dist

    dist = _bfs_dist(g.rows, g.n, dst)
    path = [src]
    cur = src
    while cur != dst:
        cur = min(w for w in _bits(g.rows[cur]) if dist[w] == dist[cur] - 1)
        path.append(cur)
    return path


def path_contraction_certificate(g: Graph, *, budget: int | None = None) -> ContractionCertificate:
    """Contract a shortest path between members of a minimum semitotal
    dominating set; at most three contractions always suffice.

    Recipe: take the lex-first minimum set d, the lex-first pair u < v in d
    at distance <= 2, then the member w closest to {u, v} (ties: smallest
    id) and contract a shortest path from w to the closer of u, v.
    """
    value = _exact_value(g, DominationKind.SEMITOTAL)
    if value < 3:
        raise FloorError(f"needs value >= 3, got {value}")
    d = sorted(enumerate_min_sets(g, DominationKind.SEMITOTAL, budget=budget)[0])
    inst = _Instance(g)
    pair = next(
        (u, v)
        for u, v in combinations(d, 2)
        if inst.ball2open[u] >> v & 1
    )
    u, v = pair
    from .graphs import _bfs_dist

    du = _bfs_dist(g.rows, g.n, u)
    dv = _bfs_dist(g.rows, g.n, v)
    w = min((x for x in d if x not in pair), key=lambda x: (min(du[x], dv[x]), x))
    target = u if du[w] <= dv[w] else v
    path = _shortest_path(g, w, target)
    edges = tuple(normalize_edge(a, b) for a, b in zip(path, path[1:]))
    contracted, vmap = contract_edges(g, edges)
    after = _exact_value(contracted, DominationKind.SEMITOTAL)
    return ContractionCertificate(edges, value, after, vmap)


# -- full characterisation ----------------------------------------------


class CtMechanism(Enum):
    FLOOR = "floor"
    FRIENDLY_TRIPLE = "friendly-triple"
    ST_CONFIGURATION = "st-configuration"
    PATH_CONTRACTION = "path-contraction"


@dataclass(frozen=True)
class CtVerdict:
    value: int
    k: int | None
    mechanism: CtMechanism
    sds: frozenset[int] | None = None
    triple: tuple[int, int, int] | None = None
    match: ConfigMatch | None = None
    certificate: ContractionCertificate | None = None


def characterize_ct(g: Graph, *, budget: int | None = None) -> CtVerdict:
    """Determine ct for semitotal domination together with its witness."""
    if not is_connected(g):
        raise Infeasible("characterize_ct requires a connected graph")
    value = _exact_value(g, DominationKind.SEMITOTAL)
    if value == 2:
        return CtVerdict(value, None, CtMechanism.FLOOR)
    hit1 = min_sds_has_friendly_triple(g, budget=budget)
    if hit1 is not None:
        d, triple = hit1
        return CtVerdict(value, 1, CtMechanism.FRIENDLY_TRIPLE, sds=d, triple=triple)
    hit2 = exists_plus1_sds_with_config(g, budget=budget)
    if hit2 is not None:
        s, match = hit2
        return CtVerdict(value, 2, CtMechanism.ST_CONFIGURATION, sds=s, match=match)
    cert = path_contraction_certificate(g, budget=budget)
    return CtVerdict(value, 3, CtMechanism.PATH_CONTRACTION, certificate=cert)


def validate_ct_verdict(g: Graph, verdict: CtVerdict) -> bool:
    """Re-check a verdict's evidence directly against the graph."""
    value = _exact_value(g, DominationKind.SEMITOTAL)
    if verdict.value != value:
        return False
    if verdict.mechanism is CtMechanism.FLOOR:
        return value == 2 and verdict.k is None
    if verdict.mechanism is CtMechanism.FRIENDLY_TRIPLE:
        if verdict.k != 1 or verdict.sds is None or verdict.triple is None:
            return False
        x, y, z = verdict.triple
        inst = _Instance(g)
        if not (
            len(verdict.sds) == value
            and _feasible_mask(inst, DominationKind.SEMITOTAL, _set_mask(verdict.sds))
            and {x, y, z} <= set(verdict.sds)
            and g.has_edge(x, y)
            and inst.ball2open[y] >> z & 1
        ):
            return False
        contracted, _ = contract_edges(g, [(x, y)])
        return _exact_value(contracted, DominationKind.SEMITOTAL) < value
    if verdict.mechanism is CtMechanism.ST_CONFIGURATION:
        if verdict.k != 2 or verdict.sds is None or verdict.match is None:
            return False
        inst = _Instance(g)
        if len(verdict.sds) != value + 1:
            return False
        if not _feasible_mask(inst, DominationKind.SEMITOTAL, _set_mask(verdict.sds)):
            return False
        if not _config_match_valid(g, inst, verdict.match, verdict.sds):
            return False
        contracted, _ = contract_edges(g, verdict.match.thick_edges)
        return _exact_value(contracted, DominationKind.SEMITOTAL) < value
    if verdict.mechanism is CtMechanism.PATH_CONTRACTION:
        cert = verdict.certificate
        if verdict.k != 3 or cert is None:
            return False
        if not 1 <= len(cert.edges) <= 3 or cert.value_before != value:
            return False
        contracted, _ = contract_edges(g, cert.edges)
        after = _exact_value(contracted, DominationKind.SEMITOTAL)
        return after == cert.value_after and after < value
    return False


def _config_match_valid(g: Graph, inst: _Instance, match: ConfigMatch, s) -> bool:
    spec = CONFIG_SPECS[match.config]
    try:
        hit = tuple(match.assignment[r] for r in spec.roles)
    except KeyError:
        return False
    if not set(hit) <= set(s):
        return False
    for i, u in enumerate(hit):
        for j in range(i + 1, len(hit)):
            if hit[j] == u and (i, j) not in spec.allow_equal:
                return False
    d2 = tuple(inst.ball2open[v] & ~g.rows[v] for v in range(g.n))
    for i, j in spec.edges:
        if not g.has_edge(hit[i], hit[j]):
            return False
    for i, j in spec.dist2:
        if not d2[hit[i]] >> hit[j] & 1:
            return False
    thick = tuple(normalize_edge(hit[i], hit[j]) for i, j in spec.thick)
    return thick == tuple(match.thick_edges)


# -- prior classifications for plain and total domination ---------------


def classify_ct_domination(g: Graph, *, budget: int | None = None) -> int:
    """1, 2 or 3 contractions needed to lower plain domination."""
    value = _exact_value(g, DominationKind.DOMINATION)
    if value < 2:
        raise FloorError("plain domination at its floor cannot decrease")
    for d in enumerate_min_sets(g, DominationKind.DOMINATION, budget=budget):
        dmask = _set_mask(d)
        if any(g.rows[v] & dmask for v in d):
            return 1
    inst = _Instance(g)
    cap = budget or search_budget()
    if comb(g.n, value + 1) > cap:
        raise ScaleLimit("too many candidate sets")
    for combo in combinations(range(g.n), value + 1):
        dmask = _set_mask(combo)
        if not _feasible_mask(inst, DominationKind.DOMINATION, dmask):
            continue
        internal = sum((g.rows[v] & dmask).bit_count() for v in combo) // 2
        if internal >= 2:
            return 2
    return 3


_P4 = path_graph(4)
_CLAW = star_graph(4)
_2P3 = parse_pattern("2P3")


def classify_ct_total(g: Graph, *, budget: int | None = None) -> int:
    """1, 2 or 3 contractions needed to lower total domination."""
    value = _exact_value(g, DominationKind.TOTAL)
    if value < 3:
        raise FloorError("total domination below 3 cannot decrease")
    for d in enumerate_min_sets(g, DominationKind.TOTAL, budget=budget):
        dmask = _set_mask(d)
        if any((g.rows[v] & dmask).bit_count() >= 2 for v in d):
            return 1  # a path on 3 vertices inside the set
    inst = _Instance(g)
    cap = budget or search_budget()
    if comb(g.n, value + 1) > cap:
        raise ScaleLimit("too many candidate sets")
    for combo in combinations(range(g.n), value + 1):
        dmask = _set_mask(combo)
        if not _feasible_mask(inst, DominationKind.TOTAL, dmask):
            continue
        if any(
            contains_subgraph(g, pat, within=combo) is not None
            for pat in (_P4, _CLAW, _2P3)
        ):
            return 2
    return 3


def p4_forces_config(g: Graph, d) -> bool:
    """Any semitotal dominating set with a P4 subgraph carries O4 or O6.

    Vacuously true when d has no P4; otherwise checks the matcher finds one
    of the two hub configurations inside d.
    """
    if contains_subgraph(g, _P4, within=d) is None:
        return True
    members = sorted(set(d))
    inst = _Instance(g)
    for cid in (STConfigId.O4, STConfigId.O6):
        if _match_config(g, inst, CONFIG_SPECS[cid], members):
            return True
    return False
