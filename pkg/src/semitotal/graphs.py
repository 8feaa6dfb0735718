"""Immutable simple graphs on vertex ids 0..n-1 with bitmask adjacency.

Adjacency is stored as one Python int per vertex (bit v of row u set iff
uv is an edge), which keeps neighbourhood algebra cheap for the solvers.
All operations return fresh Graph values; nothing here mutates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import inf

from .errors import GenerationFailed, InvalidEdge, ParseError, PatternTooLarge

MAX_PATTERN_ORDER = 12


def _bits(mask: int):
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; vertices are always 0..n-1."""

    n: int
    rows: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        if n < 0:
            raise InvalidEdge(f"vertex count must be non-negative, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidEdge(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidEdge(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    # -- basic queries ---------------------------------------------------

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            out.extend((u, v) for v in _bits(self.rows[u] >> (u + 1) << (u + 1)))
        return out

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.rows[v]))

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- traversal and distances ---------------------------------------------


def _bfs_dist(rows: tuple[int, ...], n: int, source: int) -> list[float]:
    dist = [inf] * n
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        for v in _bits(frontier):
            dist[v] = d
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return dist


def all_pairs_distances(g: Graph) -> list[list[float]]:
    """Distance matrix; unreachable pairs are math.inf."""
    return [_bfs_dist(g.rows, g.n, s) for s in range(g.n)]


def distance(g: Graph, u: int, v: int) -> float:
    return _bfs_dist(g.rows, g.n, u)[v]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask()

def components(g: Graph) -> list[frozenset[int]]:
    """Connected components as vertex sets, ordered by smallest member."""
    todo = g.full_mask()
    out = []
    while todo:
        start = (todo & -todo).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(frozenset(_bits(seen)))
        todo &= ~seen
    return out


# -- derived graphs ------------------------------------------------------


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on the given vertices, relabelled by sorted order.

    Returns the subgraph and the old-id -> new-id map.
    """
    vs = sorted(set(vertices))
    if any(v < 0 or v >= g.n for v in vs):
        raise InvalidEdge("induced_subgraph: vertex out of range")
    remap = {v: i for i, v in enumerate(vs)}
    rows = [0] * len(vs)
    for v in vs:
        for w in _bits(g.rows[v]):
            if w in remap:
                rows[remap[v]] |= 1 << remap[w]
    return Graph(len(vs), tuple(rows)), remap


def relabel(g: Graph, perm: dict[int, int] | list[int]) -> Graph:
    """Apply a vertex permutation (old id -> new id)."""
    if isinstance(perm, list):
        perm = {i: p for i, p in enumerate(perm)}
    rows = [0] * g.n
    for u, v in g.edges():
        rows[perm[u]] |= 1 << perm[v]
        rows[perm[v]] |= 1 << perm[u]
    return Graph(g.n, tuple(rows))


def contract_edges(g: Graph, edges) -> tuple[Graph, dict[int, int]]:
    """Contract a set of edges simultaneously (partition semantics).

    Endpoint-sharing edges merge transitively into one vertex per connected
    component of the selected edge set.  Each merged vertex inherits the
    smallest old id in its component; survivors are then compacted to
    0..n'-1 preserving old-id order.  Returns the contracted graph and the
    total old-id -> new-id map.
    """
    edge_list = [normalize_edge(u, v) for u, v in edges]
    if not edge_list:
        raise InvalidEdge("contract_edges: need at least one edge")
    for u, v in edge_list:
        if not g.has_edge(u, v):
            raise InvalidEdge(f"contract_edges: ({u},{v}) is not an edge")

    # union-find keeping the smallest id as the root of each class
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edge_list:
        ru, rv = find(u), find(v)
        if ru != rv:
            if ru > rv:
                ru, rv = rv, ru
            parent[rv] = ru

    survivors = sorted({find(v) for v in range(g.n)})
    rank = {r: i for i, r in enumerate(survivors)}
    vertex_map = {v: rank[find(v)] for v in range(g.n)}

    rows = [0] * len(survivors)
    for u, v in g.edges():
        a, b = vertex_map[u], vertex_map[v]
        if a != b:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    return Graph(len(survivors), tuple(rows)), vertex_map


def disjoint_union(graphs) -> Graph:
    """Disjoint union; vertex ids of later graphs are shifted up."""
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph(offset, tuple(rows))


# -- generators ----------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidEdge(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: centre 0 plus n-1 leaves."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) conditioned on connectivity, deterministic in seed."""
    if not 0 < p <= 1:
        raise GenerationFailed(f"edge probability must be in (0, 1], got {p}")
    rng = random.Random(seed)
    for _ in range(1000):
        g = Graph.from_edges(
            n,
            [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if rng.random() < p
            ],
        )
        if is_connected(g):
            return g
    raise GenerationFailed(f"no connected sample for n={n}, p={p} after 1000 tries")


# -- induced / subgraph pattern search -----------------------------------


def _pattern_order(h: Graph) -> list[int]:
    """Vertex order that keeps each prefix as connected as possible."""
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < h.n:
        best = None
        key = None
        for v in range(h.n):
            if v in placed:
                continue
            k = (sum(1 for w in _bits(h.rows[v]) if w in placed), h.degree(v), -v)
            if key is None or k > key:
                key = k
                best = v
        order.append(best)
        placed.add(best)
    return order


def _match(g: Graph, h: Graph, induced: bool, within: int) -> dict[int, int] | None:
    if h.n > MAX_PATTERN_ORDER:
        raise PatternTooLarge(f"pattern has {h.n} vertices, limit {MAX_PATTERN_ORDER}")
    if h.n > within.bit_count():
        return None
    order = _pattern_order(h)
    assign: dict[int, int] = {}
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        p = order[i]
        cand = within & ~used
        for q in _bits(h.rows[p]):
            if q in assign:
                cand &= g.rows[assign[q]]
        for host in _bits(cand):
            if induced:
                ok = all(
                    (h.rows[p] >> q & 1) == (g.rows[host] >> assign[q] & 1)
                    for q in assign
                )
            else:
                ok = True  # edge constraints already folded into cand
            if ok:
                assign[p] = host
                used |= 1 << host
                if extend(i + 1):
                    return True
                del assign[p]
                used ^= 1 << host
        return False

    if extend(0):
        return dict(sorted(assign.items()))
    return None


def contains_induced(g: Graph, h: Graph, within=None) -> dict[int, int] | None:
    """First induced copy of h in g as a pattern-id -> host-id map, else None.

    `within` optionally restricts host vertices to a subset of V(g).
    """
    mask = g.full_mask() if within is None else sum(1 << v for v in set(within))
    return _match(g, h, induced=True, within=mask)


def contains_subgraph(g: Graph, h: Graph, within=None) -> dict[int, int] | None:
    """Like contains_induced but only requires h's edges to be present."""
    mask = g.full_mask() if within is None else sum(1 << v for v in set(within))
    return _match(g, h, induced=False, within=mask)


# -- class predicates ----------------------------------------------------


@dataclass(frozen=True)
class ClassPredicates:
    connected: bool
    tree: bool
    bipartite: bool
    chordal: bool
    girth: float


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in _bits(g.rows[v]):
                if colour[w] == -1:
                    colour[w] = colour[v] ^ 1
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search followed by the elimination-order check."""
    n = g.n
    if n == 0:
        return True
    weight = [0] * n
    number = [-1] * n  # position in MCS order, n-1 first
    for pos in range(n - 1, -1, -1):
        v = max(
            (x for x in range(n) if number[x] == -1),
            key=lambda x: (weight[x], -x),
        )
        number[v] = pos
        for w in _bits(g.rows[v]):
            if number[w] == -1:
                weight[w] += 1
    for v in range(n):
        later = [w for w in _bits(g.rows[v]) if number[w] > number[v]]
        if not later:
            continue
        u = min(later, key=lambda w: number[w])
        for w in later:
            if w != u and not g.has_edge(u, w):
                return False
    return True


def girth(g: Graph) -> float:
    """Length of a shortest cycle, math.inf on forests."""
    best = inf
    for src in range(g.n):
        dist = [inf] * g.n
        par = [-1] * g.n
        dist[src] = 0
        frontier = [src]
        while frontier:
            nxt = []
            for v in frontier:
                for w in _bits(g.rows[v]):
                    if dist[w] is inf:
                        dist[w] = dist[v] + 1
                        par[w] = v
                        nxt.append(w)
            frontier = nxt
        for u, v in g.edges():
            if dist[u] is not inf and dist[v] is not inf:
                if par[u] != v and par[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def class_predicates(g: Graph) -> ClassPredicates:
    return ClassPredicates(
        connected=is_connected(g),
        tree=is_tree(g),
        bipartite=is_bipartite(g),
        chordal=is_chordal(g),
        girth=girth(g),
    )


# -- graph6 --------------------------------------------------------------

_G6_MAX = 258047


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= _G6_MAX:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    else:
        raise ParseError(f"graph6 encoding supports at most {_G6_MAX} vertices")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.rows[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [
        chr((bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3
             | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]) + 63)
        for k in range(0, len(bits), 6)
    ]
    return head + "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise ParseError("empty graph6 string", offset=0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 byte {ch!r}", offset=i)
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise ParseError("graph6 order above 258047 not supported", offset=0)
        if len(s) < 4:
            raise ParseError("truncated graph6 size block", offset=len(s))
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
        body_off = 4
    else:
        n = ord(s[0]) - 63
        body = s[1:]
        body_off = 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ParseError(
            f"graph6 body for n={n} needs {need} chars, got {len(body)}",
            offset=body_off + min(len(body), need),
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend(val >> s6 & 1 for s6 in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise ParseError("nonzero graph6 padding bits", offset=len(s) - 1)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# -- edge-list text format ----------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Read "n m" followed by m lines "u v" (0-based, one edge each)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty edge-list input", offset=0)
    head = lines[0].split()
    if len(head) != 2 or not all(t.lstrip("-").isdigit() for t in head):
        raise ParseError(f"bad header {lines[0]!r}", offset=0)
    n, m = int(head[0]), int(head[1])
    if n < 0 or m < 0:
        raise ParseError(f"negative counts in header {lines[0]!r}", offset=0)
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, got {len(lines) - 1}")
    seen = set()
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(t.lstrip("-").isdigit() for t in parts):
            raise ParseError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"invalid edge {u} {v} for n={n}")
        e = normalize_edge(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge {u} {v}")
        seen.add(e)
        edges.append(e)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
