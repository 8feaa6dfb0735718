"""Slow reference implementations used to pin expected values.

Everything here is written against plain (order, edge list) data and
rebuilds its own adjacency dicts, deliberately sharing no code with the
bitmask solvers under test.
"""

from itertools import combinations, permutations


def edge_data(g):
    return g.n, g.edges()


def adjacency(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def bfs_distances(adj, src):
    dist = {src: 0}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def ok_dominating(adj, d):
    return all(v in d or adj[v] & d for v in adj)


def ok_total(adj, d):
    return ok_dominating(adj, d) and all(adj[v] & d for v in d)


def ok_semitotal(adj, d):
    if not ok_dominating(adj, d):
        return False
    for v in d:
        ball = set(adj[v])
        for u in adj[v]:
            ball |= adj[u]
        if not (ball & d) - {v}:
            return False
    return True


CHECKS = {
    "domination": ok_dominating,
    "total": ok_total,
    "semitotal": ok_semitotal,
}


def brute_value(n, edges, kind):
    """Smallest feasible size by raw subset enumeration, None if none."""
    adj = adjacency(n, edges)
    check = CHECKS[kind]
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            if check(adj, set(combo)):
                return size
    return None


def brute_min_sets(n, edges, kind):
    adj = adjacency(n, edges)
    check = CHECKS[kind]
    for size in range(1, n + 1):
        found = [
            frozenset(c) for c in combinations(range(n), size) if check(adj, set(c))
        ]
        if found:
            return found
    return []


def contract(n, edges, chosen):
    """Quotient by the classes the chosen edges connect, smallest-member
    relabelling, parallel edges and loops dropped."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in chosen:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    roots = sorted({find(v) for v in range(n)})
    index = {r: i for i, r in enumerate(roots)}
    quotient = set()
    for u, v in edges:
        a, b = index[find(u)], index[find(v)]
        if a != b:
            quotient.add((min(a, b), max(a, b)))
    return len(roots), sorted(quotient)


def brute_ct(n, edges, kind, kmax=3):
    """Fewest contracted edges strictly lowering the value, None if no
    subset of size <= kmax works (covers the floor cases naturally)."""
    base = brute_value(n, edges, kind)
    for k in range(1, kmax + 1):
        for subset in combinations(edges, k):
            qn, qe = contract(n, edges, subset)
            after = brute_value(qn, qe, kind)
            if after is not None and after < base:
                return k
    return None


def brute_induced(gn, gedges, hn, hedges):
    """Induced-subgraph test by trying every injection."""
    gset = {frozenset(e) for e in gedges}
    hset = {frozenset(e) for e in hedges}
    for combo in combinations(range(gn), hn):
        for perm in permutations(combo):
            if all(
                (frozenset((perm[a], perm[b])) in gset)
                == (frozenset((a, b)) in hset)
                for a in range(hn)
                for b in range(a + 1, hn)
            ):
                return True
    return False


def g6_decode(text):
    """Minimal graph6 reader for orders below 63."""
    data = [ord(c) - 63 for c in text.strip()]
    if not data or not 0 <= data[0] < 63:
        raise ValueError("oracle decoder only handles short form")
    n = data[0]
    bits = []
    for val in data[1:]:
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return n, edges
