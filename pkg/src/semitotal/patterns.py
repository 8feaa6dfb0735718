"""Named forbidden-subgraph patterns and the textual pattern language.

A pattern expression is a '+'-separated sum of components, each an optional
integer multiplier followed by Pk / Ck / Kk or one of the named graphs
(claw, net, longpaw).  Example: "P3+2P2+K1".
"""

from __future__ import annotations

import re

from .errors import ParseError
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    star_graph,
)


def claw() -> Graph:
    return star_graph(4)


def net() -> Graph:
    """Triangle 0,1,2 with one pendant leaf on each triangle vertex."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def long_paw() -> Graph:
    """Triangle 0,1,2 with a path 2-3-4 attached."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])


_NAMED = {
    "claw": claw,
    "net": net,
    "longpaw": long_paw,
}

_TERM = re.compile(r"^(\d*)([PCK])(\d+)$")


def parse_pattern(text: str) -> Graph:
    """Build the disjoint union described by a pattern expression."""
    if not text or not text.strip():
        raise ParseError("empty pattern expression", offset=0)
    parts = []
    for raw in text.split("+"):
        tok = raw.strip()
        key = tok.lower().replace("-", "").replace("_", "")
        if key in _NAMED:
            parts.append(_NAMED[key]())
            continue
        m = _TERM.match(tok)
        if not m:
            raise ParseError(f"unrecognised pattern term {tok!r}")
        count = int(m.group(1)) if m.group(1) else 1
        kind, order = m.group(2), int(m.group(3))
        if count < 1:
            raise ParseError(f"multiplier must be positive in {tok!r}")
        if order < 1 or (kind == "C" and order < 3):
            raise ParseError(f"order out of range in {tok!r}")
        base = {"P": path_graph, "C": cycle_graph, "K": complete_graph}[kind]
        parts.extend(base(order) for _ in range(count))
    return disjoint_union(parts)
