"""Core data model: cyclically indexed graphs with a labeled boundary cycle.

Vertices are 0..n-1 in counterclockwise order around the boundary cycle;
all index arithmetic is modulo n.  "Clockwise" means decreasing index,
"counterclockwise" means increasing index.  Boundary edge e_m joins
vertices m and m+1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import IndexOutOfRange, MissingCycleEdge, SelfLoop

Pair = tuple[int, int]


def ccw_dist(n: int, a: int, b: int) -> int:
    """Number of counterclockwise steps from a to b."""
    return (b - a) % n


def in_interval(n: int, a: int, b: int, x: int) -> bool:
    """True iff x lies on the inclusive counterclockwise walk from a to b."""
    return ccw_dist(n, a, x) <= ccw_dist(n, a, b)


def strictly_inside(n: int, a: int, b: int, x: int) -> bool:
    """True iff x lies on the walk from a to b excluding both endpoints."""
    return 0 < ccw_dist(n, a, x) < ccw_dist(n, a, b)


def interval_vertices(n: int, i: int, j: int) -> list[int]:
    """Vertices of the inclusive counterclockwise walk from i to j.

    The degenerate walk from i to itself contains just i.
    """
    return [(i + d) % n for d in range(ccw_dist(n, i, j) + 1)]


def interval_edges(n: int, i: int, j: int) -> list[int]:
    """Boundary-edge indices of the counterclockwise walk from i to j.

    Edge m joins vertices m and m+1; the walk from i to itself has no edges.
    """
    return [(i + d) % n for d in range(ccw_dist(n, i, j))]


@dataclass(frozen=True)
class VisGraph:
    """Graph on cycle-labeled vertices with a symmetric visibility relation.

    ``edges`` holds normalized (i < j) visible pairs and always contains
    every cycle edge.  Instances are immutable and hashable.
    """

    n: int
    edges: frozenset[Pair]

    def visible(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return ((i, j) if i < j else (j, i)) in self.edges


@dataclass(frozen=True)
class BoundaryInterval:
    """Inclusive counterclockwise walk from start to end."""

    start: int
    end: int


def validate_graph(n: int, pairs: Iterable[Iterable[int]]) -> VisGraph:
    """Build a VisGraph from an unordered pair list, enforcing the invariants.

    The relation is the symmetric closure of the input; duplicates are
    ignored.  Every cycle edge {i, i+1 mod n} must be listed explicitly.
    """
    if n < 3:
        raise IndexOutOfRange(f"vertex count must be at least 3, got {n}")
    edges = set()
    for pair in pairs:
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"pair ({i},{j}) outside [0,{n})")
        if i == j:
            raise SelfLoop(f"pair ({i},{j})")
        edges.add((i, j) if i < j else (j, i))
    for i in range(n):
        j = (i + 1) % n
        if ((i, j) if i < j else (j, i)) not in edges:
            raise MissingCycleEdge(f"cycle edge {{{i},{j}}} missing")
    return VisGraph(n, frozenset(edges))


def invisible_pairs(g: VisGraph) -> list[Pair]:
    """All ordered non-visible pairs, lexicographic."""
    return [
        (i, j)
        for i in range(g.n)
        for j in range(g.n)
        if i != j and not g.visible(i, j)
    ]


def graph_to_json(g: VisGraph) -> str:
    obj = {"n": g.n, "edges": sorted(list(e) for e in g.edges)}
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def graph_from_json(text: str) -> VisGraph:
    obj = json.loads(text)
    return validate_graph(int(obj["n"]), obj["edges"])
