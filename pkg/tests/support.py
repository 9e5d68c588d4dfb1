"""Independent oracles and helpers shared by the test modules.

The implementations here deliberately restate definitions from scratch
(plain scans, product enumeration) so they can cross-check the package's
optimized paths.
"""

from __future__ import annotations

import itertools

from pseudovis import CandidateSet, Polygon, VisGraph, validate_graph, validate_polygon
from pseudovis.blockers import all_candidates
from pseudovis.conditions import check_conditions, first_violation
from pseudovis.graph_core import interval_vertices, invisible_pairs


def cycle_graph(n: int, chords=()) -> VisGraph:
    return validate_graph(n, [[i, (i + 1) % n] for i in range(n)] + [list(c) for c in chords])


def complete_graph(n: int) -> VisGraph:
    return validate_graph(n, [[i, j] for i in range(n) for j in range(i + 1, n)])


def naive_candidates(g: VisGraph, pair) -> CandidateSet:
    """Literal definition scan, independent of the package implementation."""
    i, j = pair
    n = g.n

    def first_seen(walk):
        for v in walk:
            if g.visible(i, v):
                return v
        raise AssertionError("walk ended before a visible vertex")

    cw_walk = [(j - d) % n for d in range(1, n)]
    ccw_walk = [(j + d) % n for d in range(1, n)]
    k = first_seen(cw_walk)
    k2 = first_seen(ccw_walk)

    def clean(side_a, side_b):
        return not any(g.visible(s, t) for s in side_a for t in side_b)

    cw = k if clean(
        interval_vertices(n, i, (k - 1) % n), interval_vertices(n, (k + 1) % n, j)
    ) else None
    ccw = k2 if clean(
        interval_vertices(n, j, (k2 - 1) % n), interval_vertices(n, (k2 + 1) % n, i)
    ) else None
    return CandidateSet(cw, ccw)


def brute_force_accepts(g: VisGraph) -> bool:
    """Exhaustive verdict over all total candidate assignments.

    Small domain products are enumerated outright; larger ones use a
    depth-first product walk pruned only by the (separately tested)
    monotonicity of the condition checker.
    """
    cand = all_candidates(g)
    pairs = invisible_pairs(g)
    if any(cand[p].is_empty for p in pairs):
        return False
    total = 1
    for p in pairs:
        total *= len(cand[p].members())
    if total <= 4096:
        for values in itertools.product(*(cand[p].members() for p in pairs)):
            a = dict(zip(pairs, values))
            if not check_conditions(g, a, cand):
                return True
        return False

    def extend(idx: int, a: dict) -> bool:
        if first_violation(g, a, cand) is not None:
            return False
        if idx == len(pairs):
            return True
        p = pairs[idx]
        return any(extend(idx + 1, {**a, p: v}) for v in cand[p].members())

    return extend(0, {})


def reflect_polygon(p: Polygon) -> Polygon:
    """Mirror a polygon (negate x) and relabel so order stays counterclockwise.

    New vertex m is the mirror image of old vertex (-m mod n); vertex 0 is
    fixed.
    """
    n = p.n
    mirrored = [(-x, y) for (x, y) in p.vertices]
    return validate_polygon([mirrored[(-m) % n] for m in range(n)])


def reflect_index(n: int, i: int) -> int:
    return (-i) % n


def reflect_graph(g: VisGraph) -> VisGraph:
    n = g.n
    edges = []
    for i, j in g.edges:
        edges.append([reflect_index(n, i), reflect_index(n, j)])
    return validate_graph(n, edges)
