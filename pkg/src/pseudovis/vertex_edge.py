"""Vertex-edge visibility implied by a blocker assignment, and the
characterization check for such relations.

A vertex always sees its two incident boundary edges.  For any other
edge, visibility fails exactly when some assignment entry of that viewer
puts its blocker on one side of the edge and its target on the other:
one of them on the arc from the viewer forward to the edge's near
endpoint, the other on the arc from the edge's far endpoint back to the
viewer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .blockers import Assignment, CandidateSet, all_candidates
from .errors import InvalidAssignment, VertexOutsideInterval
from .graph_core import (
    BoundaryInterval,
    Pair,
    VisGraph,
    ccw_dist,
    in_interval,
    interval_edges,
    interval_vertices,
    strictly_inside,
)


@dataclass(frozen=True)
class VEGraph:
    """Boolean vertex-sees-edge relation; rows[i] holds the edge indices
    vertex i sees."""

    n: int
    rows: tuple[frozenset[int], ...]

    def sees(self, i: int, m: int) -> bool:
        return m in self.rows[i]

    def row(self, i: int) -> frozenset[int]:
        return self.rows[i]


@dataclass(frozen=True)
class CharacterizationFailure:
    vertex: int
    edge_before: int
    edge_after: int
    branch_near: bool
    branch_far: bool


def build_ve(g: VisGraph, a: Assignment, check: bool = True) -> VEGraph:
    """Vertex-edge relation determined by (graph, assignment).

    With check=True the assignment must verify (total, candidate-drawn,
    NC-clean); InvalidAssignment otherwise.
    """
    if check:
        from .recognizer import verify

        report = verify(g, a)
        if not report.ok:
            raise InvalidAssignment(
                "; ".join(report.problems)
                or "; ".join(v.narrative for v in report.violations)
            )
    n = g.n
    by_viewer: dict[int, list[tuple[int, int]]] = {i: [] for i in range(n)}
    for (i, t), b in a.items():
        by_viewer[i].append((t, b))
    rows = []
    for i in range(n):
        row = set()
        for m in range(n):
            if m == i or m == (i - 1) % n:
                row.add(m)  # incident edges are always seen
                continue
            blocked = False
            for t, b in by_viewer[i]:
                near_b = in_interval(n, (i + 1) % n, m, b)
                far_b = in_interval(n, (m + 1) % n, (i - 1) % n, b)
                near_t = in_interval(n, (i + 1) % n, m, t)
                far_t = in_interval(n, (m + 1) % n, (i - 1) % n, t)
                if (near_b and far_t) or (far_b and near_t):
                    blocked = True
                    break
            if not blocked:
                row.add(m)
        rows.append(frozenset(row))
    return VEGraph(n, tuple(rows))


def is_articulation(
    g: VisGraph,
    candidates: dict[Pair, CandidateSet],
    interval: BoundaryInterval,
    v: int,
) -> bool:
    """True iff v is a candidate blocker for some invisible pair that
    straddles it within the interval (viewer before v, target after)."""
    n = g.n
    if not strictly_inside(n, interval.start, interval.end, v):
        raise VertexOutsideInterval(
            f"p{v} is not strictly inside the walk {interval.start}..{interval.end}"
        )
    for s in interval_vertices(n, interval.start, (v - 1) % n):
        for t in interval_vertices(n, (v + 1) % n, interval.end):
            if s == t or g.visible(s, t):
                continue
            cs = candidates.get((s, t))
            if cs is not None and cs.contains(v):
                return True
    return False


def articulation_by_incidence(ve: VEGraph, interval: BoundaryInterval, v: int) -> bool:
    """Cut-vertex cross-check on the incidence structure of the interval.

    Nodes are the interval's vertices and boundary edges, with an arc for
    every sees(vertex, edge) relation between them; v is an articulation
    point iff removing its node disconnects the rest.
    """
    n = ve.n
    if not strictly_inside(n, interval.start, interval.end, v):
        raise VertexOutsideInterval(
            f"p{v} is not strictly inside the walk {interval.start}..{interval.end}"
        )
    verts = interval_vertices(n, interval.start, interval.end)
    edges = interval_edges(n, interval.start, interval.end)
    nodes = [("v", x) for x in verts if x != v] + [("e", m) for m in edges]
    adj: dict[tuple[str, int], list[tuple[str, int]]] = {x: [] for x in nodes}
    for x in verts:
        if x == v:
            continue
        for m in edges:
            if ve.sees(x, m):
                adj[("v", x)].append(("e", m))
                adj[("e", m)].append(("v", x))
    if not nodes:
        return False
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        cur = stack.pop()
        for nxt in adj[cur]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) != len(nodes)


def seen_edge_gaps(ve: VEGraph, k: int) -> list[tuple[int, int]]:
    """Maximal runs of unseen edges in row k, each reported as the pair
    (seen edge before the run, seen edge after the run) in cyclic order."""
    n = ve.n
    seen = sorted(ve.row(k))
    if len(seen) == n:
        return []
    gaps = []
    for idx, a in enumerate(seen):
        b = seen[(idx + 1) % len(seen)]
        if ccw_dist(n, a, b) >= 2:
            gaps.append((a, b))
    return gaps


def check_ve_characterization(
    ve: VEGraph,
    g: VisGraph,
    candidates: dict[Pair, CandidateSet] | None = None,
) -> list[CharacterizationFailure]:
    """Exactly-one-branch rule over every unseen-edge gap.

    For each vertex k and maximal gap between seen non-adjacent edges
    e_i (before) and e_j (after): exactly one of
      (1) vertex i+1 sees e_j and is an articulation vertex of the walk
          from k to j, or
      (2) vertex j sees e_i and is an articulation vertex of the walk
          from i+1 to k.
    Both or neither holding is a failure.
    """
    cand = candidates if candidates is not None else all_candidates(g)
    n = g.n
    failures = []
    for k in range(n):
        for i, j in seen_edge_gaps(ve, k):
            if ccw_dist(n, j, i) == 1:
                continue  # bounding edges share a vertex
            near = ve.sees((i + 1) % n, j) and is_articulation(
                g, cand, BoundaryInterval(k, j), (i + 1) % n
            )
            far = ve.sees(j, i) and is_articulation(
                g, cand, BoundaryInterval((i + 1) % n, k), j
            )
            if near == far:
                failures.append(CharacterizationFailure(k, i, j, near, far))
    return failures


def ve_to_json(ve: VEGraph) -> str:
    entries = sorted((i, m) for i in range(ve.n) for m in ve.row(i))
    obj = {"n": ve.n, "sees": [list(e) for e in entries]}
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def ve_from_json(text: str) -> VEGraph:
    obj = json.loads(text)
    n = int(obj["n"])
    rows = [set() for _ in range(n)]
    for i, m in obj["sees"]:
        rows[int(i)].add(int(m))
    return VEGraph(n, tuple(frozenset(r) for r in rows))
