"""Candidate-blocker computation and the blocker-assignment data model.

For an invisible ordered pair (i, j) the candidate blockers are found by
walking from j toward i along each side of the cycle and taking the first
vertex that i sees, provided no visible pair bridges the two arcs the
candidate separates.  There is at most one candidate per side.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotACandidate, NotInvisible
from .graph_core import (
    Pair,
    VisGraph,
    interval_vertices,
    invisible_pairs,
    strictly_inside,
)

Assignment = dict[Pair, int]


@dataclass(frozen=True)
class CandidateSet:
    """The at-most-two admissible blockers of an ordered invisible pair.

    ``cw`` lies on the walk from viewer to target (found walking clockwise
    from the target); ``ccw`` lies on the opposite arc.
    """

    cw: int | None
    ccw: int | None

    def members(self) -> tuple[int, ...]:
        out = []
        if self.cw is not None:
            out.append(self.cw)
        if self.ccw is not None:
            out.append(self.ccw)
        return tuple(out)

    def contains(self, v: int) -> bool:
        return v == self.cw or v == self.ccw

    @property
    def is_empty(self) -> bool:
        return self.cw is None and self.ccw is None


def _arc_pair_visible(g: VisGraph, side_a: list[int], side_b: list[int]) -> bool:
    """True if any vertex of side_a sees any vertex of side_b."""
    return any(g.visible(s, t) for s in side_a for t in side_b)


def candidate_blockers(g: VisGraph, pair: Pair) -> CandidateSet:
    """Compute the candidate set of an ordered invisible pair.

    Clockwise side: walk j-1, j-2, ... until the first vertex k that i
    sees; k qualifies unless some visible pair joins the walk-from-i arc
    before k to the arc from k+1 through j.  The counterclockwise side is
    symmetric.
    """
    i, j = pair
    n = g.n
    if i == j or g.visible(i, j):
        raise NotInvisible(f"({i},{j}) is not an invisible pair")

    k = (j - 1) % n
    while not g.visible(i, k):
        k = (k - 1) % n
    cw: int | None = k
    if _arc_pair_visible(
        g,
        interval_vertices(n, i, (k - 1) % n),
        interval_vertices(n, (k + 1) % n, j),
    ):
        cw = None

    k2 = (j + 1) % n
    while not g.visible(i, k2):
        k2 = (k2 + 1) % n
    ccw: int | None = k2
    if _arc_pair_visible(
        g,
        interval_vertices(n, j, (k2 - 1) % n),
        interval_vertices(n, (k2 + 1) % n, i),
    ):
        ccw = None

    return CandidateSet(cw, ccw)


@lru_cache(maxsize=None)
def _all_candidates_cached(g: VisGraph) -> tuple[tuple[Pair, CandidateSet], ...]:
    return tuple((p, candidate_blockers(g, p)) for p in invisible_pairs(g))


def all_candidates(g: VisGraph) -> dict[Pair, CandidateSet]:
    """Candidate table over every ordered invisible pair.

    Pairs whose candidate set is empty are representable here and make
    recognition fail immediately downstream, since assignments may only
    draw from candidate sets.
    """
    return dict(_all_candidates_cached(g))


def blocker_side(n: int, pair: Pair, k: int) -> str:
    """'cw' if k lies strictly between viewer and target counterclockwise,
    'ccw' if strictly on the opposite arc."""
    i, j = pair
    if strictly_inside(n, i, j, k):
        return "cw"
    if strictly_inside(n, j, i, k):
        return "ccw"
    raise NotACandidate(f"p{k} coincides with an endpoint of ({i},{j})")


def near_side_vertices(n: int, pair: Pair, k: int) -> list[int]:
    """Vertices on the arc between viewer and blocker that avoids the
    target, excluding the blocker (the viewer is included)."""
    i, j = pair
    if blocker_side(n, pair, k) == "cw":
        return interval_vertices(n, i, (k - 1) % n)
    return interval_vertices(n, (k + 1) % n, i)


def far_side_vertices(n: int, pair: Pair, k: int) -> list[int]:
    """Vertices on the arc between blocker and target that avoids the
    viewer, excluding the blocker (the target is included)."""
    i, j = pair
    if blocker_side(n, pair, k) == "cw":
        return interval_vertices(n, (k + 1) % n, j)
    return interval_vertices(n, j, (k - 1) % n)


def blocking_far_arc(n: int, pair: Pair, k: int) -> set[int]:
    """Vertices of the arc between blocker and target that avoids the
    viewer, including both arc endpoints."""
    i, j = pair
    if blocker_side(n, pair, k) == "cw":
        return set(interval_vertices(n, k, j))
    return set(interval_vertices(n, j, k))


def assignment_to_json(a: Assignment) -> str:
    rows = [
        {"from": i, "to": j, "blocker": b}
        for (i, j), b in sorted(a.items())
    ]
    return json.dumps({"blockers": rows}, sort_keys=True, indent=2) + "\n"


def assignment_from_json(text: str) -> Assignment:
    obj = json.loads(text)
    out: Assignment = {}
    for row in obj["blockers"]:
        out[(int(row["from"]), int(row["to"]))] = int(row["blocker"])
    return out
