"""Checkers for the five necessary conditions on a blocker assignment.

A (possibly partial) assignment maps ordered invisible pairs to blockers
drawn from their candidate sets.  Conditions NC1-NC3 have implicational
form ("this entry forces that entry"); NC4 forbids one blocker from
serving both halves of a separable invisible pair; NC5 forbids a
quadruple from being pinched both ways.

Checks are monotone: a violation only ever cites assigned entries, so it
persists under any extension of the assignment.  Requirements whose
target pair is still unassigned are suspended, not violated (the
recognizer applies them as forced assignments instead).
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .blockers import (
    Assignment,
    CandidateSet,
    all_candidates,
    blocking_far_arc,
    far_side_vertices,
    near_side_vertices,
)
from .errors import NotACandidate, UnknownPair
from .graph_core import (
    Pair,
    VisGraph,
    ccw_dist,
    in_interval,
    interval_vertices,
    invisible_pairs,
)

CONDITIONS = ("NC1a", "NC1b", "NC2", "NC3case1", "NC3case2", "NC4", "NC5")


@dataclass(frozen=True)
class Violation:
    condition: str
    pairs: tuple[Pair, ...]
    vertices: tuple[int, ...]
    narrative: str


@dataclass(frozen=True)
class SeparablePair:
    blocker: int
    pair_a: Pair
    pair_b: Pair


@dataclass(frozen=True)
class PinchedQuadruple:
    i: int
    j: int
    s: int
    t: int
    m: int


@dataclass(frozen=True)
class _Requirement:
    """pair must be assigned value, implied by trigger (+ via entries)."""

    pair: Pair
    value: int
    condition: str
    trigger: Pair
    blocker: int
    via: tuple[Pair, ...] = ()


def _mismatch(req: _Requirement, actual: int) -> Violation:
    i, j = req.trigger
    x, y = req.pair
    return Violation(
        condition=req.condition,
        pairs=(req.trigger,) + req.via + (req.pair,),
        vertices=(req.blocker, req.value, actual),
        narrative=(
            f"{req.condition}: p{req.blocker} on ({i},{j}) requires "
            f"p{req.value} on ({x},{y}), found p{actual}"
        ),
    )


def _must_be_invisible(
    condition: str, trigger: Pair, blocker: int, other: Pair, bad: Pair
) -> Violation:
    i, j = trigger
    x, y = bad
    return Violation(
        condition=condition,
        pairs=(trigger, other),
        vertices=(blocker,),
        narrative=(
            f"{condition}: p{blocker} on ({i},{j}) forces ({x},{y}) "
            f"invisible, but {{{x},{y}}} is a visible pair"
        ),
    )


def entry_requirements(
    g: VisGraph, a: Assignment, pair: Pair, k: int
) -> Iterator[_Requirement | Violation]:
    """Everything a single entry (pair -> k) implies under NC1-NC3.

    Yields _Requirement records for forced assignments and ready-made
    Violation records for requirements that the graph itself already
    breaks (a pair that must be invisible is visible).
    """
    n = g.n
    i, j = pair
    near = near_side_vertices(n, pair, k)
    far = far_side_vertices(n, pair, k)

    # NC1 part (1): the blocker of (i,j) blocks i from the whole far arc.
    for t in far:
        yield _Requirement((i, t), k, "NC1a", pair, k)

    # NC2: vertices between viewer and blocker are blocked from the target
    # either by the blocker itself (if they see it) or by whatever blocks
    # them from the blocker.
    for s in near:
        if g.visible(s, k):
            yield _Requirement((s, j), k, "NC2", pair, k)
        else:
            t = a.get((s, k))
            if t is not None:
                yield _Requirement((s, j), t, "NC2", pair, k, via=((s, k),))

    # NC3: constraints on the reverse direction, viewed from the target.
    if g.visible(j, k):
        for s in near:
            yield _Requirement((j, s), k, "NC3case1", pair, k)
        for (kk, t), b in sorted(a.items()):
            if kk == k and b == i and t != j:
                if g.visible(j, t):
                    yield _must_be_invisible("NC3case1", pair, k, (k, t), (j, t))
                else:
                    yield _Requirement((j, t), k, "NC3case1", pair, k, via=((k, t),))
    else:
        q = a.get((j, k))
        if q is not None:
            if g.visible(i, q):
                yield _must_be_invisible("NC3case2", pair, k, (j, k), (i, q))
            else:
                yield _Requirement((i, q), k, "NC3case2", pair, k, via=((j, k),))
            for s in near + [k]:
                yield _Requirement((j, s), q, "NC3case2", pair, k, via=((j, k),))
            for (kk, t), b in sorted(a.items()):
                if kk == k and b == i and t != j:
                    if g.visible(j, t):
                        yield _must_be_invisible("NC3case2", pair, k, (k, t), (j, t))
                    else:
                        yield _Requirement(
                            (j, t), q, "NC3case2", pair, k, via=((j, k), (k, t))
                        )


@lru_cache(maxsize=None)
def _separable_pairs_cached(g: VisGraph) -> tuple[SeparablePair, ...]:
    cand = all_candidates(g)
    recs = []
    items = sorted(cand.items())
    for pair_a, cs_a in items:
        for k in cs_a.members():
            arc = blocking_far_arc(g.n, pair_a, k)
            for pair_b, cs_b in items:
                if pair_b == pair_a or not cs_b.contains(k):
                    continue
                s, t = pair_b
                if s in arc and t in arc:
                    recs.append(SeparablePair(k, pair_a, pair_b))
    return tuple(sorted(recs, key=lambda r: (r.blocker, r.pair_a, r.pair_b)))


def separable_pairs(
    g: VisGraph, candidates: dict[Pair, CandidateSet] | None = None
) -> list[SeparablePair]:
    """All separable invisible pairs: a shared candidate blocker with one
    pair lying entirely on the arc beyond it."""
    return list(_separable_pairs_cached(g))


def _ccw_ordered(n: int, a: int, b: int, c: int, d: int) -> bool:
    return 0 < ccw_dist(n, a, b) < ccw_dist(n, a, c) < ccw_dist(n, a, d)


def pinched_quadruples(g: VisGraph, a: Assignment) -> list[PinchedQuadruple]:
    """Quadruples (i,j,s,t) in counterclockwise order whose outer vertices
    i and t block the sightlines of j and s toward a shared vertex m on
    the arc from t around to i."""
    n = g.n
    by_target: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for (v, m), b in a.items():
        by_target[m].append((v, b))
    quads = set()
    for m, entries in sorted(by_target.items()):
        for j, i in entries:
            for s, t in entries:
                if (j, i) == (s, t):
                    continue
                if len({i, j, s, t}) != 4:
                    continue
                if not _ccw_ordered(n, i, j, s, t):
                    continue
                if not in_interval(n, t, i, m):
                    continue
                quads.add(PinchedQuadruple(i, j, s, t, m))
    return sorted(quads, key=lambda q: (q.i, q.j, q.s, q.t, q.m))


def _cap_spans_exactly(
    g: VisGraph,
    a: Assignment,
    viewer: int,
    blocker: int,
    stretch: list[int],
    excluded: tuple[int, int],
) -> bool:
    """True iff the blocker's shadow for this viewer provably pins its
    boundary within the stretch.

    Every stretch vertex must be visible from the viewer or assigned this
    blocker, and neither excluded vertex may be hidden behind it.  Facts
    that depend on a still-unassigned pair leave the span undetermined,
    which reports False (monotone: once determined, it stays determined).
    """
    for u in stretch:
        if g.visible(viewer, u):
            continue
        if a.get((viewer, u)) != blocker:
            return False
    for x in excluded:
        if g.visible(viewer, x):
            continue
        b = a.get((viewer, x))
        if b is None or b == blocker:
            return False
    return True


def _pinch_certified(g: VisGraph, a: Assignment, q: PinchedQuadruple, m2: int) -> bool:
    """Both pinches must certify genuine crossings of the two sightlines.

    A pinch only witnesses a crossing when each blocking ray's shadow is
    pinned between the quadruple vertex beside it and the shared target;
    a shadow swallowing the opposite sightline (nested pockets) blocks
    without crossing, which real polygons can realize.
    """
    n = g.n
    i, j, s, t, m = q.i, q.j, q.s, q.t, q.m
    return (
        _cap_spans_exactly(
            g, a, j, i, interval_vertices(n, (t + 1) % n, m), (s, t)
        )
        and _cap_spans_exactly(
            g, a, s, t, interval_vertices(n, m, (i - 1) % n), (i, j)
        )
        and _cap_spans_exactly(
            g, a, i, j, interval_vertices(n, m2, (s - 1) % n), (s, t)
        )
        and _cap_spans_exactly(
            g, a, t, s, interval_vertices(n, (j + 1) % n, m2), (i, j)
        )
    )


def _violations_iter(
    g: VisGraph, a: Assignment, cand: dict[Pair, CandidateSet]
) -> Iterator[Violation]:
    n = g.n
    inv = set(invisible_pairs(g))
    for pair, k in a.items():
        if pair not in inv:
            raise UnknownPair(f"{pair} is not an invisible pair")
        if not cand[pair].contains(k):
            raise NotACandidate(f"p{k} is not a candidate for {pair}")

    for pair, k in sorted(a.items()):
        for req in entry_requirements(g, a, pair, k):
            if isinstance(req, Violation):
                yield req
                continue
            actual = a.get(req.pair)
            if actual is not None and actual != req.value:
                yield _mismatch(req, actual)

        # NC1 part (2): the roles of viewer and blocker cannot swap.
        i, j = pair
        if not g.visible(k, j) and a.get((k, j)) == i:
            yield Violation(
                "NC1b",
                (pair, (k, j)),
                (k, i),
                f"NC1b: p{k} blocks ({i},{j}) while p{i} blocks ({k},{j})",
            )

    for rec in _separable_pairs_cached(g):
        if a.get(rec.pair_a) == rec.blocker and a.get(rec.pair_b) == rec.blocker:
            lo, hi = sorted((rec.pair_a, rec.pair_b))
            yield Violation(
                "NC4",
                (lo, hi),
                (rec.blocker,),
                f"NC4: p{rec.blocker} assigned to both separable pairs "
                f"({lo[0]},{lo[1]}) and ({hi[0]},{hi[1]})",
            )

    for q in pinched_quadruples(g, a):
        for m2 in interval_vertices(n, q.j, q.s):
            if a.get((q.i, m2)) != q.j or a.get((q.t, m2)) != q.s:
                continue
            if not _pinch_certified(g, a, q, m2):
                continue
            pairs = tuple(sorted(((q.j, q.m), (q.s, q.m), (q.i, m2), (q.t, m2))))
            yield Violation(
                "NC5",
                pairs,
                tuple(sorted((q.i, q.j, q.s, q.t))),
                f"NC5: quadruple ({q.i},{q.j},{q.s},{q.t}) is pinched "
                f"both ways, via p{q.m} and p{m2}",
            )


def check_conditions(
    g: VisGraph,
    a: Assignment,
    candidates: dict[Pair, CandidateSet] | None = None,
) -> list[Violation]:
    """All NC1-NC5 violations present in a (possibly partial) assignment.

    Empty result means the assignment is consistent so far.  Entries not
    drawn from the candidate table raise, they are never reported as
    violations.
    """
    cand = candidates if candidates is not None else all_candidates(g)
    seen = set()
    out = []
    for v in _violations_iter(g, a, cand):
        key = (v.condition, v.pairs, v.vertices)
        if key not in seen:
            seen.add(key)
            out.append(v)
    return sorted(out, key=lambda v: (v.condition, v.pairs, v.vertices))


def first_violation(
    g: VisGraph,
    a: Assignment,
    candidates: dict[Pair, CandidateSet] | None = None,
) -> Violation | None:
    """Cheapest witness that the assignment is inconsistent, if any."""
    cand = candidates if candidates is not None else all_candidates(g)
    return next(_violations_iter(g, a, cand), None)


def violations_to_json(violations: list[Violation]) -> str:
    rows = [
        {
            "condition": v.condition,
            "pairs": [list(p) for p in v.pairs],
            "vertices": list(v.vertices),
            "narrative": v.narrative,
        }
        for v in violations
    ]
    return json.dumps({"violations": rows}, sort_keys=True, indent=2) + "\n"
