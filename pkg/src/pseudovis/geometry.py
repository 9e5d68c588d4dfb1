"""Exact straight-line oracle on integer-coordinate simple polygons.

Every predicate reduces to integer cross-product signs; ray hit points
are exact rationals.  Polygons must be simple, counterclockwise and in
general position (no three vertices collinear), which keeps sightlines
and witness rays away from vertices and makes every boundary interaction
a proper crossing.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .blockers import all_candidates, blocker_side
from .errors import (
    DegenerateInput,
    GenerationBudgetExceeded,
    NotInvisible,
    OracleContradiction,
)
from .graph_core import (
    Pair,
    VisGraph,
    interval_edges,
    invisible_pairs,
)
from .vertex_edge import VEGraph, seen_edge_gaps

Point = tuple[int, int]


@dataclass(frozen=True)
class Polygon:
    """Simple counterclockwise polygon on integer coordinates, no three
    vertices collinear."""

    vertices: tuple[Point, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class EdgeHit:
    """First boundary edge crossed by a ray, with the exact hit point."""

    edge: int
    point: tuple[Fraction, Fraction]


def orient(a: Point, b: Point, c: Point) -> int:
    """Twice the signed area of triangle abc; >0 for a left turn."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Proper crossing of open segments ab and cd (no shared endpoints,
    general position assumed)."""
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    return (o1 > 0) != (o2 > 0) and o1 != 0 and o2 != 0 and (o3 > 0) != (o4 > 0) and o3 != 0 and o4 != 0


def signed_area2(vertices: tuple[Point, ...]) -> int:
    total = 0
    n = len(vertices)
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return total


def validate_polygon(vertices) -> Polygon:
    """Check all polygon invariants and return the validated value."""
    pts = []
    for v in vertices:
        x, y = v
        if not isinstance(x, int) or not isinstance(y, int):
            raise DegenerateInput(f"non-integer coordinate {v!r}")
        pts.append((x, y))
    n = len(pts)
    if n < 3:
        raise DegenerateInput(f"need at least 3 vertices, got {n}")
    if len(set(pts)) != n:
        raise DegenerateInput("duplicate vertices")
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orient(pts[i], pts[j], pts[k]) == 0:
                    raise DegenerateInput(f"vertices {i},{j},{k} are collinear")
    if signed_area2(tuple(pts)) <= 0:
        raise DegenerateInput("vertices are not in counterclockwise order")
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue  # adjacent edges share only their vertex
            a, b = pts[i], pts[(i + 1) % n]
            c, d = pts[j], pts[(j + 1) % n]
            if _segments_cross(a, b, c, d):
                raise DegenerateInput(f"edges {i} and {j} cross: not simple")
    return Polygon(tuple(pts))


def _cone_contains(p: Polygon, v: int, d: Point) -> bool:
    """True iff direction d from vertex v points strictly into the
    interior angle at v.

    Directions along an incident edge line resolve by strictness: at a
    convex vertex the extension leaves the polygon, at a reflex vertex it
    enters.
    """
    n = p.n
    pv = p.vertices[v]
    a = _sub(p.vertices[(v + 1) % n], pv)
    b = _sub(p.vertices[(v - 1) % n], pv)
    cab = _cross(a, b)
    cad = _cross(a, d)
    cdb = _cross(d, b)
    if cab > 0:
        return cad > 0 and cdb > 0
    return cad > 0 or cdb > 0


def _sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def _cross(a: Point, b: Point) -> int:
    return a[0] * b[1] - a[1] * b[0]


def sees_vertex(p: Polygon, i: int, j: int) -> bool:
    """True iff the open segment between vertices i and j stays inside.

    Adjacent vertices always see each other.  Otherwise: the initial
    direction must lie in the interior cone at i and the segment must not
    properly cross any edge avoiding both endpoints (general position
    rules out every other kind of contact).
    """
    n = p.n
    if i == j:
        raise ValueError("sees_vertex needs two distinct vertices")
    if (j - i) % n == 1 or (i - j) % n == 1:
        return True
    a, b = p.vertices[i], p.vertices[j]
    if not _cone_contains(p, i, _sub(b, a)):
        return False
    for m in range(n):
        if m in (i, (i - 1) % n, j, (j - 1) % n):
            continue
        c, d = p.vertices[m], p.vertices[(m + 1) % n]
        if _segments_cross(a, b, c, d):
            return False
    return True


@lru_cache(maxsize=None)
def visibility_graph(p: Polygon) -> VisGraph:
    """Ground-truth visibility graph of the polygon."""
    n = p.n
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            if sees_vertex(p, i, j):
                edges.add((i, j))
    return VisGraph(n, frozenset(edges))


@lru_cache(maxsize=None)
def _exit_table(p: Polygon) -> dict[tuple[int, int], EdgeHit | None]:
    """First boundary crossing of the ray from k away from a, for every
    ordered vertex pair (k, a); None when the direction leaves
    immediately."""
    n = p.n
    table: dict[tuple[int, int], EdgeHit | None] = {}
    for k in range(n):
        o = p.vertices[k]
        for away in range(n):
            if away == k:
                continue
            d = _sub(o, p.vertices[away])
            if not _cone_contains(p, k, d):
                table[(k, away)] = None
                continue
            best = None  # (num, den, edge) with t = num/den > 0, den > 0
            for m in range(n):
                if m in (k, (k - 1) % n):
                    continue
                a = p.vertices[m]
                b = p.vertices[(m + 1) % n]
                e = _sub(b, a)
                den = _cross(d, e)
                if den == 0:
                    continue  # parallel, cannot overlap in general position
                num = _cross(_sub(a, o), e)
                unum = _cross(_sub(a, o), d)
                if den < 0:
                    num, unum, den = -num, -unum, -den
                if num <= 0:  # crossing behind or at the ray origin
                    continue
                if not (0 < unum < den):  # misses the open edge
                    continue
                if best is None or num * best[1] < best[0] * den:
                    best = (num, den, m)
            if best is None:  # interior direction must cross the boundary
                raise OracleContradiction(
                    f"ray from p{k} away from p{away} never exits"
                )
            t = Fraction(best[0], best[1])
            hit = (o[0] + t * d[0], o[1] + t * d[1])
            table[(k, away)] = EdgeHit(best[2], hit)
    return table


def ray_first_exit(p: Polygon, k: int, away_from: int) -> EdgeHit | None:
    """Trace the ray from vertex k directed away from vertex away_from.

    Returns None when the direction leaves the interior cone at k
    immediately, otherwise the first properly crossed open edge with its
    exact rational hit point.  Requires that away_from sees k.
    """
    if not sees_vertex(p, away_from, k):
        raise ValueError(f"vertex {away_from} does not see vertex {k}")
    return _exit_table(p)[(k, away_from)]


def _is_witness(p: Polygon, i: int, w: int, m: int) -> bool:
    """Witness rule for the vertex-edge pair (i, e_m)."""
    n = p.n
    ends = (m, (m + 1) % n)
    if i in ends:
        return w in ends
    if w == i or not sees_vertex(p, i, w):
        return False
    if w in ends:
        return True
    hit = _exit_table(p)[(w, i)]
    return hit is not None and hit.edge == m


def sees_edge(p: Polygon, i: int, m: int) -> tuple[bool, list[int]]:
    """Whether vertex i sees edge m, plus the witness list.

    A vertex on the edge is witnessed by both endpoints; otherwise a
    witness is a vertex seen from i that either ends the edge or whose
    continuation ray away from i first exits through it.  Two witnesses
    are required.
    """
    witnesses = [w for w in range(p.n) if _is_witness(p, i, w, m)]
    return len(witnesses) >= 2, witnesses


@lru_cache(maxsize=None)
def ve_graph_geo(p: Polygon) -> VEGraph:
    """Ground-truth vertex-edge visibility relation."""
    n = p.n
    rows = []
    for i in range(n):
        rows.append(frozenset(m for m in range(n) if sees_edge(p, i, m)[0]))
    return VEGraph(n, tuple(rows))


def designated_blocker_geo(
    p: Polygon, pair: Pair, graph: VisGraph | None = None
) -> int:
    """The unique vertex geometrically responsible for an invisible pair.

    Walks from the target to the first vertex the viewer sees on each
    side; the viewer must see exactly one boundary edge between those two
    vertices, and the side of the target that edge falls on selects the
    blocker.  Any other outcome raises OracleContradiction.
    """
    g = graph if graph is not None else visibility_graph(p)
    n = g.n
    i, j = pair
    if i == j or g.visible(i, j):
        raise NotInvisible(f"({i},{j}) is not an invisible pair")
    k = (j - 1) % n
    while not g.visible(i, k):
        k = (k - 1) % n
    k2 = (j + 1) % n
    while not g.visible(i, k2):
        k2 = (k2 + 1) % n
    seen = [m for m in interval_edges(n, k, k2) if sees_edge(p, i, m)[0]]
    if len(seen) != 1:
        raise OracleContradiction(
            f"viewer {i} sees {len(seen)} edges between p{k} and p{k2}, expected 1"
        )
    blocker = k if seen[0] in interval_edges(n, j, k2) else k2
    if not all_candidates(g)[pair].contains(blocker):
        raise OracleContradiction(
            f"geometric blocker p{blocker} of ({i},{j}) is not a candidate"
        )
    return blocker


def geometric_blockers(p: Polygon) -> dict[Pair, int]:
    """Designated blocker of every ordered invisible pair."""
    g = visibility_graph(p)
    return {pair: designated_blocker_geo(p, pair, g) for pair in invisible_pairs(g)}


def _blocking_exit_edges(n: int, pair: Pair, v: int) -> set[int]:
    """Edges through which the continuation ray of a blocker v for the
    pair may exit: the boundary walk between viewer and target on the
    side away from v."""
    i, j = pair
    if blocker_side(n, pair, v) == "cw":
        return set(interval_edges(n, j, i))
    return set(interval_edges(n, i, j))


def check_blocker_uniqueness(p: Polygon) -> list[str]:
    """Exactly-one-blocker scan over all ordered invisible pairs.

    Independently of the seen-edge extraction, a vertex v qualifies as a
    blocker of (i, j) by the ray rule: i sees v and the continuation ray
    beyond v away from i first exits through the walk between viewer and
    target avoiding v.  The scan must find exactly the extracted blocker,
    which must also be a combinatorial candidate; for far-side blockers
    the hit edge must also fall between target and blocker (the two exit
    conventions must agree).
    """
    g = visibility_graph(p)
    cand = all_candidates(g)
    table = _exit_table(p)
    n = p.n
    failures = []
    for pair in invisible_pairs(g):
        i, j = pair
        try:
            algo = designated_blocker_geo(p, pair, g)
        except OracleContradiction as exc:
            failures.append(f"pair ({i},{j}): {exc}")
            continue
        by_ray = []
        for v in range(n):
            if v in (i, j) or not g.visible(i, v):
                continue
            hit = table[(v, i)]
            if hit is not None and hit.edge in _blocking_exit_edges(n, pair, v):
                by_ray.append(v)
        if by_ray != [algo]:
            failures.append(
                f"pair ({i},{j}): ray scan found {by_ray}, extraction found {algo}"
            )
            continue
        if not cand[pair].contains(algo):
            failures.append(f"pair ({i},{j}): blocker p{algo} is not a candidate")
        if blocker_side(n, pair, algo) == "ccw":
            # Second convention for far-side blockers: the ray must exit
            # between the first vertex the viewer sees walking clockwise
            # from the target and the blocker itself.
            first_cw = (j - 1) % n
            while not g.visible(i, first_cw):
                first_cw = (first_cw - 1) % n
            hit = table[(algo, i)]
            narrow = set(interval_edges(n, first_cw, algo))
            if hit is None or hit.edge not in narrow:
                failures.append(
                    f"pair ({i},{j}): exit conventions disagree at p{algo}"
                )
    return failures


def check_edge_vertex_visibility(p: Polygon) -> list[str]:
    """Both directions of the incident-edge rule: seeing both edges at a
    vertex implies seeing the vertex; seeing a vertex implies seeing at
    least one of its edges."""
    g = visibility_graph(p)
    ve = ve_graph_geo(p)
    n = p.n
    failures = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            before, after = (j - 1) % n, j
            if ve.sees(i, before) and ve.sees(i, after) and not g.visible(i, j):
                failures.append(
                    f"vertex {i} sees edges {before} and {after} but not vertex {j}"
                )
            if g.visible(i, j) and not (ve.sees(i, before) or ve.sees(i, after)):
                failures.append(
                    f"vertex {i} sees vertex {j} but neither incident edge"
                )
    return failures


def check_gap_witness_cases(p: Polygon) -> list[str]:
    """Exactly-one-case rule across every unseen-edge gap.

    When a vertex k sees non-adjacent edges e_a and e_b with nothing
    between, exactly one holds:
      case A: k sees the far endpoint of e_a but not the near endpoint of
        e_b, that endpoint witnesses (k, e_b), sees e_b, and the near
        endpoint of e_b does not see e_a;
      case B: the mirror image.
    """
    g = visibility_graph(p)
    ve = ve_graph_geo(p)
    n = p.n
    failures = []
    for k in range(n):
        for a, b in seen_edge_gaps(ve, k):
            if (a - b) % n == 1:
                continue  # bounding edges share a vertex
            va = (a + 1) % n  # far endpoint of e_a
            vb = b  # near endpoint of e_b
            case_a = (
                g.visible(k, va)
                and not g.visible(k, vb)
                and _is_witness(p, k, va, b)
                and ve.sees(va, b)
                and not ve.sees(vb, a)
            )
            case_b = (
                g.visible(k, vb)
                and not g.visible(k, va)
                and _is_witness(p, k, vb, a)
                and ve.sees(vb, a)
                and not ve.sees(va, b)
            )
            if case_a == case_b:
                which = "both" if case_a else "neither"
                failures.append(
                    f"vertex {k}, gap between edges {a} and {b}: {which} case holds"
                )
    return failures


def _three_collinear(pts: list[Point]) -> bool:
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orient(pts[i], pts[j], pts[k]) == 0:
                    return True
    return False


def _uncross_tour(pts: list[Point], swap_cap: int) -> bool:
    """Repeatedly reverse tour sections to remove crossing edge pairs.

    Each swap strictly shortens the tour, so this terminates; the cap is
    a defensive bound only.  Returns False if the cap is hit.
    """
    n = len(pts)
    swaps = 0
    while True:
        crossing = None
        for i in range(n):
            a, b = pts[i], pts[(i + 1) % n]
            for j in range(i + 1, n):
                if j == i + 1 or (i == 0 and j == n - 1):
                    continue
                c, d = pts[j], pts[(j + 1) % n]
                if _segments_cross(a, b, c, d):
                    crossing = (i, j)
                    break
            if crossing:
                break
        if crossing is None:
            return True
        i, j = crossing
        pts[i + 1 : j + 1] = reversed(pts[i + 1 : j + 1])
        swaps += 1
        if swaps > swap_cap:
            return False


def random_simple_polygon(n: int, seed: int, max_attempts: int = 64) -> Polygon:
    """Deterministic random simple polygon in the grid [0, 4n]^2.

    Samples n distinct grid points (resampling until no three are
    collinear), walks them in random order and uncrosses the tour, then
    fixes the orientation.  Raises GenerationBudgetExceeded when the
    resampling cap is hit.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    rng = random.Random(f"{n}:{seed}")
    width = 4 * n + 1
    for _ in range(max_attempts):
        cells = rng.sample(range(width * width), n)
        pts = [(c % width, c // width) for c in cells]
        if _three_collinear(pts):
            continue
        rng.shuffle(pts)
        if not _uncross_tour(pts, swap_cap=50 * n * n):
            continue
        if signed_area2(tuple(pts)) < 0:
            pts.reverse()
        return validate_polygon(pts)
    raise GenerationBudgetExceeded(
        f"no valid polygon for n={n} seed={seed} in {max_attempts} attempts"
    )


def polygon_to_json(p: Polygon) -> str:
    obj = {"vertices": [list(v) for v in p.vertices]}
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def polygon_from_json(text: str) -> Polygon:
    obj = json.loads(text)
    return validate_polygon([tuple(v) for v in obj["vertices"]])
