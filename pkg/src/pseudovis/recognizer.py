"""Decision procedure: search for a blocker assignment satisfying NC1-NC5.

Variables are the ordered invisible pairs, domains their candidate sets
(at most two values).  The search is chronological backtracking with
forward propagation: conditions NC1-NC3 have implicational form, so each
tentative entry forces further entries until a fixpoint; NC4/NC5 (and
NC1 part 2) are checked as constraints on every extension.  Rejection
comes with a re-checkable certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .blockers import Assignment, CandidateSet, all_candidates, assignment_to_json
from .conditions import (
    Violation,
    _mismatch,
    check_conditions,
    entry_requirements,
    first_violation,
)
from .errors import SearchBudgetExceeded
from .graph_core import Pair, VisGraph, invisible_pairs

DEFAULT_NODE_BUDGET = 1_000_000


@dataclass(frozen=True)
class EmptyCandidateSet:
    pair: Pair


@dataclass(frozen=True)
class ExhaustedSearch:
    conflicts: tuple[tuple[int, Violation], ...]


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    problems: tuple[str, ...]
    violations: tuple[Violation, ...]


@dataclass
class Verdict:
    accepted: bool
    assignment: Assignment | None = None
    certificate: EmptyCandidateSet | ExhaustedSearch | None = None


def _propagate(
    g: VisGraph,
    cand: dict[Pair, CandidateSet],
    a: Assignment,
) -> Violation | None:
    """Close the assignment under NC1-NC3 forcing; mutate a in place.

    Returns the first violation hit (forced value outside the candidate
    set, contradiction with an existing entry, or any residual NC1b /
    NC4 / NC5 breach on the closure), or None if consistent.
    """
    changed = True
    while changed:
        changed = False
        for pair, k in sorted(a.items()):
            for req in entry_requirements(g, a, pair, k):
                if isinstance(req, Violation):
                    return req
                cur = a.get(req.pair)
                if cur is None:
                    if not cand[req.pair].contains(req.value):
                        return Violation(
                            req.condition,
                            (req.trigger,) + req.via + (req.pair,),
                            (req.blocker, req.value),
                            f"{req.condition}: p{req.blocker} on "
                            f"({req.trigger[0]},{req.trigger[1]}) requires "
                            f"p{req.value} on ({req.pair[0]},{req.pair[1]}), "
                            f"which is not a candidate there",
                        )
                    a[req.pair] = req.value
                    changed = True
                elif cur != req.value:
                    return _mismatch(req, cur)
    return first_violation(g, a, cand)


def find_assignment(
    g: VisGraph, node_budget: int = DEFAULT_NODE_BUDGET
) -> Verdict:
    """Complete search for an NC-satisfying total assignment.

    Deterministic: variables are ordered by candidate-set size then
    lexicographically, values clockwise-side first.  Every dead end is
    logged as (assignment depth, violation) in the rejection certificate.
    Raises SearchBudgetExceeded past node_budget branch extensions.
    """
    pairs = invisible_pairs(g)
    cand = all_candidates(g)
    for p in pairs:
        if cand[p].is_empty:
            return Verdict(False, certificate=EmptyCandidateSet(p))

    order = sorted(pairs, key=lambda p: (len(cand[p].members()), p))
    conflicts: list[tuple[int, Violation]] = []
    nodes = 0

    def solve(a: Assignment) -> Assignment | None:
        nonlocal nodes
        closed = dict(a)
        bad = _propagate(g, cand, closed)
        if bad is not None:
            conflicts.append((len(closed), bad))
            return None
        var = next((p for p in order if p not in closed), None)
        if var is None:
            return closed
        for value in cand[var].members():
            nodes += 1
            if nodes > node_budget:
                raise SearchBudgetExceeded(
                    f"no verdict within {node_budget} search nodes"
                )
            trial = dict(closed)
            trial[var] = value
            result = solve(trial)
            if result is not None:
                return result
        return None

    found = solve({})
    if found is None:
        return Verdict(False, certificate=ExhaustedSearch(tuple(conflicts)))
    report = verify(g, found)
    if not report.ok:  # propagation and the checker disagree: a bug
        raise AssertionError(f"accepted assignment failed verification: {report}")
    return Verdict(True, assignment=found)


def verify(g: VisGraph, a: Assignment) -> VerifyReport:
    """True iff the assignment is total, candidate-respecting and NC-clean."""
    cand = all_candidates(g)
    inv = invisible_pairs(g)
    inv_set = set(inv)
    problems = []
    for pair in sorted(a):
        if pair not in inv_set:
            problems.append(f"({pair[0]},{pair[1]}) is not an invisible pair")
        elif not cand[pair].contains(a[pair]):
            problems.append(
                f"p{a[pair]} is not a candidate blocker for ({pair[0]},{pair[1]})"
            )
    for pair in inv:
        if pair not in a:
            problems.append(f"({pair[0]},{pair[1]}) is unassigned")
    if problems:
        return VerifyReport(False, tuple(problems), ())
    violations = check_conditions(g, a, cand)
    return VerifyReport(not violations, (), tuple(violations))


def _violation_obj(v: Violation) -> dict:
    return {
        "condition": v.condition,
        "pairs": [list(p) for p in v.pairs],
        "vertices": list(v.vertices),
        "narrative": v.narrative,
    }


def verdict_to_json(v: Verdict, extra: dict | None = None) -> str:
    obj: dict = {"verdict": "accepted" if v.accepted else "rejected"}
    if v.accepted:
        obj["assignment"] = json.loads(assignment_to_json(v.assignment or {}))
    elif isinstance(v.certificate, EmptyCandidateSet):
        obj["certificate"] = {
            "kind": "empty_candidate_set",
            "pair": list(v.certificate.pair),
        }
    else:
        assert isinstance(v.certificate, ExhaustedSearch)
        obj["certificate"] = {
            "kind": "exhausted_search",
            "conflicts": [
                {"depth": d, "violation": _violation_obj(viol)}
                for d, viol in v.certificate.conflicts
            ],
        }
    if extra:
        obj.update(extra)
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
