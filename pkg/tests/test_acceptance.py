"""Acceptance suite: every criterion below runs at full stated scale and
prints one pass/fail line.

Corpus: 500 random simple polygons, n cycling 5..12, seed base 7 (the
same derivation the corpus command uses).
"""

import json
import time

import pytest

from pseudovis import (
    find_assignment,
    random_simple_polygon,
    verify,
    visibility_graph,
)
from pseudovis.cli import run_corpus
from support import brute_force_accepts, complete_graph, cycle_graph

COUNT, N_LO, N_HI, SEED = 500, 5, 12, 7


def _report(num, name, ok, detail=""):
    print(f"acceptance {num} [{name}]: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    assert ok, f"criterion {num} ({name}) failed {detail}"


@pytest.fixture(scope="module")
def corpus_report():
    start = time.perf_counter()
    report = run_corpus(COUNT, N_LO, N_HI, SEED)
    elapsed = time.perf_counter() - start
    return report, elapsed


def _fail_count(report, check):
    return report["checks"][check]["fail"]


def test_criterion_1_unique_blockers(corpus_report):
    report, elapsed = corpus_report
    ok = _fail_count(report, "unique_blockers") == 0 and elapsed < 60.0
    _report(1, "blocker uniqueness", ok,
            f"(0 violations required, corpus ran in {elapsed:.1f}s < 60s)")


def test_criterion_2_nc_soundness(corpus_report):
    report, _ = corpus_report
    _report(2, "conditions hold on ground truth",
            _fail_count(report, "nc_clean") == 0)


def test_criterion_3_ve_equivalence(corpus_report):
    report, _ = corpus_report
    _report(3, "derived vertex-edge relation matches geometry",
            _fail_count(report, "ve_match") == 0)


def test_criterion_4_characterization(corpus_report):
    report, _ = corpus_report
    # "recognized" includes the characterization check over the accepted
    # assignment's derived relation
    ok = (_fail_count(report, "ve_characterization") == 0
          and _fail_count(report, "recognized") == 0)
    _report(4, "vertex-edge characterization", ok)


def test_criterion_5_property_suites(corpus_report):
    report, _ = corpus_report
    ok = (_fail_count(report, "edge_vertex") == 0
          and _fail_count(report, "gap_cases") == 0)
    _report(5, "edge-vertex and gap-case suites", ok)


def test_criterion_6_recognizer_fixtures():
    ok = True
    detail = []
    for n in range(4, 9):
        v = find_assignment(complete_graph(n))
        good = v.accepted and v.assignment == {} and brute_force_accepts(
            complete_graph(n)
        )
        ok &= good
        if not good:
            detail.append(f"K{n}")
    quad4 = cycle_graph(4, [(1, 3)])
    v = find_assignment(quad4)
    ok &= v.accepted and brute_force_accepts(quad4)
    dent5 = cycle_graph(5, [(0, 2), (0, 3), (2, 4)])
    v = find_assignment(dent5)
    ok &= v.accepted and verify(dent5, v.assignment).ok and brute_force_accepts(dent5)
    for n in (4, 5, 6):
        g = cycle_graph(n)
        v = find_assignment(g)
        good = (not v.accepted) and (not brute_force_accepts(g))
        ok &= good
        if not good:
            detail.append(f"C{n}")
    _report(6, "recognizer fixtures vs brute force", ok, " ".join(detail))


def test_criterion_7_small_scale_completeness():
    mismatches = []
    for idx in range(COUNT):
        n = N_LO + idx % (N_HI - N_LO + 1)
        if n > 8:
            continue
        p = random_simple_polygon(n, SEED + idx)
        g = visibility_graph(p)
        if find_assignment(g).accepted != brute_force_accepts(g):
            mismatches.append(SEED + idx)
    _report(7, "search matches brute force for n <= 8",
            not mismatches, f"mismatched seeds: {mismatches}" if mismatches else "")


def test_criterion_8_determinism(corpus_report):
    report, _ = corpus_report
    second = run_corpus(COUNT, N_LO, N_HI, SEED)
    bytes_equal = (
        json.dumps(report, sort_keys=True) == json.dumps(second, sort_keys=True)
    )
    regenerated = all(
        random_simple_polygon(n, s) == random_simple_polygon(n, s)
        for n, s in ((5, 7), (8, 42), (12, 99))
    )
    _report(8, "byte-identical corpus reports and reproducible generation",
            bytes_equal and regenerated)
