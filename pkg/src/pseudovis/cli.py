"""Command-line surface: recognition, oracle extraction, generation,
verification, corpus runs and exports.

Exit codes: 0 accepted/pass, 1 rejected/fail, 2 input error, 3 budget
exceeded.  All output is canonical JSON (sorted keys, sorted lists), so
identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import geometry, recognizer
from .blockers import all_candidates, assignment_from_json, assignment_to_json
from .conditions import check_conditions, violations_to_json
from .errors import (
    GenerationBudgetExceeded,
    PseudovisError,
    SearchBudgetExceeded,
)
from .graph_core import graph_from_json, graph_to_json
from .vertex_edge import build_ve, check_ve_characterization, ve_to_json

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _read(path: str) -> str:
    return Path(path).read_text()


def cmd_recognize(args) -> int:
    g = graph_from_json(_read(args.graph))
    verdict = recognizer.find_assignment(g, node_budget=args.budget)
    extra = None
    if verdict.accepted:
        ve = build_ve(g, verdict.assignment or {}, check=False)
        failures = check_ve_characterization(ve, g)
        extra = {
            "ve_check": {
                "ok": not failures,
                "failures": [
                    {
                        "vertex": f.vertex,
                        "edge_before": f.edge_before,
                        "edge_after": f.edge_after,
                    }
                    for f in failures
                ],
            }
        }
    sys.stdout.write(recognizer.verdict_to_json(verdict, extra))
    return EXIT_PASS if verdict.accepted else EXIT_FAIL


def cmd_check(args) -> int:
    g = graph_from_json(_read(args.graph))
    a = assignment_from_json(_read(args.assignment))
    report = recognizer.verify(g, a)
    obj = json.loads(violations_to_json(list(report.violations)))
    obj["ok"] = report.ok
    obj["problems"] = list(report.problems)
    sys.stdout.write(_dump(obj))
    return EXIT_PASS if report.ok else EXIT_FAIL


def _lemma_report(p: geometry.Polygon) -> dict:
    return {
        "edge_vertex": geometry.check_edge_vertex_visibility(p),
        "gap_cases": geometry.check_gap_witness_cases(p),
        "unique_blockers": geometry.check_blocker_uniqueness(p),
    }


def cmd_oracle(args) -> int:
    p = geometry.polygon_from_json(_read(args.polygon))
    if args.what == "visgraph":
        sys.stdout.write(graph_to_json(geometry.visibility_graph(p)))
        return EXIT_PASS
    if args.what == "blockers":
        sys.stdout.write(assignment_to_json(geometry.geometric_blockers(p)))
        return EXIT_PASS
    if args.what == "ve":
        sys.stdout.write(ve_to_json(geometry.ve_graph_geo(p)))
        return EXIT_PASS
    checks = _lemma_report(p)
    ok = not any(checks.values())
    sys.stdout.write(_dump({"checks": checks, "ok": ok}))
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_gen(args) -> int:
    if args.n < 3:
        sys.stderr.write("gen: need --n >= 3\n")
        return EXIT_INPUT
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for offset in range(args.count):
        seed = args.seed + offset
        p = geometry.random_simple_polygon(args.n, seed)
        path = out_dir / f"polygon_n{args.n}_seed{seed}.json"
        path.write_text(geometry.polygon_to_json(p))
        sys.stdout.write(f"{path}\n")
    return EXIT_PASS


CORPUS_CHECKS = (
    "unique_blockers",
    "nc_clean",
    "ve_match",
    "ve_characterization",
    "edge_vertex",
    "gap_cases",
    "recognized",
)


def check_polygon(p: geometry.Polygon, budget: int = recognizer.DEFAULT_NODE_BUDGET) -> dict[str, bool]:
    """Run the full ground-truth property battery on one polygon."""
    g = geometry.visibility_graph(p)
    results = {}
    results["unique_blockers"] = not geometry.check_blocker_uniqueness(p)
    a_geo = geometry.geometric_blockers(p)
    results["nc_clean"] = not check_conditions(g, a_geo)
    ve_geo = geometry.ve_graph_geo(p)
    results["ve_match"] = build_ve(g, a_geo, check=False) == ve_geo
    cand = all_candidates(g)
    results["ve_characterization"] = not check_ve_characterization(ve_geo, g, cand)
    results["edge_vertex"] = not geometry.check_edge_vertex_visibility(p)
    results["gap_cases"] = not geometry.check_gap_witness_cases(p)
    verdict = recognizer.find_assignment(g, node_budget=budget)
    recognized = verdict.accepted
    if recognized:
        ve_found = build_ve(g, verdict.assignment or {}, check=False)
        recognized = not check_ve_characterization(ve_found, g, cand)
    results["recognized"] = recognized
    return results


def run_corpus(count: int, n_lo: int, n_hi: int, seed: int) -> dict:
    """Generate `count` polygons cycling n through [n_lo, n_hi] and run
    every check; aggregate per-check pass/fail counts."""
    span = n_hi - n_lo + 1
    tally = {name: {"pass": 0, "fail": 0} for name in CORPUS_CHECKS}
    failures = []
    for idx in range(count):
        n = n_lo + idx % span
        poly_seed = seed + idx
        p = geometry.random_simple_polygon(n, poly_seed)
        results = check_polygon(p)
        for name in CORPUS_CHECKS:
            ok = results[name]
            tally[name]["pass" if ok else "fail"] += 1
            if not ok:
                failures.append({"check": name, "n": n, "seed": poly_seed})
    failures.sort(key=lambda f: (f["seed"], f["check"]))
    return {
        "checks": tally,
        "count": count,
        "failures": failures,
        "first_failing_seed": failures[0]["seed"] if failures else None,
        "n_range": f"{n_lo}..{n_hi}",
        "seed": seed,
    }


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def cmd_corpus(args) -> int:
    n_lo, n_hi = _parse_range(args.n)
    if n_lo < 3 or n_hi < n_lo or args.count < 1:
        sys.stderr.write("corpus: need 3 <= n_lo <= n_hi and count >= 1\n")
        return EXIT_INPUT
    report = run_corpus(args.count, n_lo, n_hi, args.seed)
    sys.stdout.write(_dump(report))
    return EXIT_PASS if not report["failures"] else EXIT_FAIL


def cmd_export_dot(args) -> int:
    g = graph_from_json(_read(args.graph))
    lines = ["graph visibility {"]
    for i in range(g.n):
        lines.append(f"  {i};")
    for i, j in sorted(g.edges):
        if (j - i) % g.n == 1 or (i - j) % g.n == 1:
            lines.append(f"  {i} -- {j};")
        else:
            lines.append(f"  {i} -- {j} [style=dashed];")
    lines.append("}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_PASS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudovis",
        description="Recognize visibility graphs of pseudo-polygons and "
        "validate them against an exact polygon oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rec = sub.add_parser("recognize", help="decide a graph file")
    rec.add_argument("graph")
    rec.add_argument("--budget", type=int, default=recognizer.DEFAULT_NODE_BUDGET)
    rec.set_defaults(func=cmd_recognize)

    chk = sub.add_parser("check", help="verify an assignment against a graph")
    chk.add_argument("graph")
    chk.add_argument("assignment")
    chk.set_defaults(func=cmd_check)

    orc = sub.add_parser("oracle", help="ground-truth extraction from a polygon")
    orc.add_argument("what", choices=("visgraph", "blockers", "ve", "lemmas"))
    orc.add_argument("polygon")
    orc.set_defaults(func=cmd_oracle)

    gen = sub.add_parser("gen", help="generate random simple polygons")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--out", default=".")
    gen.set_defaults(func=cmd_gen)

    cor = sub.add_parser("corpus", help="run the property battery on a corpus")
    cor.add_argument("--count", type=int, required=True)
    cor.add_argument("--n", "--n-range", dest="n", required=True,
                     help="vertex count or range a..b")
    cor.add_argument("--seed", type=int, default=0)
    cor.set_defaults(func=cmd_corpus)

    dot = sub.add_parser("export-dot", help="DOT rendering of a graph file")
    dot.add_argument("graph")
    dot.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GenerationBudgetExceeded, SearchBudgetExceeded) as exc:
        sys.stderr.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (PseudovisError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
