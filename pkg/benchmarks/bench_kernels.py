#!/usr/bin/env python3
"""Benchmark the two kernel backends on representative workloads.

Run ``python3 benchmarks/bench_kernels.py`` to time the compiled (numba) and
interpreted (pure numpy/python) paths in separate subprocesses and print the
speedups.  ``--backend current`` times only the backend selected by the
environment (see ``HOMCUT_DISABLE_NUMBA``).
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def workloads():
    from homcut.cuts import enumerate_factor_cuts, find_factor_cut
    from homcut.gadgets import analyze_target, build_factorcut, build_surjective_instance
    from homcut.generator import random_connected_graph
    from homcut.graph import complete_graph, path_graph
    from homcut.hom import PLAIN, SURJECTIVE, enumerate_all, solve
    from homcut.suites import C4_TWO_LOOPS, DIAMOND_TWO_LOOPS

    g7 = random_connected_graph(7, 0.55, seed=5)
    fc = build_factorcut(g7, 0, 1, 2, 3)  # 31-vertex two-clique instance

    ta_c4 = analyze_target(C4_TWO_LOOPS)
    ta_dia = analyze_target(DIAMOND_TWO_LOOPS)
    pos = build_surjective_instance(ta_c4, path_graph(4), 0, 3)  # 18 vertices
    neg = build_surjective_instance(ta_dia, complete_graph(3), 0, 1)  # 17 vertices
    small = build_surjective_instance(ta_c4, path_graph(3), 0, 2)  # 12 vertices

    return [
        ("cut_enumerate_31v_(2,3)", 5,
         lambda: enumerate_factor_cuts(fc.graph, 2, 3, max_n=fc.graph.n)),
        ("cut_find_unsat_K4x2", 20,
         lambda: find_factor_cut(_two_k4s(), 1, 1)),
        ("hom_surjective_sat_18v", 5,
         lambda: solve(pos.graph, C4_TWO_LOOPS, SURJECTIVE)),
        ("hom_surjective_unsat_17v", 3,
         lambda: solve(neg.graph, DIAMOND_TWO_LOOPS, SURJECTIVE)),
        ("hom_enumerate_all_12v", 3,
         lambda: enumerate_all(small.graph, C4_TWO_LOOPS, PLAIN, limit=200_000)),
    ]


def _two_k4s():
    # two 4-cliques joined by two edges sharing an endpoint: no matching cut
    from homcut.graph import Graph
    from itertools import combinations

    edges = list(combinations(range(4), 2)) + list(combinations(range(4, 8), 2))
    edges += [(0, 4), (0, 5)]
    return Graph.build(8, edges)


def run_current() -> dict:
    import homcut

    results = {"backend": homcut.BACKEND, "timings": {}}
    for name, reps, fn in workloads():
        fn()  # warm-up (and kernel compilation, if any)
        start = time.perf_counter()
        for _ in range(reps):
            fn()
        results["timings"][name] = (time.perf_counter() - start) / reps
    return results


def run_compare() -> int:
    rows = {}
    for label, flag in (("numba", "0"), ("python", "1")):
        proc = subprocess.run(
            [sys.executable, __file__, "--backend", "current", "--json"],
            capture_output=True, text=True,
            env={**os.environ, "HOMCUT_DISABLE_NUMBA": flag},
        )
        if proc.returncode != 0:
            print(proc.stderr, file=sys.stderr)
            return 1
        rows[label] = json.loads(proc.stdout)
    if rows["numba"]["backend"] != "numba":
        print("warning: numba not importable; both runs are interpreted")
    width = max(len(k) for k in rows["numba"]["timings"])
    print(f"{'workload':<{width}}  {'numba':>10}  {'python':>10}  {'speedup':>8}")
    for name in rows["numba"]["timings"]:
        tn = rows["numba"]["timings"][name]
        tp = rows["python"]["timings"][name]
        print(f"{name:<{width}}  {tn * 1e3:>8.2f}ms  {tp * 1e3:>8.2f}ms  {tp / tn:>7.1f}x")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--backend", choices=["compare", "current"], default="compare")
    parser.add_argument("--json", action="store_true", help="emit raw JSON")
    args = parser.parse_args()
    if args.backend == "current":
        results = run_current()
        if args.json:
            print(json.dumps(results))
        else:
            print(f"backend: {results['backend']}")
            for name, secs in results["timings"].items():
                print(f"  {name}: {secs * 1e3:.2f} ms")
        return 0
    return run_compare()


if __name__ == "__main__":
    sys.exit(main())
