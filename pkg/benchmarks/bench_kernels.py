"""Benchmark the pure-Python search kernels against the compiled twin.

Runs the two hot workloads through every importable backend and prints a
table of wall times and speedups:

    python benchmarks/bench_kernels.py [--repeat N]

Workloads:
* factor refutation: the exhaustive proof that the 7-regular 54-vertex
  counterexample graph has no {1,6}-factor (block searches dominate);
* exact coloring: conflict-free chromatic number of the 3-regular
  mixed-size gadget on 24 vertices (backtracking dominates).
"""

from __future__ import annotations

import argparse
import time

from cfhyper.constructions import build_g_tr, k4e_gadget
from cfhyper.kernels import available_backends


def bench_factor(impl) -> None:
    import cfhyper.factors as factors

    original = factors.kernels.solve_degree_constrained
    factors.kernels.solve_degree_constrained = impl.solve_degree_constrained
    try:
        g, _ = build_g_tr(1, 7)
        result = factors.find_ab_factor(g, 1, 6)
        assert result is None
    finally:
        factors.kernels.solve_degree_constrained = original


def bench_chi_cf(impl) -> None:
    h = k4e_gadget(12)
    edges0 = [tuple(v - 1 for v in e) for e in h.edges]
    for k in (3, 4):
        colors, _ = impl.color_search(h.n, edges0, k, impl.CONFLICT_FREE)
        assert (colors is None) == (k == 3)


WORKLOADS = [
    ("{1,6}-factor refutation, 54 vertices", bench_factor),
    ("exact chi_cf of the 24-vertex gadget", bench_chi_cf),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="best-of-N timing (default 3)")
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(sorted(backends))}")
    for label, workload in WORKLOADS:
        print(f"\n{label}")
        timings = {}
        for name in sorted(backends):
            impl = backends[name]
            best = min(
                _timed(workload, impl) for _ in range(args.repeat))
            timings[name] = best
            print(f"  {name:>9}: {best * 1000:9.2f} ms")
        if "pure" in timings and "compiled" in timings:
            ratio = timings["pure"] / timings["compiled"]
            print(f"  {'speedup':>9}: {ratio:9.1f} x")


def _timed(workload, impl) -> float:
    start = time.perf_counter()
    workload(impl)
    return time.perf_counter() - start


if __name__ == "__main__":
    main()
