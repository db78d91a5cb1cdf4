#!/usr/bin/env python3
"""Benchmark the jit kernels against the pure-numpy fallback.

Runs each workload in a fresh subprocess with CERINGS_BACKEND pinned, so
the numbers reflect exactly what a user of either backend sees (the jit
timings are taken after a warmup call, so compilation is not billed).

    python benchmarks/bench_backends.py            # compare both backends
    python benchmarks/bench_backends.py --backend numpy --workload radical
"""

import argparse
import json
import os
import subprocess
import sys
import time

WORKLOADS = ("radical", "essentiality", "idempotents", "locality", "probe")


def run_workload(name: str, repeats: int) -> float:
    import numpy as np

    from cerings import kernels
    from cerings.core import exterior_algebra, matrix_algebra
    from cerings.structure import center

    big, _ = exterior_algebra(5, 3)     # 390625 elements
    m2 = matrix_algebra(2, 2)
    c = center(big)
    c_rows = np.ascontiguousarray(c.basis)
    c_pivs = np.asarray(c.pivots, dtype=np.int64)
    j_rows = kernels.radical_scan(big.table, big.unit, big.p, big.cardinality)
    j_pivs = np.array([int(np.flatnonzero(r)[0]) for r in j_rows],
                      dtype=np.int64)

    def radical():
        kernels.radical_scan(big.table, big.unit, big.p, big.cardinality)

    def essentiality():
        kernels.ce_scan(big.table, c_rows, c_pivs, big.p, big.cardinality)

    def idempotents():
        kernels.idempotent_mask(big.table, big.p, big.cardinality)

    def locality():
        # the ring is local, so this walks every representative off the
        # radical and proves each one a unit
        kernels.nonunit_outside_scan(big.table, j_rows, j_pivs,
                                     big.p, big.cardinality)

    def probe():
        kernels.quasi_probe_scan(m2.table, m2.unit, m2.p, 2, m2.cardinality)

    fn = locals()[name]
    fn()  # warmup: jit compilation, page faults
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_in_subprocess(backend: str, workload: str, repeats: int) -> float:
    env = dict(os.environ, CERINGS_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, __file__, "--backend", backend,
         "--workload", workload, "--repeats", str(repeats), "--emit-json"],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)["seconds"]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--backend", choices=("numba", "numpy"))
    parser.add_argument("--workload", choices=WORKLOADS + ("all",),
                        default="all")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--emit-json", action="store_true")
    args = parser.parse_args()

    if args.backend and args.workload != "all":
        seconds = run_workload(args.workload, args.repeats)
        if args.emit_json:
            print(json.dumps({"seconds": seconds}))
        else:
            print(f"{args.backend:6} {args.workload:12} {seconds * 1e3:9.1f} ms")
        return 0

    names = WORKLOADS if args.workload == "all" else (args.workload,)
    print(f"{'workload':12} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    print("-" * 44)
    for name in names:
        t_nb = run_in_subprocess("numba", name, args.repeats)
        t_np = run_in_subprocess("numpy", name, args.repeats)
        print(f"{name:12} {t_nb * 1e3:8.1f}ms {t_np * 1e3:8.1f}ms "
              f"{t_np / t_nb:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
