"""Compiled kernels against their pure-Python fallbacks.

    python3 benchmarks/bench_backends.py [--runs 5] [--out results.json]

Times the loop-nest interpreter (Cython VM vs. the Python VM) on a few
programs and the fused AdamW update (Cython vs. chunked numpy) on a
parameter vector the size of the cost model.
"""
import argparse
import json
import statistics
import time

import numpy as np

from tinysched import exec as ex, nn
from tinysched.generator import GeneratorConfig, generate_program
from tinysched.model import CostModel


def _programs():
    small = GeneratorConfig(min_iterations=2**10, max_iterations=2**12)
    return [(f"generated seed {s}", generate_program(small, s)) for s in (0, 1, 2)]


def _median_ns(fn, runs):
    fn()
    times = []
    for _ in range(runs):
        t0 = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - t0)
    return statistics.median(times)


def bench_vm(runs):
    rows = []
    for name, p in _programs():
        inputs = ex.make_inputs(p)
        per = {}
        for backend in ("cython", "python"):
            executor = ex.Executor(workers=1, backend=backend)
            per[backend] = _median_ns(lambda: executor.run(p, inputs), runs)
        rows.append({"case": f"vm {name}", **per})
    return rows


def bench_adamw(runs):
    store = CostModel(seed=0).params
    f = store._flat
    f["grad"][:] = np.random.default_rng(0).normal(size=f["grad"].size)
    args = (1e-3, 0.9, 0.999, 1e-8, 0.0075, 0.1, 0.001)
    per = {}
    for name, kernel in (("cython", nn._adamw_kernel), ("python", nn._adamw_numpy)):
        per[name] = _median_ns(lambda: kernel(f["theta"], f["grad"], f["m"], f["v"], *args), runs)
    return [{"case": f"adamw {f['theta'].size} params", **per}]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--runs", type=int, default=5)
    ap.add_argument("--out")
    args = ap.parse_args(argv)
    if ex.BACKEND != "cython" or nn._adamw_kernel is None:
        ap.error("the compiled extensions are not built (pip install -e . --no-build-isolation)")
    rows = bench_vm(args.runs) + bench_adamw(args.runs)
    print(f"{'case':32} {'cython ms':>10} {'python ms':>10} {'ratio':>7}")
    for r in rows:
        r["speedup"] = r["python"] / r["cython"]
        print(f"{r['case']:32} {r['cython'] / 1e6:10.3f} {r['python'] / 1e6:10.3f} {r['speedup']:7.1f}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
