"""Benchmark the compiled kernels against the pure-Python fallback.

Runs representative workloads (series products, matrix products, quotient
algebra products, and the end-to-end operations built from them) under
both backends and prints per-op timings with the speedup.

    python3 benchmarks/bench_backends.py [--fast]
"""

import argparse
import random
import time

from morava3 import DeformationElement, PowerOpContext, PrecisionProfile, backend
from morava3.matrices import MatrixE0

PROF = PrecisionProfile(24, 16)
PROP = PrecisionProfile(12, 10)


def rand_series(rng, profile):
    mod = profile.modulus
    return DeformationElement(
        profile, [(rng.randrange(mod), rng.randrange(mod)) for _ in range(profile.h_deg)]
    )


def rand_matrix(rng, profile, n=8):
    return MatrixE0([[rand_series(rng, profile) for _ in range(n)] for _ in range(n)])


def build_workloads(fast):
    rng = random.Random(2024)
    x = rand_series(rng, PROF)
    y = rand_series(rng, PROF)
    mx = rand_matrix(rng, PROF)
    my = rand_matrix(rng, PROF)
    xp = rand_series(rng, PROP)

    # lazily built per backend: contexts bake kernel results in
    state = {}

    def ctx24():
        if "ctx24" not in state:
            state["ctx24"] = PowerOpContext(PROF)
        return state["ctx24"]

    def ctx12():
        if "ctx12" not in state:
            state["ctx12"] = PowerOpContext(PROP)
        return state["ctx12"]

    def reset():
        state.clear()

    f_alg = [None]

    def alg_elems():
        if f_alg[0] is None:
            alg = ctx24().algebra_f
            f_alg[0] = (
                alg.element([rand_series(random.Random(1), PROF) for _ in range(8)]),
                alg.element([rand_series(random.Random(2), PROF) for _ in range(8)]),
            )
        return f_alg[0]

    def reset_all():
        reset()
        f_alg[0] = None

    scale = 10 if fast else 1
    workloads = [
        ("series mul (24,16)", lambda: x * y, 2000 // scale, 400 // scale),
        ("matrix mul 8x8 (24,16)", lambda: mx * my, 40 // scale, 2),
        ("algebra mul rank 8 (24,16)", lambda: alg_elems()[0] * alg_elems()[1], 200 // scale, 10),
        ("context build (24,16)", lambda: PowerOpContext(PROF), 10 // scale, 1),
        ("delta, algebra route (24,16)", lambda: ctx24().delta(x), 50 // scale, 2),
        ("delta, matrix route (24,16)", lambda: ctx24().delta_via_b(x), 20 // scale, 1),
        ("delta, algebra route (12,10)", lambda: ctx12().delta(xp), 200 // scale, 10),
    ]
    return workloads, reset_all


def time_workload(fn, reps):
    best = None
    for _ in range(3):
        start = time.perf_counter()
        for _ in range(reps):
            fn()
        elapsed = (time.perf_counter() - start) / reps
        best = elapsed if best is None else min(best, elapsed)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fast", action="store_true", help="fewer repetitions")
    args = parser.parse_args()

    modes = ["python"]
    if backend.HAVE_COMPILED:
        modes.insert(0, "compiled")
    else:
        print("note: compiled kernels are not built; timing the fallback only\n")

    workloads, reset_all = build_workloads(args.fast)
    results = {}
    for mode in modes:
        backend.set_backend(mode)
        reset_all()
        for name, fn, reps_c, reps_p in workloads:
            reps = max(1, reps_c if mode == "compiled" else reps_p)
            results.setdefault(name, {})[mode] = time_workload(fn, reps)
    backend.set_backend("auto")

    width = max(len(name) for name, *_ in workloads)
    if "compiled" in modes:
        print(f"{'workload':<{width}}  {'compiled':>12}  {'python':>12}  {'speedup':>8}")
        for name, *_ in workloads:
            tc = results[name]["compiled"]
            tp = results[name]["python"]
            print(f"{name:<{width}}  {tc * 1e3:>10.3f} ms  {tp * 1e3:>10.3f} ms  {tp / tc:>7.1f}x")
    else:
        print(f"{'workload':<{width}}  {'python':>12}")
        for name, *_ in workloads:
            print(f"{name:<{width}}  {results[name]['python'] * 1e3:>10.3f} ms")


if __name__ == "__main__":
    main()
