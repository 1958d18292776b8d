"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--trials N] [--repeat R]

Prints per-call timings for the arithmetic kernels in both scalar models and
an end-to-end fuzz run per backend.
"""
from __future__ import annotations

import argparse
import random
import time
import timeit

from necktie import kernels
from necktie.fuzz import FuzzPlan, fuzz
from necktie.scalars import MERSENNE_61
from necktie.theorems import Status


def _workload(p, rng):
    vs = [tuple(rng.randint(-100, 100) for _ in range(3)) for _ in range(6)]
    if p:
        vs = [tuple(x % p for x in v) for v in vs]
    rows = [kernels.veronese(v, p) for v in vs[:5]]
    return {
        "cross": lambda: kernels.cross(vs[0], vs[1], p),
        "det3": lambda: kernels.det3(vs[0], vs[1], vs[2], p),
        "kernel5": lambda: kernels.kernel5(rows, p),
        "det6_veronese": lambda: kernels.det6_veronese(vs, p),
    }


def bench_kernels(repeat: int) -> None:
    print(f"{'kernel':<15}{'field':<10}" + "".join(f"{b:>14}" for b in kernels.available_backends()))
    for p, label in ((0, "rational"), (MERSENNE_61, "prime")):
        rows = {}
        for backend in kernels.available_backends():
            kernels.use_backend(backend)
            for name, fn in _workload(p, random.Random(7)).items():
                n = 2000
                best = min(timeit.repeat(fn, number=n, repeat=repeat)) / n
                rows.setdefault(name, []).append(best)
        for name, ts in rows.items():
            print(f"{name:<15}{label:<10}" + "".join(f"{t * 1e6:>12.2f}us" for t in ts))


def bench_fuzz(trials: int, repeat: int) -> None:
    for backend in kernels.available_backends():
        kernels.use_backend(backend)
        for field in ("rational", "prime"):
            times = []
            for _ in range(repeat):
                t0 = time.perf_counter()
                report = fuzz("all", FuzzPlan(trials=trials, field=field))
                times.append(time.perf_counter() - t0)
            dt = min(times)
            print(f"fuzz all x{trials:<6}{backend:<8}{field:<10}{dt:8.2f}s  violated={report.count(Status.VIOLATED)}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    previous = kernels.BACKEND
    try:
        bench_kernels(args.repeat)
        bench_fuzz(args.trials, max(1, args.repeat // 2))
    finally:
        kernels.use_backend(previous)


if __name__ == "__main__":
    main()
