"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 3] [--max-n 16]

Each row times one kernel on both backends, checks that their outputs are
identical and prints the speed-up.
"""

import argparse
import random
import sys
import time

from matroid_ultrametric import fixtures, kernels
from matroid_ultrametric.matroid import Matroid


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def workloads(max_n):
    for n in range(10, max_n + 1, 2):
        m = Matroid.uniform([str(i) for i in range(n)], n // 2)
        yield f"rank_table U({n // 2},{n})", "rank_table", (n, list(m.bases))
        rank = bytes(m._rank)
        yield f"minimal_dependent_sets U({n // 2},{n})", "minimal_dependent_sets", (n, rank)
        yield f"closed_sets U({n // 2},{n})", "closed_sets", (n, rank)

    rng = random.Random(0)
    for name, m in (("K5", fixtures.k5()), ("K6", fixtures.complete_graph("ABCDEF"))):
        keys = [rng.randrange(6) for _ in range(m.n)]
        batch = [keys] + [[rng.randrange(6) for _ in range(m.n)] for _ in range(199)]
        yield f"blue_keys {name} x200", "blue_keys", (m.n, list(m.cocircuits), batch)
        yield f"red_keys {name} x200", "red_keys", (m.n, list(m.circuits), batch)
        yield f"first_unique_max {name} x200", "first_unique_max", (list(m.circuits), batch)


def call(module, kernel, args):
    fn = getattr(module, kernel)
    if kernel in ("blue_keys", "red_keys"):
        n, sets, batch = args
        return lambda: [tuple(fn(n, sets, k)) for k in batch]
    if kernel == "first_unique_max":
        sets, batch = args
        return lambda: [fn(sets, k) for k in batch]
    if kernel == "rank_table":
        return lambda: bytes(fn(*args))
    return lambda: list(fn(*args))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=16)
    args = parser.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not built; run `pip install -e . --no-build-isolation` first")
        return 1
    py, cy = backends["python"], backends["cython"]

    print(f"{'kernel':<36}{'python s':>12}{'cython s':>12}{'speed-up':>10}")
    for label, kernel, kargs in workloads(args.max_n):
        tp, rp = best_of(args.repeat, call(py, kernel, kargs))
        tc, rc = best_of(args.repeat, call(cy, kernel, kargs))
        if rp != rc:
            print(f"{label}: backends disagree")
            return 2
        print(f"{label:<36}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
