"""Compare the compiled mod-p kernels against the pure-Python fallback.

Run:  python3 benchmarks/bench_kernels.py
"""

import random
import time

from fpoly import _modp_py

try:
    from fpoly import _modp_c
except ImportError:
    _modp_c = None


def random_matrix(rng, rows, cols, p):
    return tuple(tuple(rng.randrange(p) for _ in range(cols))
                 for _ in range(rows))


def bench(label, fn, repeats=5):
    best = min(timeit(fn) for _ in range(repeats))
    print(f"  {label:<28} {best * 1000:8.2f} ms")
    return best


def timeit(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    rng = random.Random(0)
    p = 101
    a = random_matrix(rng, 60, 60, p)
    b = random_matrix(rng, 60, 60, p)
    tall = random_matrix(rng, 200, 40, p)

    backends = [("pure python", _modp_py)]
    if _modp_c is not None:
        backends.append(("cython", _modp_c))
    else:
        print("compiled backend not available; benchmarking fallback only")

    results = {}
    for name, mod in backends:
        print(f"{name}:")
        results[name] = {
            "matmul 60x60 x200": bench(
                "matmul 60x60 x200",
                lambda m=mod: [m.matmul(a, b, p) for _ in range(200)]),
            "rref 200x40 x200": bench(
                "rref 200x40 x200",
                lambda m=mod: [m.rref(tall, 40, p) for _ in range(200)]),
            "rank 200x40 x200": bench(
                "rank 200x40 x200",
                lambda m=mod: [m.rank(tall, 40, p) for _ in range(200)]),
        }

    if len(results) == 2:
        print("speedup (pure / cython):")
        for key in results["cython"]:
            ratio = results["pure python"][key] / results["cython"][key]
            print(f"  {key:<28} {ratio:6.1f}x")

    # agreement check on the benchmarked inputs
    if _modp_c is not None:
        assert _modp_c.matmul(a, b, p) == _modp_py.matmul(a, b, p)
        assert _modp_c.rref(tall, 40, p) == _modp_py.rref(tall, 40, p)
        print("backends agree on benchmark inputs")


if __name__ == "__main__":
    main()
