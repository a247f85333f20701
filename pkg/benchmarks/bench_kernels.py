#!/usr/bin/env python3
"""Benchmark the compiled blade kernels against the pure-Python fallback.

Times the raw kernel (blade products on random masks) and a full
multivector workload (random geometric products).  The multivector run
swaps the functions on cliffsig.kernels in place, which works because
every call site looks them up through the module at call time.

Usage: python benchmarks/bench_kernels.py [--n 6] [--calls 200000] [--products 2000]
"""

import argparse
import random
import time

import cliffsig._kernels_py as py_kernels
from cliffsig import Signature, geometric_product, kernels
from cliffsig.verify import random_multivector

try:
    import cliffsig._kernels as cy_kernels
except ImportError:
    cy_kernels = None

KERNEL_FNS = (
    "grade",
    "reorder_sign",
    "blade_metric_sign",
    "blade_mul",
    "blade_wedge",
    "blade_left_contract",
    "blade_right_contract",
)


def bench_raw(mod, pairs, neg_mask, repeat):
    fn = mod.blade_mul
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for a, b in pairs:
            fn(a, b, neg_mask)
        best = min(best, time.perf_counter() - start)
    return best


def bench_products(mod, mvs, repeat):
    saved = {name: getattr(kernels, name) for name in KERNEL_FNS}
    try:
        for name in KERNEL_FNS:
            setattr(kernels, name, getattr(mod, name))
        best = float("inf")
        for _ in range(repeat):
            start = time.perf_counter()
            for a, b in mvs:
                geometric_product(a, b)
            best = min(best, time.perf_counter() - start)
        return best
    finally:
        for name, fn in saved.items():
            setattr(kernels, name, fn)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6, help="algebra dimension p+q")
    ap.add_argument("--calls", type=int, default=200_000)
    ap.add_argument("--products", type=int, default=2_000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    sig = Signature(args.n - args.n // 2, args.n // 2)
    rng = random.Random(args.seed)
    size = 1 << sig.n
    pairs = [(rng.randrange(size), rng.randrange(size)) for _ in range(args.calls)]
    mvs = [
        (random_multivector(rng, sig, terms=6), random_multivector(rng, sig, terms=6))
        for _ in range(args.products)
    ]

    backends = [("python", py_kernels)]
    if cy_kernels is not None:
        backends.append(("cython", cy_kernels))
    else:
        print("compiled extension not available; timing the fallback only")

    print(f"algebra {sig}; {args.calls} blade products, {args.products} multivector products")
    results = {}
    for name, mod in backends:
        raw = bench_raw(mod, pairs, sig.neg_mask, args.repeat)
        prod = bench_products(mod, mvs, args.repeat)
        results[name] = (raw, prod)
        print(
            f"  {name:>7}: blade_mul {raw:8.4f}s "
            f"({args.calls / raw / 1e6:6.2f} M/s) | geometric {prod:8.4f}s"
        )
    if len(results) == 2:
        raw_py, prod_py = results["python"]
        raw_cy, prod_cy = results["cython"]
        print(
            f"  speedup: blade_mul x{raw_py / raw_cy:.2f}, "
            f"geometric x{prod_py / prod_cy:.2f}"
        )


if __name__ == "__main__":
    main()
