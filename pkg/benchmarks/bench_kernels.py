"""Time the numba and numpy Cayley-table kernels side by side.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from sga import _kernels
from sga.tables import DirectProduct, Dihedral, GraphExtension, Metacyclic, Symmetric, count_subgroups, realize

CASES = {
    "S4 (24)": Symmetric(4),
    "D8 x S4 (192)": DirectProduct(Dihedral(8), Symmetric(4)),
    "[C7]C3:2 x S3 (252)": DirectProduct(GraphExtension(Metacyclic(7, 3, 2), (-1, 1)), Symmetric(3)),
}


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def use(impl):
    _kernels.closure = impl.closure
    _kernels.is_associative = impl.is_associative
    _kernels.element_orders = impl.element_orders


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    impls = [_kernels.numpy_impl] + ([_kernels.numba_impl] if _kernels.numba_impl else [])
    if len(impls) == 1:
        print("numba is not installed; timing numpy only")

    # warm up the JIT outside the timed region
    warm = realize(Symmetric(3))
    for impl in impls:
        impl.is_associative(warm.mul)
        impl.element_orders(warm.mul, warm.identity)
        impl.closure(warm.mul, np.array([1]), np.ones(warm.n, dtype=np.bool_))

    header = f"{'group':<22}{'kernel':<16}" + "".join(f"{impl.name:>12}" for impl in impls)
    print(header)
    print("-" * len(header))
    for label, recipe in CASES.items():
        g = realize(recipe)
        seed = np.zeros(g.n, dtype=np.bool_)
        seed[g.identity] = True
        gens = np.array([1, g.n // 2], dtype=np.int64)
        rows = {
            "associativity": lambda impl: impl.is_associative(g.mul),
            "element orders": lambda impl: impl.element_orders(g.mul, g.identity),
            "closure": lambda impl: impl.closure(g.mul, gens, seed),
        }
        for kernel, call in rows.items():
            cells = "".join(f"{best_of(lambda: call(impl), args.repeat) * 1e3:>10.3f}ms" for impl in impls)
            print(f"{label:<22}{kernel:<16}{cells}")
        cells = ""
        for impl in impls:
            use(impl)
            cells += f"{best_of(lambda: count_subgroups(g), 1) * 1e3:>10.1f}ms"
        print(f"{label:<22}{'all subgroups':<16}{cells}")
    use(_kernels.active)


if __name__ == "__main__":
    main()
