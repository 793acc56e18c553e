"""Compare the compiled kernels with their numpy fallbacks.

For each kernel and tree size, prints best-of-k wall time for:
  numba   the compiled loop in selset.kernels.loops
  numpy   the vectorized version in selset.kernels.vectorized
  python  the same loop run by the interpreter (small sizes only)

Run: python benchmarks/bench_numba.py [--sizes 10000 100000 1000000] [--repeats 5]
"""

import argparse
import time

import numpy as np

from selset._accel import NUMBA_ENABLED
from selset.generate import GeneratorSpec, generate
from selset.kernels import loops, vectorized

PYTHON_LIMIT = 20000


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_calls(g):
    tp = loops.tree_prepare(g.indptr, g.indices, g.colors, g.n, 1)
    return {
        "rooted_bfs": lambda k: k.rooted_bfs(g.indptr, g.indices, g.n, 1),
        "block_labels": lambda k: k.block_labels(g.indptr, g.indices, g.colors, g.n),
        "boundary_flags": lambda k: k.boundary_flags(g.indptr, g.indices, g.colors, g.n),
        "tree_prepare": lambda k: k.tree_prepare(g.indptr, g.indices, g.colors, g.n, 1),
        "tree_select": lambda k: k.tree_select(*tp, g.n),
    }


class _PyFuncs:
    """Expose ``loops.X.py_func`` under the name ``X``."""

    def __getattr__(self, name):
        return getattr(loops, name).py_func


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10**4, 10**5, 10**6])
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    if not NUMBA_ENABLED:
        raise SystemExit("numba is disabled (SELSET_DISABLE_NUMBA set or numba missing)")

    print(f"{'kernel':<16}{'n':>9}{'numba ms':>11}{'numpy ms':>11}{'python ms':>11}{'numpy/numba':>13}")
    for n in args.sizes:
        g = generate(GeneratorSpec("random-tree", n, 3, 1))
        pyf = _PyFuncs()
        for name, call in kernel_calls(g).items():
            call(loops)  # compile outside the timed region
            fast = best_of(lambda: call(loops), args.repeats)
            vec = best_of(lambda: call(vectorized), args.repeats)
            py = best_of(lambda: call(pyf), 1) if n <= PYTHON_LIMIT else float("nan")
            print(f"{name:<16}{n:>9}{fast * 1e3:>11.2f}{vec * 1e3:>11.2f}{py * 1e3:>11.1f}{vec / fast:>13.1f}")
    # results must match regardless of path
    g = generate(GeneratorSpec("random-tree", 5000, 3, 2))
    a = loops.tree_prepare(g.indptr, g.indices, g.colors, g.n, 1)
    b = vectorized.tree_prepare(g.indptr, g.indices, g.colors, g.n, 1)
    sel = [np.flatnonzero(k.tree_select(*a, g.n)) for k in (loops, vectorized)]
    assert all(np.array_equal(x, y) for x, y in zip(a, b)) and np.array_equal(*sel)
    print("outputs agree")


if __name__ == "__main__":
    main()
