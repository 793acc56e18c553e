"""Seeded instance families shared by several test modules."""

import numpy as np

from selset.generate import GeneratorSpec, generate


def make(kind, n, c, seed, extra=None):
    return generate(GeneratorSpec(kind, n, c, seed, extra))


def small_trees(count, seed=0, nmin=4, nmax=14, cmin=2, cmax=4):
    rng = np.random.default_rng(seed)
    for i in range(count):
        n = int(rng.integers(nmin, nmax + 1))
        c = int(rng.integers(cmin, min(cmax, n) + 1))
        yield make("random-tree", n, c, seed * 100003 + i)


def small_intervals(count, seed=0, nmin=1, nmax=14, cmin=1, cmax=4):
    rng = np.random.default_rng(seed)
    for i in range(count):
        n = int(rng.integers(nmin, nmax + 1))
        c = int(rng.integers(cmin, min(cmax, n) + 1))
        length = int(rng.integers(1, 4))
        yield make("random-unit-interval", n, c, seed * 100003 + i, length)


def small_graphs(count, seed=0, nmin=3, nmax=12, cmin=2, cmax=4):
    rng = np.random.default_rng(seed)
    for i in range(count):
        n = int(rng.integers(nmin, nmax + 1))
        c = int(rng.integers(cmin, min(cmax, n) + 1))
        p = float(rng.choice([0.1, 0.2, 0.35]))
        yield make("random-connected-graph", n, c, seed * 100003 + i, p)
