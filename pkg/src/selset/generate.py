"""Seeded random instances: trees, unit interval sets and connected graphs.

Every generator draws from ``numpy.random.Generator(PCG64(seed))`` so the
same spec always yields the same instance and the same file bytes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import ColoredGraph, GraphError, format_graph
from .interval import UnitIntervalInstance, format_intervals

KINDS = ("random-tree", "random-unit-interval", "random-connected-graph")

DEFAULT_LENGTH = 10
DEFAULT_EDGE_PROB = 0.2
# extra edges are drawn per vertex pair, so general graphs stay small
MAX_GRAPH_N = 20000


@dataclass(frozen=True)
class GeneratorSpec:
    """``extra`` is the unit length L for intervals and the edge probability for graphs."""

    kind: str
    n: int
    c: int
    seed: int
    extra: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GraphError(f"unknown generator kind {self.kind!r}")
        if self.n < 1 or self.c < 1:
            raise GraphError("n and c must be positive")
        if self.c > self.n:
            raise GraphError(f"cannot use {self.c} colors on {self.n} vertices")
        if self.kind == "random-connected-graph" and self.n > MAX_GRAPH_N:
            raise GraphError(f"random connected graphs are limited to n <= {MAX_GRAPH_N}")
        if not 0 <= self.seed < 2**64:
            raise GraphError("seed must fit in 64 bits")
        if self.kind == "random-unit-interval" and self.extra is not None:
            if self.extra < 1 or self.extra != int(self.extra):
                raise GraphError("interval length must be a positive integer")
        if self.kind == "random-connected-graph" and self.extra is not None:
            if not 0 <= self.extra <= 1:
                raise GraphError("edge probability must lie in [0, 1]")

    @property
    def label(self) -> str:
        tail = "" if self.extra is None else f":{self.extra:g}"
        return f"{self.kind}:{self.n}:{self.c}:{self.seed}{tail}"


def parse_spec(text: str) -> GeneratorSpec:
    """``kind:n:c:seed[:extra]``."""
    parts = text.split(":")
    if len(parts) not in (4, 5):
        raise GraphError(f"generator spec {text!r} is not kind:n:c:seed[:extra]")
    try:
        n, c, seed = int(parts[1]), int(parts[2]), int(parts[3])
        extra = float(parts[4]) if len(parts) == 5 else None
    except ValueError:
        raise GraphError(f"generator spec {text!r} has a non-numeric field") from None
    return GeneratorSpec(parts[0], n, c, seed, extra)


def _colors(rng: np.random.Generator, n: int, c: int) -> np.ndarray:
    colors = rng.integers(1, c + 1, size=n)
    # pin each color to a distinct random vertex so none goes unused
    colors[rng.permutation(n)[:c]] = np.arange(1, c + 1)
    return colors


def random_tree(spec: GeneratorSpec) -> ColoredGraph:
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    child = np.arange(2, n + 1, dtype=np.int64)
    parent = rng.integers(1, child)  # uniform over 1..child-1
    return ColoredGraph.from_edges(n, _colors(rng, n, spec.c), np.stack([parent, child], axis=1))


def random_unit_interval(spec: GeneratorSpec) -> UnitIntervalInstance:
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    length = int(spec.extra) if spec.extra is not None else DEFAULT_LENGTH
    gaps = rng.integers(0, length + 1, size=n - 1)
    lefts = np.concatenate([[0], np.cumsum(gaps)])
    lefts = lefts[rng.permutation(n)]
    return UnitIntervalInstance(lefts, _colors(rng, n, spec.c), length)


def random_connected_graph(spec: GeneratorSpec) -> ColoredGraph:
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    p = spec.extra if spec.extra is not None else DEFAULT_EDGE_PROB
    label = rng.permutation(n) + 1
    child = np.arange(1, n, dtype=np.int64)
    tree = np.stack([label[rng.integers(0, child)], label[child]], axis=1)
    iu, ju = np.triu_indices(n, k=1)
    pairs = np.stack([iu + 1, ju + 1], axis=1)
    extra = pairs[rng.random(pairs.shape[0]) < p]
    edges = np.concatenate([np.sort(tree, axis=1), extra])
    edges = np.unique(edges, axis=0)
    return ColoredGraph.from_edges(n, _colors(rng, n, spec.c), edges)


def generate(spec: GeneratorSpec) -> ColoredGraph | UnitIntervalInstance:
    if spec.kind == "random-tree":
        return random_tree(spec)
    if spec.kind == "random-unit-interval":
        return random_unit_interval(spec)
    return random_connected_graph(spec)


def generate_text(spec: GeneratorSpec) -> str:
    inst = generate(spec)
    comment = f"generated {spec.label}"
    if isinstance(inst, UnitIntervalInstance):
        return format_intervals(inst, comment)
    return format_graph(inst, comment)
