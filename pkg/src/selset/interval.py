"""Unit interval instances and the left-to-right exact solver.

Intervals are closed, all of integer length ``L``, given by integer left
endpoints. Two intervals are adjacent iff their left endpoints differ by at
most ``L`` (touching counts).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import ColoredGraph, DisconnectedGraphError, GraphError, GraphFormatError, SelectiveSubset


@dataclass(frozen=True, eq=False)
class UnitIntervalInstance:
    lefts: np.ndarray  # lefts[i] belongs to interval i + 1
    colors: np.ndarray
    length: int

    def __post_init__(self):
        lefts = np.asarray(self.lefts, dtype=np.int64)
        colors = np.asarray(self.colors, dtype=np.int64)
        object.__setattr__(self, "lefts", lefts)
        object.__setattr__(self, "colors", colors)
        if lefts.ndim != 1 or lefts.size == 0:
            raise GraphError("instance needs at least one interval")
        if colors.shape != lefts.shape:
            raise GraphError("one color per interval required")
        if self.length < 1:
            raise GraphError("unit length must be a positive integer")
        if colors.min() < 1:
            raise GraphError("color ids start at 1")
        used = np.unique(colors)
        if used.size != used[-1]:
            raise GraphError("color ids must be contiguous from 1")

    @property
    def n(self) -> int:
        return int(self.lefts.size)

    @property
    def c(self) -> int:
        return int(self.colors.max())

    def sorted_order(self) -> np.ndarray:
        """Interval ids (1-based) by (left endpoint, id)."""
        return np.lexsort((np.arange(self.n), self.lefts)) + 1

    def is_connected(self) -> bool:
        s = np.sort(self.lefts)
        return bool(np.all(np.diff(s) <= self.length))

    def __eq__(self, other):
        if not isinstance(other, UnitIntervalInstance):
            return NotImplemented
        return (
            self.length == other.length
            and np.array_equal(self.lefts, other.lefts)
            and np.array_equal(self.colors, other.colors)
        )


def interval_edges(inst: UnitIntervalInstance) -> np.ndarray:
    """All overlapping pairs as an (m, 2) array of 1-based ids."""
    order = inst.sorted_order()
    lefts = inst.lefts[order - 1]
    hi = np.searchsorted(lefts, lefts + inst.length, side="right")
    cnt = hi - np.arange(inst.n) - 1
    i = np.repeat(np.arange(inst.n), cnt)
    j = i + 1 + (np.arange(cnt.sum()) - np.repeat(np.cumsum(cnt) - cnt, cnt))
    return np.stack([order[i], order[j]], axis=1)


def build_interval_graph(inst: UnitIntervalInstance) -> ColoredGraph:
    if not inst.is_connected():
        raise DisconnectedGraphError("interval graph is not connected")
    return ColoredGraph.from_edges(inst.n, inst.colors, interval_edges(inst))


def solve_unit_interval(inst: UnitIntervalInstance) -> SelectiveSubset:
    """Minimum selective subset of a connected unit interval graph.

    O(n) after sorting by left endpoint; works on the representation directly
    without materializing edges.
    """
    if not inst.is_connected():
        raise DisconnectedGraphError("interval graph is not connected")
    order = inst.sorted_order()
    lefts = np.ascontiguousarray(inst.lefts[order - 1])
    colors = np.ascontiguousarray(inst.colors[order - 1])
    _, _, flags, comp, ncomp = kernels.interval_structure(lefts, colors, inst.length, inst.c)
    if ncomp == 0:
        return SelectiveSubset((int(order[0]),), "interval")
    chosen = kernels.interval_sweep(lefts, flags, comp, ncomp, inst.length)
    return SelectiveSubset(order[chosen], "interval")


# ---------------------------------------------------------------- file format


def parse_intervals(text: str | bytes) -> UnitIntervalInstance:
    """Parse ``p uim <n> <c> <L>`` followed by ``i <id> <left> <color>`` lines."""
    if isinstance(text, bytes):
        text = text.decode()
    rows = [
        (lineno, line.split())
        for lineno, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not rows:
        raise GraphFormatError("empty interval file")
    hline, tok = rows[0]
    if len(tok) != 5 or tok[:2] != ["p", "uim"]:
        raise GraphFormatError("malformed header, expected 'p uim <n> <c> <L>'", hline)
    try:
        n, c, length = (int(t) for t in tok[2:])
    except ValueError:
        raise GraphFormatError("malformed header: non-integer field", hline) from None
    if n < 1 or c < 1 or length < 1:
        raise GraphFormatError("header counts must be positive", hline)
    lefts = [None] * n
    colors = [0] * n
    for lineno, tok in rows[1:]:
        if tok[0] != "i" or len(tok) != 4:
            raise GraphFormatError("malformed interval line, expected 'i <id> <left> <color>'", lineno)
        try:
            vid, left, col = (int(t) for t in tok[1:])
        except ValueError:
            raise GraphFormatError("malformed interval line: non-integer field", lineno) from None
        if not 1 <= vid <= n:
            raise GraphFormatError(f"interval id {vid} outside 1..{n}", lineno)
        if lefts[vid - 1] is not None:
            raise GraphFormatError(f"duplicate interval {vid}", lineno)
        if not 1 <= col <= c:
            raise GraphFormatError(f"color {col} outside 1..{c}", lineno)
        lefts[vid - 1] = left
        colors[vid - 1] = col
    if any(x is None for x in lefts):
        raise GraphFormatError(f"header declares {n} intervals, body has {sum(x is not None for x in lefts)}")
    if len(set(colors)) != c:
        raise GraphFormatError(f"header declares {c} colors, only {len(set(colors))} used")
    inst = UnitIntervalInstance(np.array(lefts), np.array(colors), length)
    if not inst.is_connected():
        raise GraphFormatError("interval graph is disconnected")
    return inst


def format_intervals(inst: UnitIntervalInstance, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"p uim {inst.n} {inst.c} {inst.length}")
    out.extend(
        f"i {i} {left} {col}"
        for i, (left, col) in enumerate(zip(inst.lefts.tolist(), inst.colors.tolist()), 1)
    )
    return "\n".join(out) + "\n"
