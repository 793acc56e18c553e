"""Set-cover reduction and the greedy O(log n) approximation for general graphs."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .graph import ColoredGraph, SelectiveSubset


class SetCoverError(ValueError):
    pass


@dataclass(frozen=True)
class SetCoverInstance:
    """Elements and sets are both named by their source vertex.

    ``elements`` lists the B1 vertices; ``sets[b]`` holds the elements that
    vertex ``b`` of B_all would cover.
    """

    elements: tuple[int, ...]
    sets: dict[int, frozenset[int]]

    @property
    def n1(self) -> int:
        return len(self.elements)

    def covers(self, chosen) -> bool:
        got = set()
        for s in chosen:
            got |= self.sets[s]
        return got >= set(self.elements)


def to_set_cover(g: ColoredGraph) -> SetCoverInstance:
    """e(a) is in S(b) iff a == b or a, b are adjacent members of one block."""
    flags = g.boundary_flags
    if not np.any(flags == 1):
        raise SetCoverError("monochromatic graph: reduction is degenerate")
    labels = g.block_labels
    elements = tuple(np.flatnonzero(flags == 1).tolist())
    sets = {}
    for b in np.flatnonzero(flags != 0).tolist():
        cover = {b} if flags[b] == 1 else set()
        for a in g.neighbors(b).tolist():
            if flags[a] == 1 and labels[a] == labels[b]:
                cover.add(a)
        sets[b] = frozenset(cover)
    return SetCoverInstance(elements, sets)


def greedy_set_cover(inst: SetCoverInstance) -> list[int]:
    """Repeatedly take the set covering most uncovered elements (ties: smaller id).

    Lazy max-heap: a popped entry whose recomputed gain still matches its key
    is the true maximum, since keys only ever overestimate.
    """
    universe = set(inst.elements)
    coverable = set().union(*inst.sets.values()) if inst.sets else set()
    if not universe <= coverable:
        raise SetCoverError(f"elements {sorted(universe - coverable)} are in no set")
    uncovered = set(universe)
    heap = [(-len(s & universe), sid) for sid, s in inst.sets.items()]
    heapq.heapify(heap)
    chosen = []
    while uncovered:
        neg, sid = heapq.heappop(heap)
        gain = len(inst.sets[sid] & uncovered)
        if gain == -neg:
            chosen.append(sid)
            uncovered -= inst.sets[sid]
        elif gain:
            heapq.heappush(heap, (-gain, sid))
    return chosen


def approx_mss(g: ColoredGraph) -> SelectiveSubset:
    """Selective subset within a harmonic-number factor of optimal."""
    if g.c == 1:
        return SelectiveSubset((1,), "greedy")
    return SelectiveSubset(tuple(greedy_set_cover(to_set_cover(g))), "greedy")


def harmonic(k: int) -> float:
    return float(sum(1.0 / i for i in range(1, k + 1)))


def format_set_cover(inst: SetCoverInstance) -> str:
    """``u <n1>`` then ``s <source> <elem> ...``; elements named by source vertex."""
    out = [f"u {inst.n1}"]
    for sid in sorted(inst.sets):
        out.append(" ".join(["s", str(sid), *(str(e) for e in sorted(inst.sets[sid]))]))
    return "\n".join(out) + "\n"


def parse_set_cover(text: str) -> SetCoverInstance:
    n1 = None
    sets = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0].startswith("#"):
            continue
        try:
            nums = [int(t) for t in tok[1:]]
        except ValueError:
            raise SetCoverError(f"line {lineno}: non-integer field") from None
        if tok[0] == "u" and len(nums) == 1 and n1 is None:
            n1 = nums[0]
        elif tok[0] == "s" and nums:
            if nums[0] in sets:
                raise SetCoverError(f"line {lineno}: duplicate set {nums[0]}")
            sets[nums[0]] = frozenset(nums[1:])
        else:
            raise SetCoverError(f"line {lineno}: malformed line")
    if n1 is None:
        raise SetCoverError("missing 'u <n1>' line")
    elements = tuple(sorted(set().union(*sets.values()))) if sets else ()
    if len(elements) != n1:
        raise SetCoverError(f"declared {n1} elements, sets mention {len(elements)}")
    return SetCoverInstance(elements, sets)


__all__ = [
    "SetCoverError",
    "SetCoverInstance",
    "approx_mss",
    "format_set_cover",
    "greedy_set_cover",
    "harmonic",
    "parse_set_cover",
    "to_set_cover",
]
