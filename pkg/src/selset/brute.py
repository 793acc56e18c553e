"""Exhaustive minimum selective subsets, one block at a time.

The ground truth for every solver test. Blocks are independent, so the
optimum is the union of per-block optima; each block is searched by subset
size, then lexicographically by vertex id.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import kernels
from .boundary import check_block
from .graph import Block, ColoredGraph, SelectiveSubset, blocks, distances_from

# int64 bitmasks, sign bit unused
MASK_BITS = 62


class BlockTooLargeError(ValueError):
    def __init__(self, block: Block, size: int, budget: int):
        self.block = block
        self.size = size
        self.budget = budget
        super().__init__(
            f"block {block.id} has search space {size} > budget {budget}"
        )


@dataclass(frozen=True)
class OracleConfig:
    max_block: int = 20
    mode: Literal["full", "boundary"] = "full"

    def __post_init__(self):
        if self.mode not in ("full", "boundary"):
            raise ValueError(f"unknown oracle mode {self.mode!r}")
        if not 1 <= self.max_block <= MASK_BITS:
            raise ValueError(f"max_block must be in 1..{MASK_BITS}")


def search_space(g: ColoredGraph, block: Block, cfg: OracleConfig) -> list[int]:
    members = sorted(block.members)
    if cfg.mode == "boundary":
        flags = g.boundary_flags
        ball = [v for v in members if flags[v] != 0]
        # a monochromatic graph has no boundary at all
        if ball:
            return ball
    return members


def coverage_masks(g: ColoredGraph, block: Block, candidates: list[int]) -> np.ndarray:
    """Bit i of mask[v] is set iff candidate i would satisfy v on its own.

    That is, candidate i is no farther from v than the nearest vertex of a
    different color.
    """
    col = block.color
    other = g.colors != col
    other[0] = False
    cand = np.asarray(candidates, dtype=np.int64)
    masks = np.zeros(len(block.members), np.int64)
    for k, v in enumerate(sorted(block.members)):
        dist = distances_from(g, v)
        far = dist[other & (dist >= 0)]
        limit = int(far.min()) if far.size else np.iinfo(np.int64).max
        d = dist[cand]
        hit = np.flatnonzero((d >= 0) & (d <= limit))
        masks[k] = int(sum(1 << int(i) for i in hit))
    return masks


def exact_block(g: ColoredGraph, block: Block, cfg: OracleConfig | None = None) -> tuple[int, ...]:
    cfg = cfg or OracleConfig()
    check_block(g, block)
    candidates = search_space(g, block, cfg)
    if len(candidates) > cfg.max_block:
        raise BlockTooLargeError(block, len(candidates), cfg.max_block)
    masks = coverage_masks(g, block, candidates)
    pick = kernels.first_hitting_combination(masks, len(candidates), len(candidates))
    if pick.size == 0:
        raise AssertionError(f"block {block.id}: no selective subset in search space")
    return tuple(candidates[i] for i in pick.tolist())


def exact_mss(g: ColoredGraph, cfg: OracleConfig | None = None) -> SelectiveSubset:
    cfg = cfg or OracleConfig()
    bs = blocks(g)
    for b in bs:
        size = len(search_space(g, b, cfg))
        if size > cfg.max_block:
            raise BlockTooLargeError(b, size, cfg.max_block)
    out = []
    for b in bs:
        out.extend(exact_block(g, b, cfg))
    return SelectiveSubset(tuple(out), "brute")
