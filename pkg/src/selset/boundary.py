"""Per-block boundary sets B1, B2 and B_all."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Block, ColoredGraph, GraphError, blocks


@dataclass(frozen=True)
class BoundaryPartition:
    """B1: members with a differently colored neighbor. B2: other members adjacent to B1."""

    block_id: int
    b1: tuple[int, ...]
    b2: tuple[int, ...]

    @property
    def ball(self) -> tuple[int, ...]:
        return tuple(sorted(self.b1 + self.b2))


def check_block(g: ColoredGraph, block: Block) -> None:
    """Raise unless ``block`` is exactly one block of ``g``."""
    members = [g.check_vertex(v) for v in block.members]
    if not members:
        raise GraphError("empty block")
    labels = g.block_labels
    lab = labels[members[0]]
    if any(labels[v] != lab for v in members):
        raise GraphError("block members are not one connected monochromatic set")
    if np.count_nonzero(labels == lab) != len(set(members)):
        raise GraphError("block is not maximal")
    if block.color != g.colors[members[0]]:
        raise GraphError(f"block color {block.color} does not match its members")


def boundary_partition(g: ColoredGraph, block: Block) -> BoundaryPartition:
    check_block(g, block)
    flags = g.boundary_flags
    members = sorted(block.members)
    return BoundaryPartition(
        block.id,
        tuple(v for v in members if flags[v] == 1),
        tuple(v for v in members if flags[v] == 2),
    )


def boundary_partitions(g: ColoredGraph) -> list[BoundaryPartition]:
    """Boundary sets of every block in one pass, in block order."""
    flags = g.boundary_flags
    out = []
    for b in blocks(g):
        out.append(BoundaryPartition(
            b.id,
            tuple(v for v in b.members if flags[v] == 1),
            tuple(v for v in b.members if flags[v] == 2),
        ))
    return out
