"""Exact linear-time minimum selective subsets on trees."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .boundary import BoundaryPartition
from .graph import ColoredGraph, GraphError, SelectiveSubset


class NotATreeError(GraphError):
    pass


@dataclass(frozen=True)
class RootedSubtree:
    root: int
    members: tuple[int, ...]
    parent: dict[int, int]
    depth: dict[int, int]


def _require_tree(t: ColoredGraph) -> None:
    if t.m != t.n - 1:
        raise NotATreeError(f"not a tree: {t.n} vertices but {t.m} edges")


def root_tree(t: ColoredGraph, root: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Parent (0 for the root) and depth arrays of ``t`` hung from ``root``."""
    _require_tree(t)
    parent, depth, _ = kernels.rooted_bfs(t.indptr, t.indices, t.n, t.check_vertex(root))
    return parent, depth


def subtrees(t: ColoredGraph, part: BoundaryPartition, root: int = 1) -> list[RootedSubtree]:
    """Connected pieces of one block's B_all, each hung from its member closest to ``root``."""
    parent, depth = root_tree(t, root)
    ball = set(part.ball)
    out = []
    for top in sorted(v for v in ball if parent[v] not in ball):
        members, par, dep = [top], {}, {top: int(depth[top])}
        stack = [top]
        while stack:
            u = stack.pop()
            for w in t.neighbors(u).tolist():
                if w in ball and parent[w] == u:
                    par[w] = u
                    dep[w] = int(depth[w])
                    members.append(w)
                    stack.append(w)
        out.append(RootedSubtree(top, tuple(sorted(members)), par, dep))
    return out


def solve_tree(t: ColoredGraph, root: int = 1) -> SelectiveSubset:
    """Minimum selective subset of a tree in O(n).

    Within every boundary subtree the deepest remaining vertex u is settled: a B2 vertex is dropped; a B1 vertex selects its subtree
    parent (removing the parent and its children and demoting a B1
    grandparent to B2), or itself when it has no parent.
    """
    _require_tree(t)
    order, ppos, cstart, labels, flags = kernels.tree_prepare(
        t.indptr, t.indices, t.colors, t.n, t.check_vertex(root)
    )
    if not np.any(flags == 1):
        return SelectiveSubset((int(root),), "tree")
    chosen = kernels.tree_select(order, ppos, cstart, labels, flags, t.n)
    return SelectiveSubset(np.flatnonzero(chosen), "tree")
