"""Vertex-colored graphs, blocks, and the selective-subset verifier.

Vertex ids are 1-based everywhere. A :class:`ColoredGraph` stores CSR
adjacency in numpy arrays with slot 0 left unused so kernels can index by id.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels

METHODS = ("tree", "interval", "greedy", "brute", "manual")


class GraphError(ValueError):
    """Invalid graph structure."""


class GraphFormatError(GraphError):
    """A graph or subset file that does not parse; ``line`` is 1-based (0 = whole file)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Block:
    id: int
    color: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v) -> bool:
        return v in self.members


class SelectiveSubset:
    """A solution: sorted distinct vertex ids plus the tag of the method that made it."""

    __slots__ = ("ids", "method", "_members")

    def __init__(self, members, method: str):
        if method not in METHODS:
            raise ValueError(f"unknown method tag {method!r}")
        ids = np.asarray(members, dtype=np.int64).reshape(-1)
        # solver output is usually sorted already; skip the sort then
        if ids.size > 1 and not np.all(ids[1:] > ids[:-1]):
            ids = np.unique(ids)
        self.ids = ids
        self.method = method
        self._members = None

    @property
    def members(self) -> tuple[int, ...]:
        if self._members is None:
            self._members = tuple(self.ids.tolist())
        return self._members

    @property
    def size(self) -> int:
        return int(self.ids.size)

    def __len__(self) -> int:
        return int(self.ids.size)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v) -> bool:
        i = np.searchsorted(self.ids, v)
        return bool(i < self.ids.size and self.ids[i] == v)

    def __eq__(self, other):
        if not isinstance(other, SelectiveSubset):
            return NotImplemented
        return self.method == other.method and np.array_equal(self.ids, other.ids)

    __hash__ = None

    def __repr__(self):
        shown = self.members if self.size <= 20 else f"{self.members[:20]}..."
        return f"SelectiveSubset(members={shown}, method={self.method!r})"


@dataclass(frozen=True)
class Verdict:
    """Result of a selectivity check; falsy when the subset fails."""

    ok: bool
    witness: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _csr(n: int, edges: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if edges.size == 0:
        return np.zeros(n + 2, np.int64), np.zeros(0, np.int64)
    src = np.concatenate([edges[:, 0], edges[:, 1]])
    dst = np.concatenate([edges[:, 1], edges[:, 0]])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 2, np.int64)
    np.cumsum(np.bincount(src, minlength=n + 1), out=indptr[1:])
    return indptr, np.ascontiguousarray(dst, dtype=np.int64)


class ColoredGraph:
    """Connected simple undirected graph with one color (1..c) per vertex.

    Build with :meth:`from_edges`. Instances are never mutated after
    construction; derived data (blocks, boundary flags) is cached lazily.
    """

    def __init__(self, n, colors, indptr, indices):
        self.n = int(n)
        self.colors = colors
        self.indptr = indptr
        self.indices = indices
        self.m = int(indices.size // 2)
        self.c = int(colors[1:].max()) if n else 0

    @classmethod
    def from_edges(
        cls,
        n: int,
        colors: Sequence[int],
        edges: Iterable[tuple[int, int]],
        *,
        connected: bool = True,
    ) -> "ColoredGraph":
        """Validate and build a graph.

        ``colors[i]`` is the color of vertex ``i + 1``. Color ids must cover
        1..c with no gaps. ``connected=False`` skips the connectivity check
        (used for reduction output that may legitimately fall apart).
        """
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        if len(colors) != n:
            raise GraphError(f"expected {n} colors, got {len(colors)}")
        col = np.zeros(n + 1, np.int64)
        col[1:] = np.asarray(colors, dtype=np.int64)
        if col[1:].min() < 1:
            raise GraphError("color ids start at 1")
        used = np.unique(col[1:])
        if used.size != used[-1]:
            missing = sorted(set(range(1, int(used[-1]) + 1)) - set(used.tolist()))
            raise GraphError(f"color ids must be contiguous, missing {missing}")
        e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        e = e.reshape(-1, 2)
        if e.size:
            if e.min() < 1 or e.max() > n:
                raise GraphError(f"edge endpoint outside 1..{n}")
            if np.any(e[:, 0] == e[:, 1]):
                v = int(e[e[:, 0] == e[:, 1]][0, 0])
                raise GraphError(f"self-loop at vertex {v}")
            lo, hi = np.minimum(e[:, 0], e[:, 1]), np.maximum(e[:, 0], e[:, 1])
            key = lo * (n + 1) + hi
            uniq, counts = np.unique(key, return_counts=True)
            if np.any(counts > 1):
                k = int(uniq[counts > 1][0])
                raise GraphError(f"parallel edge {k // (n + 1)}-{k % (n + 1)}")
        indptr, indices = _csr(n, e)
        g = cls(n, col, indptr, indices)
        if connected and not g.is_connected():
            raise DisconnectedGraphError("graph is not connected")
        return g

    def is_connected(self) -> bool:
        _, depth, _ = kernels.rooted_bfs(self.indptr, self.indices, self.n, 1)
        return bool(np.all(depth[1:] >= 0))

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def color(self, v: int) -> int:
        return int(self.colors[v])

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> list[tuple[int, int]]:
        """Each edge once as (u, v) with u < v, sorted."""
        src = np.repeat(np.arange(self.n + 1), np.diff(self.indptr))
        keep = src < self.indices
        return list(zip(src[keep].tolist(), self.indices[keep].tolist()))

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def check_vertex(self, v) -> int:
        if isinstance(v, (bool, np.bool_)) or int(v) != v or not 1 <= v <= self.n:
            raise GraphError(f"vertex id {v!r} outside 1..{self.n}")
        return int(v)

    def subset_mask(self, subset: Iterable[int]) -> np.ndarray:
        if isinstance(subset, SelectiveSubset):
            subset = subset.ids
        ids = np.asarray(list(subset) if not isinstance(subset, np.ndarray) else subset)
        mask = np.zeros(self.n + 1, np.bool_)
        if ids.size == 0:
            return mask
        if ids.dtype.kind not in "iu" or ids.min() < 1 or ids.max() > self.n:
            bad = next(v for v in ids.tolist() if not (isinstance(v, int) and 1 <= v <= self.n))
            raise GraphError(f"vertex id {bad!r} outside 1..{self.n}")
        mask[ids] = True
        return mask

    @cached_property
    def _blocks(self) -> tuple[np.ndarray, int]:
        return kernels.block_labels(self.indptr, self.indices, self.colors, self.n)

    @property
    def block_labels(self) -> np.ndarray:
        """Per-vertex block id (1-based, ordered by smallest member)."""
        return self._blocks[0]

    @property
    def num_blocks(self) -> int:
        return int(self._blocks[1])

    @cached_property
    def boundary_flags(self) -> np.ndarray:
        """Per-vertex 0/1/2: interior, B1 (touches other color), B2."""
        return kernels.boundary_flags(self.indptr, self.indices, self.colors, self.n)

    def __repr__(self):
        return f"ColoredGraph(n={self.n}, m={self.m}, c={self.c})"

    def __eq__(self, other):
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.colors, other.colors)
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    __hash__ = None


# ---------------------------------------------------------------- file formats


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(tokens, lineno, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"malformed {what} line: non-integer field", lineno) from None


def parse_graph(text: str | bytes) -> ColoredGraph:
    """Parse the ``p mss n m c`` format; every error names its line."""
    if isinstance(text, bytes):
        text = text.decode()
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise GraphFormatError("empty graph file")
    hline, tok = header
    if len(tok) != 5 or tok[:2] != ["p", "mss"]:
        raise GraphFormatError("malformed header, expected 'p mss <n> <m> <c>'", hline)
    n, m, c = _ints(tok[2:], hline, "header")
    if n < 1 or m < 0 or c < 1:
        raise GraphFormatError("header counts must be n >= 1, m >= 0, c >= 1", hline)

    colors = [0] * (n + 1)
    seen_edges: dict[tuple[int, int], int] = {}
    edges = []
    color_used = set()
    nv = 0
    for lineno, tok in lines:
        kind = tok[0]
        if kind == "v":
            if len(tok) != 3:
                raise GraphFormatError("malformed vertex line, expected 'v <id> <color>'", lineno)
            if edges:
                raise GraphFormatError("vertex line after edge lines", lineno)
            vid, col = _ints(tok[1:], lineno, "vertex")
            if not 1 <= vid <= n:
                raise GraphFormatError(f"vertex id {vid} outside 1..{n}", lineno)
            if colors[vid]:
                raise GraphFormatError(f"duplicate vertex {vid}", lineno)
            if not 1 <= col <= c:
                raise GraphFormatError(f"color {col} outside 1..{c}", lineno)
            colors[vid] = col
            color_used.add(col)
            nv += 1
        elif kind == "e":
            if len(tok) != 3:
                raise GraphFormatError("malformed edge line, expected 'e <u> <v>'", lineno)
            if nv != n:
                raise GraphFormatError(f"edge line before all {n} vertices declared", lineno)
            u, v = _ints(tok[1:], lineno, "edge")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"edge endpoint outside 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen_edges:
                raise GraphFormatError(
                    f"duplicate edge {key[0]}-{key[1]} (first on line {seen_edges[key]})", lineno
                )
            seen_edges[key] = lineno
            edges.append(key)
        else:
            raise GraphFormatError(f"unknown line type {kind!r}", lineno)
    if nv != n:
        raise GraphFormatError(f"header declares {n} vertices, body has {nv}")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, body has {len(edges)}")
    if len(color_used) != c:
        missing = sorted(set(range(1, c + 1)) - color_used)
        raise GraphFormatError(f"header declares {c} colors, colors {missing} unused")
    try:
        return ColoredGraph.from_edges(n, colors[1:], edges)
    except DisconnectedGraphError:
        raise GraphFormatError("graph is disconnected") from None


def format_graph(g: ColoredGraph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"p mss {g.n} {g.m} {g.c}")
    out.extend(f"v {v} {int(g.colors[v])}" for v in g.vertices())
    out.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def parse_subset(text: str | bytes) -> list[int]:
    if isinstance(text, bytes):
        text = text.decode()
    ids = []
    for lineno, tok in _content_lines(text):
        ids.extend(_ints(tok, lineno, "subset"))
    return ids


def format_subset(subset: Iterable[int]) -> str:
    return " ".join(str(v) for v in sorted(subset)) + "\n"


# ---------------------------------------------------------------- distances


def distances_from(g: ColoredGraph, v: int) -> np.ndarray:
    """Hop distance from ``v`` to every vertex (-1 when unreachable)."""
    _, depth, _ = kernels.rooted_bfs(g.indptr, g.indices, g.n, g.check_vertex(v))
    return depth


def hop_distance(g: ColoredGraph, u: int, v: int) -> int:
    g.check_vertex(v)
    d = int(distances_from(g, u)[v])
    if d < 0:
        raise GraphError(f"vertices {u} and {v} are not connected")
    return d


def nearest_set(g: ColoredGraph, v: int, targets: Iterable[int]) -> set[int]:
    """Members of ``targets`` at minimum hop distance from ``v``."""
    targets = {g.check_vertex(u) for u in targets}
    if not targets:
        raise GraphError("nearest set of an empty vertex set")
    if v in targets:
        return {v}
    dist = distances_from(g, v)
    reach = [u for u in targets if dist[u] >= 0]
    if not reach:
        return set()
    best = min(int(dist[u]) for u in reach)
    return {u for u in reach if dist[u] == best}


# ---------------------------------------------------------------- blocks


def blocks(g: ColoredGraph) -> list[Block]:
    """Maximal connected monochromatic vertex sets, ordered by smallest member."""
    labels = g.block_labels
    order = np.argsort(labels[1:], kind="stable") + 1
    bounds = np.searchsorted(labels[order], np.arange(1, g.num_blocks + 2))
    out = []
    for b in range(g.num_blocks):
        members = order[bounds[b]:bounds[b + 1]]
        out.append(Block(b + 1, int(g.colors[members[0]]), tuple(members.tolist())))
    return out


def block_lower_bound(g: ColoredGraph) -> int:
    """Number of blocks: every selective subset meets each one."""
    return g.num_blocks


# ---------------------------------------------------------------- verification


def is_selective(g: ColoredGraph, subset: Iterable[int]) -> Verdict:
    """Check the nearest-neighbor condition vertex by vertex.

    For each v of color l outside the subset, a BFS from v stops at the first
    level containing a subset vertex of color l (pass) or a vertex of another
    color (fail). The witness is the smallest failing vertex.
    """
    mask = g.subset_mask(subset)
    bad = kernels.first_violation(g.indptr, g.indices, g.colors, mask, g.n)
    return Verdict(True) if bad == 0 else Verdict(False, int(bad))


def is_selective_fast(g: ColoredGraph, subset: Iterable[int]) -> Verdict:
    """O(n + m) equivalent of :func:`is_selective` (same witness).

    Uses in-block distances: v passes iff its nearest subset vertex inside its
    block is at most one step farther than its nearest B1 vertex.
    """
    mask = g.subset_mask(subset)
    bad = kernels.block_violation(g.indptr, g.indices, g.colors, g.boundary_flags, mask, g.n)
    return Verdict(True) if bad == 0 else Verdict(False, int(bad))


# is_selective costs O(n (n + m)) in the worst case; above this size callers
# that must always verify switch to the linear check.
FAST_VERIFY_THRESHOLD = 5000


def verify(g: ColoredGraph, subset: Iterable[int]) -> Verdict:
    subset = list(subset)
    if g.n <= FAST_VERIFY_THRESHOLD:
        return is_selective(g, subset)
    return is_selective_fast(g, subset)
