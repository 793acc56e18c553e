"""Numpy fallbacks for the kernels that vectorize level by level.

Each function returns exactly what its counterpart in ``loops`` returns.
"""

import numpy as np


def _expand(indptr, indices, frontier):
    """All (source, neighbor) pairs of a frontier, in frontier order."""
    lo = indptr[frontier]
    deg = indptr[frontier + 1] - lo
    src = np.repeat(frontier, deg)
    offs = np.arange(deg.sum()) - np.repeat(np.cumsum(deg) - deg, deg)
    return src, indices[np.repeat(lo, deg) + offs]


def rooted_bfs(indptr, indices, n, root):
    parent = np.zeros(n + 1, np.int64)
    depth = np.full(n + 1, -1, np.int64)
    depth[root] = 0
    frontier = np.array([root], np.int64)
    levels = [frontier]
    d = 0
    while frontier.size:
        src, dst = _expand(indptr, indices, frontier)
        fresh = depth[dst] < 0
        src, dst = src[fresh], dst[fresh]
        uniq, first = np.unique(dst, return_index=True)
        first.sort()
        frontier = dst[first]
        d += 1
        depth[frontier] = d
        parent[frontier] = src[first]
        if frontier.size:
            levels.append(frontier)
    return parent, depth, np.concatenate(levels)


def block_labels(indptr, indices, colors, n):
    src = np.repeat(np.arange(n + 1, dtype=np.int64), np.diff(indptr))
    same = colors[src] == colors[indices]
    u, w = src[same], indices[same]
    lab = np.arange(n + 1, dtype=np.int64)
    while True:
        before = lab.copy()
        np.minimum.at(lab, u, lab[w])
        while True:
            jumped = lab[lab]
            if np.array_equal(jumped, lab):
                break
            lab = jumped
        if np.array_equal(lab, before):
            break
    roots = np.unique(lab[1:])
    labels = np.zeros(n + 1, np.int64)
    labels[1:] = np.searchsorted(roots, lab[1:]) + 1
    return labels, int(roots.size)


def boundary_flags(indptr, indices, colors, n):
    src = np.repeat(np.arange(n + 1, dtype=np.int64), np.diff(indptr))
    differ = colors[src] != colors[indices]
    b1 = np.zeros(n + 1, np.bool_)
    b1[src[differ]] = True
    near = ~differ & b1[indices] & ~b1[src]
    flags = np.zeros(n + 1, np.int64)
    flags[src[near]] = 2
    flags[b1] = 1
    return flags


def tree_prepare(indptr, indices, colors, n, root):
    order = np.empty(n, np.int64)
    ppos = np.full(n, -1, np.int64)
    cstart = np.empty(n + 1, np.int64)
    order[0] = root
    lo, hi = 0, 1
    while lo < hi:
        level = order[lo:hi]
        _, dst = _expand(indptr, indices, level)
        pos = np.repeat(np.arange(lo, hi), np.diff(indptr)[level])
        pv = np.where(ppos[pos] >= 0, order[np.maximum(ppos[pos], 0)], 0)
        keep = dst != pv
        kids, owner = dst[keep], pos[keep]
        if hi + kids.size > n:
            raise ValueError("graph is not a tree")
        count = np.bincount(owner - lo, minlength=hi - lo)
        cstart[lo:hi] = hi + np.cumsum(count) - count
        order[hi:hi + kids.size] = kids
        ppos[hi:hi + kids.size] = owner
        lo, hi = hi, hi + kids.size
    if hi < n:
        raise ValueError("graph is not connected")
    cstart[n] = n
    col = colors[order]
    child = np.arange(1, n)
    par = ppos[1:]
    same = col[1:] == col[par]
    flags = np.zeros(n, np.int64)
    flags[child[~same]] = 1
    flags[par[~same]] = 1
    b1 = flags == 1
    flags[child[same & b1[par] & ~b1[child]]] = 2
    flags[par[same & b1[child] & ~b1[par]]] = 2
    # a position starting a new block gets the next label in BFS order
    labels = np.zeros(n, np.int64)
    labels[0] = 1
    fresh = np.zeros(n, np.int64)
    fresh[child[~same]] = np.arange(2, 2 + np.count_nonzero(~same))
    for a, b in _levels(cstart, n)[1:]:
        labels[a:b] = np.where(fresh[a:b] > 0, fresh[a:b], labels[ppos[a:b]])
    return order, ppos, cstart, labels, flags


def _levels(cstart, n):
    """Position ranges of each BFS depth."""
    out = [(0, 1)]
    while out[-1][1] < n:
        a, b = out[-1]
        out.append((int(cstart[a]), int(cstart[b])))
    return out


def tree_select(order, ppos, cstart, labels, flags, n):
    """Level-synchronous version of the deepest-first selection.

    Decisions at one depth only touch that depth, its parents and its
    grandparents, so a whole level can be settled at once.
    """
    status = flags.copy()
    present = status != 0
    pick = np.zeros(n, np.bool_)
    for a, b in reversed(_levels(cstart, n)):
        level = np.arange(a, b)
        level = level[present[level]]
        present[level[status[level] == 2]] = False
        need = level[status[level] == 1]
        p = ppos[need]
        safe = np.maximum(p, 0)
        has = (p >= 0) & present[safe] & (labels[safe] == labels[need])
        chosen = np.unique(p[has])
        pick[chosen] = True
        present[chosen] = False
        present[need] = False
        pick[need[~has]] = True
        g = ppos[chosen]
        safe = np.maximum(g, 0)
        demote = (g >= 0) & present[safe] & (labels[safe] == labels[chosen]) & (status[safe] == 1)
        status[g[demote]] = 2
    selected = np.zeros(n + 1, np.bool_)
    selected[order[pick]] = True
    return selected
