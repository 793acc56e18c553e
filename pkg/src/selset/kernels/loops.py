"""Loop kernels, compiled with numba when available.

Conventions shared by every kernel: vertices are ``1..n``; per-vertex arrays
have length ``n + 1`` with slot 0 unused; adjacency is CSR with
``indptr`` of length ``n + 2`` and neighbor lists sorted ascending.
"""

import numpy as np

from .._accel import jit


@jit
def rooted_bfs(indptr, indices, n, root):
    """BFS from ``root``. Returns (parent, depth, order); depth -1 = unreachable."""
    parent = np.zeros(n + 1, np.int64)
    depth = np.full(n + 1, -1, np.int64)
    order = np.empty(n, np.int64)
    depth[root] = 0
    order[0] = root
    head = 0
    tail = 1
    while head < tail:
        u = order[head]
        head += 1
        for e in range(indptr[u], indptr[u + 1]):
            w = indices[e]
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                parent[w] = u
                order[tail] = w
                tail += 1
    return parent, depth, order[:tail].copy()


@jit
def block_labels(indptr, indices, colors, n):
    """Label maximal connected monochromatic sets 1..k, numbered by smallest member."""
    labels = np.zeros(n + 1, np.int64)
    stack = np.empty(n + 1, np.int64)
    k = 0
    for s in range(1, n + 1):
        if labels[s] != 0:
            continue
        k += 1
        labels[s] = k
        stack[0] = s
        top = 1
        while top > 0:
            top -= 1
            u = stack[top]
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                if labels[w] == 0 and colors[w] == colors[u]:
                    labels[w] = k
                    stack[top] = w
                    top += 1
    return labels, k


@jit
def boundary_flags(indptr, indices, colors, n):
    """0 = interior, 1 = touches another color, 2 = same-color neighbor of a 1."""
    flags = np.zeros(n + 1, np.int64)
    for v in range(1, n + 1):
        for e in range(indptr[v], indptr[v + 1]):
            if colors[indices[e]] != colors[v]:
                flags[v] = 1
                break
    for v in range(1, n + 1):
        if flags[v] != 0:
            continue
        for e in range(indptr[v], indptr[v + 1]):
            w = indices[e]
            if flags[w] == 1 and colors[w] == colors[v]:
                flags[v] = 2
                break
    return flags


def _with_py_func(wrapper, core):
    """Give a numpy-allocating wrapper the same ``py_func`` hook as a jitted kernel."""

    def interpreted(*args):
        return wrapper(*args, core=core.py_func)

    wrapper.py_func = interpreted
    return wrapper


# The two tree kernels take their buffers from numpy. Large numpy arrays are
# backed by transparent huge pages, which keeps first-touch cost per element
# flat as n grows; buffers malloc'd inside compiled code are not.


def tree_prepare(indptr, indices, colors, n, root, core=None):
    """BFS a tree from ``root`` and derive blocks and boundary flags.

    Everything is indexed by BFS position: ``order[i]`` is the vertex at
    position i, ``ppos[i]`` its parent's position (-1 for the root) and the
    children of position i sit at ``cstart[i]:cstart[i + 1]``. Parent
    positions never decrease and depths come in contiguous runs, so the
    passes after the BFS stream through memory. Labels are numbered in BFS
    order; flags use the ``boundary_flags`` codes.

    Returns (order, ppos, cstart, labels, flags).
    """
    order = np.empty(n, np.int64)
    ppos = np.empty(n, np.int64)
    cstart = np.empty(n + 1, np.int64)
    col = np.empty(n, np.int64)
    labels = np.empty(n, np.int64)
    flags = np.zeros(n, np.int64)
    (core or _tree_prepare)(indptr, indices, colors, root, order, ppos, cstart, col, labels, flags)
    return order, ppos, cstart, labels, flags


@jit
def _tree_prepare(indptr, indices, colors, root, order, ppos, cstart, col, labels, flags):
    n = order.shape[0]
    order[0] = root
    ppos[0] = -1
    col[0] = colors[root]
    tail = 1
    for head in range(n):
        if head >= tail:
            raise ValueError("graph is not connected")
        u = order[head]
        pu = order[ppos[head]] if head > 0 else 0
        cstart[head] = tail
        for e in range(indptr[u], indptr[u + 1]):
            w = indices[e]
            if w != pu:
                if tail >= n:
                    raise ValueError("graph is not a tree")
                order[tail] = w
                ppos[tail] = head
                col[tail] = colors[w]
                tail += 1
    cstart[n] = n
    labels[0] = 1
    nb = 1
    for i in range(1, n):
        p = ppos[i]
        if col[i] == col[p]:
            labels[i] = labels[p]
        else:
            nb += 1
            labels[i] = nb
            flags[i] = 1
            flags[p] = 1
    for i in range(1, n):
        p = ppos[i]
        if col[i] == col[p]:
            if flags[p] == 1 and flags[i] == 0:
                flags[i] = 2
            elif flags[i] == 1 and flags[p] == 0:
                flags[p] = 2


def tree_select(order, ppos, cstart, labels, flags, n, core=None):
    """Deepest-first selection over the boundary subtrees of every block.

    Walking BFS positions backwards visits depths in decreasing order.
    Within one depth the order does not change the outcome. Returns a
    membership mask over vertex ids.
    """
    status = flags.copy()
    present = status != 0
    pick = np.zeros(n, np.bool_)
    chosen = np.zeros(n + 1, np.bool_)
    (core or _tree_select)(order, ppos, cstart, labels, status, present, pick, chosen)
    return chosen


@jit
def _tree_select(order, ppos, cstart, labels, status, present, pick, chosen):
    n = order.shape[0]
    for u in range(n - 1, -1, -1):
        if not present[u]:
            continue
        if status[u] == 2:
            present[u] = False
            continue
        p = ppos[u]
        if p >= 0 and present[p] and labels[p] == labels[u]:
            pick[p] = True
            present[p] = False
            for w in range(cstart[p], cstart[p + 1]):
                if labels[w] == labels[p]:
                    present[w] = False
            gp = ppos[p]
            if gp >= 0 and present[gp] and labels[gp] == labels[p] and status[gp] == 1:
                status[gp] = 2
        else:
            pick[u] = True
            present[u] = False
    for i in range(n):
        if pick[i]:
            chosen[order[i]] = True


_with_py_func(tree_prepare, _tree_prepare)
_with_py_func(tree_select, _tree_select)


@jit
def interval_structure(lefts, colors, length, c):
    """Blocks, boundary flags and boundary components for intervals sorted by left.

    All outputs are indexed by sorted position. Component ids are 0 for
    interior intervals, otherwise 1..ncomp.
    """
    k = lefts.shape[0]
    block = np.zeros(k, np.int64)
    flags = np.zeros(k, np.int64)
    comp = np.zeros(k, np.int64)
    last = np.full(c + 1, -1, np.int64)
    nblocks = 0
    for i in range(k):
        col = colors[i]
        j = last[col]
        if j >= 0 and lefts[i] - lefts[j] <= length:
            block[i] = block[j]
        else:
            nblocks += 1
            block[i] = nblocks
        last[col] = i

    prev_diff = -1
    for i in range(k):
        if i > 0 and colors[i - 1] != colors[i]:
            prev_diff = i - 1
        if prev_diff >= 0 and lefts[i] - lefts[prev_diff] <= length:
            flags[i] = 1
    next_diff = -1
    for i in range(k - 1, -1, -1):
        if i < k - 1 and colors[i + 1] != colors[i]:
            next_diff = i + 1
        if next_diff >= 0 and lefts[next_diff] - lefts[i] <= length:
            flags[i] = 1

    last[:] = -1
    for i in range(k):
        col = colors[i]
        if flags[i] == 1:
            last[col] = i
        elif last[col] >= 0 and lefts[i] - lefts[last[col]] <= length:
            flags[i] = 2
    last[:] = -1
    for i in range(k - 1, -1, -1):
        col = colors[i]
        if flags[i] == 1:
            last[col] = i
        elif flags[i] == 0 and last[col] >= 0 and lefts[last[col]] - lefts[i] <= length:
            flags[i] = 2

    last[:] = -1
    ncomp = 0
    for i in range(k):
        if flags[i] == 0:
            continue
        col = colors[i]
        j = last[col]
        if j >= 0 and lefts[i] - lefts[j] <= length:
            comp[i] = comp[j]
        else:
            ncomp += 1
            comp[i] = ncomp
        last[col] = i
    return block, nblocks, flags, comp, ncomp


@jit
def interval_sweep(lefts, flags, comp, ncomp, length):
    """Left-to-right selection within each boundary component (sorted positions in/out)."""
    k = lefts.shape[0]
    start = np.zeros(ncomp + 2, np.int64)
    for i in range(k):
        if flags[i] != 0:
            start[comp[i] + 1] += 1
    for cid in range(ncomp + 1):
        start[cid + 1] += start[cid]
    fill = start[:-1].copy()
    seg = np.empty(start[ncomp + 1], np.int64)
    for i in range(k):
        if flags[i] != 0:
            seg[fill[comp[i]]] = i
            fill[comp[i]] += 1

    status = flags.copy()
    selected = np.zeros(k, np.bool_)
    for cid in range(1, ncomp + 1):
        a = start[cid]
        b = start[cid + 1]
        i = a
        jp = a
        front = a
        while i < b:
            pu = seg[i]
            if status[pu] == 2:
                i += 1
                continue
            if jp < i:
                jp = i
            lim = lefts[pu] + length
            while jp + 1 < b and lefts[seg[jp + 1]] <= lim:
                jp += 1
            if jp == i:
                selected[pu] = True
                i += 1
                continue
            top = lefts[seg[jp]]
            p = jp
            while p - 1 > i and lefts[seg[p - 1]] == top:
                p -= 1
            selected[seg[p]] = True
            vlim = top + length
            q = jp + 1
            if front > q:
                q = front
            while q < b and lefts[seg[q]] <= vlim:
                if status[seg[q]] == 1:
                    status[seg[q]] = 2
                q += 1
            front = q
            i = jp + 1
    return selected


@jit
def first_violation(indptr, indices, colors, in_s, n):
    """Smallest vertex breaking the selective condition, or 0.

    One BFS per vertex outside ``in_s``, stopped at the first level that meets
    the subset or another color.
    """
    mark = np.zeros(n + 1, np.int64)
    queue = np.empty(n + 1, np.int64)
    for v in range(1, n + 1):
        if in_s[v]:
            continue
        col = colors[v]
        mark[v] = v
        queue[0] = v
        head = 0
        tail = 1
        ok = False
        while head < tail:
            level_end = tail
            for h in range(head, level_end):
                u = queue[h]
                for e in range(indptr[u], indptr[u + 1]):
                    w = indices[e]
                    if mark[w] != v:
                        mark[w] = v
                        queue[tail] = w
                        tail += 1
            head = level_end
            hit_same = False
            hit_other = False
            for h in range(level_end, tail):
                w = queue[h]
                if colors[w] != col:
                    hit_other = True
                elif in_s[w]:
                    hit_same = True
            if hit_same:
                ok = True
                break
            if hit_other:
                break
        if not ok:
            return v
    return 0


@jit
def _same_color_bfs(indptr, indices, colors, dist, queue, tail, n):
    head = 0
    while head < tail:
        u = queue[head]
        head += 1
        for e in range(indptr[u], indptr[u + 1]):
            w = indices[e]
            if dist[w] < 0 and colors[w] == colors[u]:
                dist[w] = dist[u] + 1
                queue[tail] = w
                tail += 1


@jit
def block_violation(indptr, indices, colors, flags, in_s, n):
    """Linear-time form of ``first_violation``.

    v is satisfied iff its in-block distance to the subset is at most one more
    than its in-block distance to the boundary set B1.
    """
    queue = np.empty(n + 1, np.int64)
    to_b1 = np.full(n + 1, -1, np.int64)
    tail = 0
    for v in range(1, n + 1):
        if flags[v] == 1:
            to_b1[v] = 0
            queue[tail] = v
            tail += 1
    _same_color_bfs(indptr, indices, colors, to_b1, queue, tail, n)
    to_s = np.full(n + 1, -1, np.int64)
    tail = 0
    for v in range(1, n + 1):
        if in_s[v]:
            to_s[v] = 0
            queue[tail] = v
            tail += 1
    _same_color_bfs(indptr, indices, colors, to_s, queue, tail, n)
    for v in range(1, n + 1):
        if to_s[v] < 0:
            return v
        if to_b1[v] >= 0 and to_s[v] > to_b1[v] + 1:
            return v
    return 0


@jit
def first_hitting_combination(masks, ncand, kmax):
    """Smallest, then lexicographically first, index combination hitting every mask.

    ``masks[i]`` is a bitmask over candidate indices. Returns an empty array
    when no combination of size <= kmax works.
    """
    idx = np.empty(max(ncand, 1), np.int64)
    one = np.int64(1)
    for k in range(1, min(kmax, ncand) + 1):
        for t in range(k):
            idx[t] = t
        while True:
            sel = np.int64(0)
            for t in range(k):
                sel |= one << idx[t]
            good = True
            for mm in masks:
                if (mm & sel) == 0:
                    good = False
                    break
            if good:
                return idx[:k].copy()
            t = k - 1
            while t >= 0 and idx[t] == ncand - k + t:
                t -= 1
            if t < 0:
                break
            idx[t] += 1
            for s in range(t + 1, k):
                idx[s] = idx[s - 1] + 1
    return idx[:0].copy()
