import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selset import (
    GraphError,
    GraphFormatError,
    UnitIntervalInstance,
    block_lower_bound,
    build_interval_graph,
    exact_mss,
    is_selective,
    parse_intervals,
    solve_tree,
    solve_unit_interval,
)
from selset.graph import DisconnectedGraphError
from selset.interval import format_intervals, interval_edges

import oracle
from instances import make


def inst(lefts, colors, length=1):
    return UnitIntervalInstance(np.array(lefts), np.array(colors), length)


def test_build_examples():
    assert build_interval_graph(inst([0, 1, 2], [1, 1, 2])).edges() == [(1, 2), (2, 3)]
    assert build_interval_graph(inst([0, 1, 2, 3], [1, 1, 1, 2])).edges() == [(1, 2), (2, 3), (3, 4)]
    assert build_interval_graph(inst([0, 0], [1, 2])).edges() == [(1, 2)]


def test_build_matches_pairwise_check():
    rng = np.random.default_rng(3)
    for _ in range(50):
        n = int(rng.integers(1, 15))
        lefts = np.sort(rng.integers(0, 2 * n + 1, n))
        length = int(rng.integers(1, 4))
        i = inst(rng.permutation(lefts), np.ones(n, int), length)
        expected = sorted(
            (a + 1, b + 1) for a in range(n) for b in range(a + 1, n) if abs(i.lefts[a] - i.lefts[b]) <= length
        )
        assert sorted(map(tuple, np.sort(interval_edges(i), axis=1).tolist())) == expected


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraphError):
        build_interval_graph(inst([0, 5], [1, 2]))
    with pytest.raises(DisconnectedGraphError):
        solve_unit_interval(inst([0, 5], [1, 2]))


def test_solve_examples():
    assert solve_unit_interval(inst([0, 1, 2], [1, 1, 2])).members == (2, 3)
    assert solve_unit_interval(inst([0, 1, 2, 3], [1, 1, 1, 2])).members == (3, 4)
    assert solve_unit_interval(inst([4, 0, 2, 1], [1, 1, 1, 1], 2)).members == (2,)


def test_invalid_instances():
    with pytest.raises(GraphError):
        inst([0, 1], [1, 3])
    with pytest.raises(GraphError):
        inst([0, 1], [1, 2], 0)
    with pytest.raises(GraphError):
        inst([], [])


def test_file_format_round_trip_and_errors():
    i = inst([3, 0, 1], [2, 1, 1], 2)
    assert parse_intervals(format_intervals(i, "x")) == i
    bad = [
        "p uim 2 1\n",
        "p uim 2 1 1\ni 1 0 1\n",
        "p uim 2 1 1\ni 1 0 1\ni 1 1 1\n",
        "p uim 2 2 1\ni 1 0 1\ni 2 1 3\n",
        "p uim 2 1 1\ni 1 0 1\ni 2 5 1\n",
        "p uim 1 1 1\nj 1 0 1\n",
    ]
    for text in bad:
        with pytest.raises(GraphFormatError):
            parse_intervals(text)


def test_small_instances_match_definition_level_optimum():
    rng = np.random.default_rng(9)
    for k in range(150):
        n = int(rng.integers(1, 9))
        g_inst = make("random-unit-interval", n, int(rng.integers(1, min(3, n) + 1)), 500 + k, int(rng.integers(1, 3)))
        assert solve_unit_interval(g_inst).size == oracle.min_selective_size(build_interval_graph(g_inst))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 14), st.integers(1, 4), st.integers(1, 3), st.integers(0, 2**32))
def test_properties(n, c, length, seed):
    i = make("random-unit-interval", n, min(c, n), seed, length)
    g = build_interval_graph(i)
    sol = solve_unit_interval(i)
    assert is_selective(g, sol)
    assert sol.size == exact_mss(g).size
    assert block_lower_bound(g) <= sol.size
    flags, labels = g.boundary_flags, g.block_labels
    chosen = set(sol.members)
    for u in np.flatnonzero(flags == 1).tolist():
        assert u in chosen or any(
            w in chosen and flags[w] and labels[w] == labels[u] for w in g.neighbors(u).tolist()
        )
    if g.m == g.n - 1:
        assert solve_tree(g).size == sol.size


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=10), st.integers(0, 2**32))
def test_ties_in_left_endpoints(lefts, seed):
    # many equal lefts: identical intervals are adjacent and must not confuse the sweep
    lefts = sorted(lefts)
    if any(b - a > 1 for a, b in zip(lefts, lefts[1:])):
        return
    rng = np.random.default_rng(seed)
    n = len(lefts)
    c = int(rng.integers(1, min(3, n) + 1))
    colors = rng.integers(1, c + 1, n)
    colors[rng.permutation(n)[:c]] = np.arange(1, c + 1)
    i = inst(rng.permutation(lefts), colors, 1)
    g = build_interval_graph(i)
    sol = solve_unit_interval(i)
    assert is_selective(g, sol) and sol.size == exact_mss(g).size
