import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selset import Block, GraphError, blocks, boundary_partition, boundary_partitions

import oracle
from instances import make


def test_p3_blocks(p3):
    first, second = blocks(p3)
    part = boundary_partition(p3, first)
    assert (part.b1, part.b2) == ((2,), (1,))
    part = boundary_partition(p3, second)
    assert (part.b1, part.b2) == ((3,), ())


def test_path_block(path5):
    part = boundary_partition(path5, blocks(path5)[0])
    assert part.b1 == (3,) and part.b2 == (2,) and part.ball == (2, 3)


def test_monochromatic_has_no_boundary(triangle):
    (part,) = boundary_partitions(triangle)
    assert part.b1 == () and part.b2 == ()


@pytest.mark.parametrize(
    "block",
    [
        Block(1, 1, (1,)),  # not maximal
        Block(1, 1, (1, 3)),  # spans two blocks
        Block(1, 2, (1, 2)),  # wrong color
        Block(1, 1, ()),
    ],
)
def test_rejects_non_blocks(p3, block):
    with pytest.raises(GraphError):
        boundary_partition(p3, block)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 14), st.integers(1, 4), st.integers(0, 2**32))
def test_matches_definition_scan(n, c, seed):
    g = make("random-connected-graph", n, min(c, n), seed, 0.2)
    b1, b2 = oracle.boundary_sets(g)
    parts = boundary_partitions(g)
    assert set().union(*(p.b1 for p in parts)) == b1
    assert set().union(*(p.b2 for p in parts)) == b2
    for b, p in zip(blocks(g), parts):
        assert p == boundary_partition(g, b)
        assert set(p.ball) <= set(b.members)
        assert not set(p.b1) & set(p.b2)
        if g.c >= 2:
            assert p.b1
