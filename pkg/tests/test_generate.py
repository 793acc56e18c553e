import pytest

from selset import GraphError, build_interval_graph, parse_graph, parse_intervals, solve_unit_interval
from selset.generate import GeneratorSpec, generate, generate_text, parse_spec


def test_same_seed_same_bytes():
    spec = GeneratorSpec("random-tree", 5, 2, 42)
    assert generate_text(spec) == generate_text(spec)
    assert generate_text(spec) != generate_text(GeneratorSpec("random-tree", 5, 2, 43))


def test_single_interval():
    for seed in range(5):
        inst = generate(GeneratorSpec("random-unit-interval", 1, 1, seed))
        assert inst.n == 1 and solve_unit_interval(inst).size == 1


def test_connected_graph_file_parses():
    g = parse_graph(generate_text(GeneratorSpec("random-connected-graph", 12, 3, 7)))
    assert g.n == 12 and g.c == 3 and g.is_connected()


@pytest.mark.parametrize("kind", ["random-tree", "random-unit-interval", "random-connected-graph"])
def test_every_color_used_and_connected(kind):
    for seed in range(30):
        for n, c in [(1, 1), (3, 3), (9, 4), (20, 2)]:
            text = generate_text(GeneratorSpec(kind, n, c, seed))
            if kind == "random-unit-interval":
                inst = parse_intervals(text)
                g = build_interval_graph(inst)
            else:
                g = parse_graph(text)
            assert g.n == n and g.c == c and g.is_connected()
            if kind == "random-tree":
                assert g.m == n - 1


def test_interval_gaps_respect_length():
    inst = generate(GeneratorSpec("random-unit-interval", 200, 3, 1, 4))
    assert inst.length == 4 and inst.is_connected()


@pytest.mark.parametrize(
    "args",
    [
        ("random-tree", 3, 4, 1, None),
        ("random-tree", 0, 1, 1, None),
        ("random-cactus", 3, 1, 1, None),
        ("random-unit-interval", 3, 1, 1, 0.5),
        ("random-connected-graph", 3, 1, 1, 2.0),
        ("random-tree", 3, 1, -1, None),
    ],
)
def test_infeasible_specs(args):
    with pytest.raises(GraphError):
        GeneratorSpec(*args)


def test_spec_strings():
    assert parse_spec("random-tree:10:3:5") == GeneratorSpec("random-tree", 10, 3, 5)
    spec = parse_spec("random-unit-interval:10:3:5:4")
    assert spec.extra == 4 and spec.label == "random-unit-interval:10:3:5:4"
    with pytest.raises(GraphError):
        parse_spec("random-tree:10")
