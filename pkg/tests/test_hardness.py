import itertools

import pytest

from selset import (
    MonotoneCnf,
    VertexMap,
    assignment_to_subset,
    blocks,
    exact_mss,
    is_selective,
    parse_monotone_cnf,
    reduce_to_graph,
    subset_to_assignment,
)
from selset.graph import DisconnectedGraphError
from selset.hardness import (
    BLUE,
    RED,
    CnfError,
    SubsetDecodeError,
    format_assignment,
    format_cnf,
    format_vertex_map,
    parse_assignment,
    parse_vertex_map,
)

SAMPLE = MonotoneCnf.from_literals(
    6,
    [[1, 2, 3], [1, 3, 4], [4, 5, 6], [-1, -3, -4], [-1, -4, -6], [-4, -5, -6]],
)
SAMPLE_ASSIGNMENT = [True, True, False, False, False, True]


def test_parse_examples():
    cnf = parse_monotone_cnf("p cnf 3 1\n1 2 3 0\n")
    assert cnf.nvars == 3 and cnf.m == 1 and cnf.clauses[0].positive
    assert parse_monotone_cnf(format_cnf(SAMPLE)) == SAMPLE


@pytest.mark.parametrize(
    "text, needle",
    [
        ("p cnf 3 1\n1 -2 3 0\n", "mixed-polarity"),
        ("p cnf 2 1\n1 2 0\n", "clause size"),
        ("p cnf 3 1\n1 1 2 0\n", "repeated variable"),
        ("p cnf 3 1\n1 2 4 0\n", "outside"),
        ("p cnf 3 2\n1 2 3 0\n", "declares 2"),
        ("1 2 3 0\n", "before"),
        ("p cnf 3 1\n1 2 3\n", "terminated"),
        ("", "missing"),
    ],
)
def test_parse_errors(text, needle):
    with pytest.raises(CnfError, match=needle):
        parse_monotone_cnf(text)


def test_count_law_examples():
    g, _ = reduce_to_graph(SAMPLE)
    assert (g.n, g.m) == (54, 78)
    g, _ = reduce_to_graph(MonotoneCnf.from_literals(3, [[1, 2, 3]]))
    assert (g.n, g.m) == (21, 29)


def test_gadget_structure():
    cnf = MonotoneCnf.from_literals(3, [[1, 2, 3], [-1, -2, -3]])
    g, vmap = reduce_to_graph(cnf)
    assert vmap == VertexMap.layout(3, 2)
    for (x1, x2, x3), (n1, n2, n3) in zip(vmap.x, vmap.nx):
        assert g.colors[[x1, n1]].tolist() == [RED, RED]
        assert g.colors[[x2, x3, n2, n3]].tolist() == [BLUE] * 4
        expect = {(x1, x2), (x2, x3), (n1, n2), (n2, n3), (x1, n1), (x2, n3), (x3, n2), (x3, n3)}
        got = {e for e in g.edges() if set(e) <= {x1, x2, x3, n1, n2, n3}}
        assert got == {tuple(sorted(e)) for e in expect}
    (c1, c2, c3), (d1, d2, d3) = vmap.c
    assert set(g.neighbors(c3).tolist()) == {c2, 3, 9, 15}
    assert set(g.neighbors(d3).tolist()) == {d2, 6, 12, 18}
    members = [set(b.members) for b in blocks(g)]
    for (x1, _, _), (n1, _, _) in zip(vmap.x, vmap.nx):
        assert {x1, n1} in members
    assert {c1, c2} in members and {d1, d2} in members


def test_distinct_clause_colors():
    g, vmap = reduce_to_graph(SAMPLE, "distinct")
    assert g.c == 2 + SAMPLE.m
    for j, (c1, c2, c3) in enumerate(vmap.c, 1):
        assert g.colors[c1] == g.colors[c2] == 2 + j and g.colors[c3] == BLUE
    with pytest.raises(CnfError):
        reduce_to_graph(SAMPLE, "many")


def test_unused_variable_gives_disconnected_graph():
    cnf = MonotoneCnf.from_literals(4, [[1, 2, 3]])
    with pytest.raises(DisconnectedGraphError):
        reduce_to_graph(cnf)
    g, _ = reduce_to_graph(cnf, require_connected=False)
    assert (g.n, g.m) == (27, 37)


def test_sample_assignment():
    g, vmap = reduce_to_graph(SAMPLE)
    s = assignment_to_subset(SAMPLE, SAMPLE_ASSIGNMENT, vmap)
    assert len(s) == 18
    assert is_selective(g, s)
    assert subset_to_assignment(SAMPLE, s, vmap, g) == SAMPLE_ASSIGNMENT


def test_single_clause_round_trip():
    cnf = MonotoneCnf.from_literals(3, [[1, 2, 3]])
    g, vmap = reduce_to_graph(cnf)
    s = assignment_to_subset(cnf, [True, False, False], vmap)
    assert s == [1, 3, 10, 12, 16, 18, 19]
    assert is_selective(g, s)
    assert subset_to_assignment(cnf, s, vmap) == [True, False, False]


def test_every_satisfying_assignment_round_trips():
    g, vmap = reduce_to_graph(SAMPLE)
    count = 0
    for a in SAMPLE.satisfying_assignments():
        s = assignment_to_subset(SAMPLE, a, vmap)
        assert len(s) == 2 * SAMPLE.nvars + SAMPLE.m and is_selective(g, s)
        assert subset_to_assignment(SAMPLE, s, vmap, g) == list(a)
        count += 1
    assert count > 0


def test_assignment_must_satisfy():
    _, vmap = reduce_to_graph(SAMPLE)
    with pytest.raises(CnfError, match="does not satisfy"):
        assignment_to_subset(SAMPLE, [False] * 6, vmap)


def test_decode_errors_are_distinct():
    cnf = MonotoneCnf.from_literals(3, [[1, 2, 3]])
    g, vmap = reduce_to_graph(cnf)
    good = [1, 3, 10, 12, 16, 18, 19]

    def reason(subset):
        with pytest.raises(SubsetDecodeError) as err:
            subset_to_assignment(cnf, subset, vmap, g)
        return err.value.reason

    assert reason(good[:-1]) == "wrong-size"
    assert reason([1, 2, 10, 12, 16, 18, 19]) == "not-selective"
    # all-false pattern: every third vertex taken on the negative side
    assert reason([4, 6, 10, 12, 16, 18, 19]) == "not-selective"


def test_pattern_checks_behind_the_verifier(monkeypatch):
    # reach the gadget checks with a verifier that accepts everything
    import selset.hardness as hardness
    from selset import Verdict

    monkeypatch.setattr(hardness, "is_selective", lambda g, s: Verdict(True))
    cnf = MonotoneCnf.from_literals(3, [[1, 2, 3]])
    g, vmap = reduce_to_graph(cnf)

    def reason(subset):
        with pytest.raises(SubsetDecodeError) as err:
            subset_to_assignment(cnf, subset, vmap, g)
        return err.value.reason

    assert reason([1, 2, 10, 12, 16, 18, 19]) == "not-decomposable"
    assert reason([1, 3, 10, 12, 16, 18, 21]) == "not-decomposable"
    assert reason([4, 6, 10, 12, 16, 18, 19]) == "not-satisfying"


def test_every_minimum_subset_decodes():
    # single clause: all selective subsets of size 2n+m follow the gadget pattern
    cnf = MonotoneCnf.from_literals(3, [[1, 2, 3]])
    g, vmap = reduce_to_graph(cnf)
    seen = 0
    for combo in itertools.combinations(range(1, g.n + 1), 7):
        if is_selective(g, combo):
            assert cnf.satisfied(subset_to_assignment(cnf, combo, vmap, g))
            seen += 1
    assert seen >= 7


def test_map_and_assignment_text():
    _, vmap = reduce_to_graph(SAMPLE)
    assert parse_vertex_map(format_vertex_map(vmap)) == vmap
    with pytest.raises(CnfError):
        parse_vertex_map("x 1 1 2 3\n")
    assert parse_assignment(format_assignment(SAMPLE_ASSIGNMENT), 6) == SAMPLE_ASSIGNMENT
    assert parse_assignment("v 1 -2\nv 3 0\n", 3) == [True, False, True]
    with pytest.raises(CnfError):
        parse_assignment("1 -1 2 0", 2)
    with pytest.raises(CnfError):
        parse_assignment("1 0", 2)


def test_exact_size_on_small_formula():
    cnf = MonotoneCnf.from_literals(3, [[1, 2, 3], [-1, -2, -3]])
    g, _ = reduce_to_graph(cnf)
    assert exact_mss(g).size == 2 * 3 + 2
