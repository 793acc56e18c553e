import sys
from pathlib import Path

import pytest

from selset import ColoredGraph, parse_graph

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def p3():
    return parse_graph("p mss 3 2 2\nv 1 1\nv 2 1\nv 3 2\ne 1 2\ne 2 3\n")


@pytest.fixture
def path5():
    return ColoredGraph.from_edges(5, [1, 1, 1, 2, 2], [(1, 2), (2, 3), (3, 4), (4, 5)])


@pytest.fixture
def triangle():
    return ColoredGraph.from_edges(3, [1, 1, 1], [(1, 2), (2, 3), (1, 3)])



def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    report = getattr(mod, "REPORT", None)
    if not report:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(report):
        terminalreporter.write_line(report[k])
