import pytest

from blockradio.graph import Graph, path_graph, star_graph

# triangle {a, b, c} with a pendant x on c
A, B, C, X = 0, 1, 2, 3


def triangle_pendant() -> Graph:
    return Graph.from_edges(4, [(A, B), (A, C), (B, C), (C, X)])


def k4_with_path() -> Graph:
    """K4 on {0,1,2,3} plus the path 0-4-5: a block graph where rn exceeds LB by one."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5)])


@pytest.fixture
def tp() -> Graph:
    return triangle_pendant()


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def k13() -> Graph:
    return star_graph(3)


# acceptance lines collected by test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
