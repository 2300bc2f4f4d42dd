import pytest

from comfnet import Graph, cycle_graph, parse_edge_list, path_graph

P6_TEXT = "6 5\n0 1\n1 2\n2 3\n3 4\n4 5"


@pytest.fixture
def p6() -> Graph:
    return parse_edge_list(P6_TEXT)


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)


@pytest.fixture
def p7() -> Graph:
    return path_graph(7)


@pytest.fixture
def k4_minus_edge() -> Graph:
    # complete on 4 vertices with edge {0,1} removed; diameter 2
    return Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
