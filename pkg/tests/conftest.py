import pytest

from hopdomlab.graph import Graph
from hopdomlab.verify import connected_graphs


def K(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def C(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def P(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture(scope="session")
def corpus5():
    return connected_graphs(5)


@pytest.fixture(scope="session")
def corpus7():
    return connected_graphs(7)
