import pytest

from hopdomlab.graph import (Graph, GraphBuilder, GraphError, ParseError,
                             exact_distance_neighborhood, is_claw_free,
                             is_regular, parse_graph, serialize_graph)
from hopdomlab.verify import named_graph

from conftest import C, K, P


def test_builder_validates():
    b = GraphBuilder(3)
    b.add_edge(0, 1)
    with pytest.raises(GraphError):
        b.add_edge(0, 0)
    with pytest.raises(GraphError):
        b.add_edge(1, 0)  # duplicate, reversed
    with pytest.raises(GraphError):
        b.add_edge(0, 3)
    g = b.build()
    assert g.adjacency == ((1,), (0,), ())
    assert g.m == 1


def test_adjacency_sorted_and_symmetric():
    g = Graph.from_edges(5, [(3, 4), (0, 4), (0, 2)])
    for u in range(g.n):
        assert list(g.adjacency[u]) == sorted(g.adjacency[u])
        for v in g.adjacency[u]:
            assert g.has_edge(v, u)
    assert g.m == 3


def test_distance_neighborhood_examples():
    assert exact_distance_neighborhood(P(3), 0, 2) == (2,)
    c4 = C(4)
    for v in range(4):
        n2 = exact_distance_neighborhood(c4, v, 2)
        assert n2 == ((v + 2) % 4,)
    pet = named_graph("petersen")
    for v in range(10):
        assert len(exact_distance_neighborhood(pet, v, 2)) == 6


def test_distance_neighborhood_errors_and_r1():
    g = P(4)
    with pytest.raises(GraphError):
        exact_distance_neighborhood(g, 4, 2)
    with pytest.raises(GraphError):
        exact_distance_neighborhood(g, 0, 0)
    for v in range(g.n):
        assert exact_distance_neighborhood(g, v, 1) == g.adjacency[v]


def test_distance_neighborhood_disconnected():
    g = Graph.from_edges(4, [(0, 1)])  # two isolated vertices
    assert exact_distance_neighborhood(g, 0, 2) == ()
    assert exact_distance_neighborhood(g, 2, 1) == ()


def test_neighborhood_properties_small_corpus(corpus5):
    for g in corpus5:
        for v in range(g.n):
            n1 = set(exact_distance_neighborhood(g, v, 1))
            n2 = set(exact_distance_neighborhood(g, v, 2))
            assert n1 == set(g.adjacency[v])
            assert not n1 & n2
            assert v not in n2
            for u in n2:
                assert v in exact_distance_neighborhood(g, u, 2)


def test_is_regular():
    assert is_regular(C(4), 2)
    assert is_regular(K(4), 3)
    assert not is_regular(P(3), 2)


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    le = []
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if set(edges[i]) & set(edges[j]):
                le.append((i, j))
    return Graph.from_edges(len(edges), le)


def test_is_claw_free():
    claw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert not is_claw_free(claw)
    assert is_claw_free(C(5))
    assert is_claw_free(line_graph(named_graph("petersen")))
    assert not is_claw_free(named_graph("K3,3"))


def test_parse_examples():
    assert parse_graph("2 1\n0 1\n").m == 1
    g = parse_graph("3 0\n")
    assert (g.n, g.m) == (3, 0)
    k4 = parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert is_regular(k4, 3)
    commented = parse_graph("# header comment\n2 1\n# edge next\n0 1\n")
    assert commented.m == 1


@pytest.mark.parametrize("text,line", [
    ("2 1\n1 0\n", 2),        # reversed edge
    ("2 2\n0 1\n0 1\n", 3),   # duplicate
    ("2 1\n0 2\n", 2),        # out of range
    ("2 5\n0 1\n", 1),        # count mismatch reported at header
    ("nonsense\n", 1),
    ("2 1\n0 x\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line_no == line


def test_serialize_round_trip(corpus5):
    for g in corpus5:
        text = serialize_graph(g)
        again = parse_graph(text)
        assert again.adjacency == g.adjacency
        assert serialize_graph(again) == text
