from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tw3color.errors import InputError
from tw3color.fixtures import figure1_graph, figure5_graph
from tw3color.graph import Graph, complete_graph, cycle_graph, edge, path_graph

from conftest import tw3_graphs


def test_edges_are_canonical() -> None:
    assert edge(3, 1) == (1, 3)
    with pytest.raises(InputError):
        edge(2, 2)


def test_rejects_parallel_edges_and_stray_endpoints() -> None:
    with pytest.raises(InputError):
        Graph([0, 1], [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph([0, 1], [(0, 2)])


def test_degrees_and_max_degree() -> None:
    g = Graph(range(4), [(0, 1), (0, 2), (0, 3)])
    assert [g.degree(v) for v in g.vertices] == [3, 1, 1, 1]
    assert g.max_degree == 3
    assert Graph(range(3)).max_degree == 0


def test_labels_do_not_affect_equality() -> None:
    a = Graph(range(2), [(0, 1)], {0: "x"})
    b = Graph(range(2), [(0, 1)])
    assert a == b and hash(a) == hash(b)


def test_local_subgraph_of_k4_at_one_vertex_is_a_star() -> None:
    g = complete_graph(4)
    star = g.local_subgraph({0})
    assert star.edges == {(0, 1), (0, 2), (0, 3)}
    assert set(star.vertices) == {0, 1, 2, 3}


def test_local_subgraph_of_everything_is_identity() -> None:
    g = figure1_graph().graph
    assert g.local_subgraph(g.vertices) == g


def test_local_subgraph_on_two_inner_halin_vertices() -> None:
    g = figure5_graph().graph
    w = {1, 2}
    scanned = {e for e in g.edges if e[0] in w or e[1] in w}
    local = g.local_subgraph(w)
    assert local.edges == scanned
    assert local.num_edges == 6


def test_unknown_vertices_are_rejected() -> None:
    g = complete_graph(3)
    with pytest.raises(InputError):
        g.local_subgraph({7})
    with pytest.raises(InputError):
        g.remove_vertices({7})


def test_remove_vertices_examples() -> None:
    assert complete_graph(4).remove_vertices({3}) == complete_graph(3)
    g = figure1_graph().graph
    assert g.remove_vertices(set()) == g
    # v4, v5 are ids 3 and 4
    assert g.remove_vertices({3, 4}) == complete_graph(3)


def _brute_bipartite(g: Graph) -> bool:
    vs = list(g.vertices)
    for bits in itertools.product((0, 1), repeat=len(vs)):
        side = dict(zip(vs, bits))
        if all(side[u] != side[v] for u, v in g.edges):
            return True
    return False


def test_bipartition_examples() -> None:
    left, right = cycle_graph(4).bipartition()
    assert len(left) == len(right) == 2
    assert cycle_graph(3).bipartition() is None
    f5 = figure5_graph().graph
    assert f5.bipartition() is None
    assert not _brute_bipartite(f5)


@given(tw3_graphs(max_n=10))
def test_bipartition_matches_brute_force(g: Graph) -> None:
    parts = g.bipartition()
    assert (parts is not None) == _brute_bipartite(g)
    if parts is not None:
        left, right = parts
        assert all((u in left) != (v in left) for u, v in g.edges)
        assert left | right == set(g.vertices)


@given(tw3_graphs(), st.data())
def test_partition_and_degree_additivity(g: Graph, data) -> None:
    w = data.draw(st.sets(st.sampled_from(g.vertices)))
    local, rest = g.local_subgraph(w), g.remove_vertices(w)
    assert local.edges | rest.edges == g.edges
    assert not local.edges & rest.edges
    for v in g.vertices:
        if v not in w:
            in_local = local.degree(v) if v in local else 0
            assert g.degree(v) == rest.degree(v) + in_local


def test_relabeled_renumbers_densely() -> None:
    g = Graph([5, 9, 11], [(5, 9), (9, 11)])
    h, mapping = g.relabeled()
    assert h.vertices == (0, 1, 2) and mapping == {5: 0, 9: 1, 11: 2}
    assert h == path_graph(3)
