from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from tw3color.decomposition import (
    TreeDecomposition,
    decompose_tw3,
    make_smooth,
    pivot_node,
    smoothness_report,
    unique_bag_vertex,
    verify_td,
)
from tw3color.errors import InputError, IntegrityError, NotApplicable, TooWide
from tw3color.fixtures import figure1_graph, figure5_graph
from tw3color.graph import Graph, complete_graph, path_graph

from conftest import tw3_graphs


def _brute_treewidth_at_most(g: Graph, k: int) -> bool:
    """Try every elimination order; width is the largest later-neighbourhood."""
    for order in itertools.permutations(g.vertices):
        adj = {v: set(g.adj[v]) for v in g.vertices}
        width = 0
        for v in order:
            nb = adj.pop(v)
            width = max(width, len(nb))
            for a in nb:
                adj[a].discard(v)
                adj[a] |= nb - {a}
        if width <= k:
            return True
    return False


def _td(bags: dict, edges) -> TreeDecomposition:
    return TreeDecomposition({t: frozenset(b) for t, b in bags.items()}, frozenset(edges))


def test_k4_has_one_bag() -> None:
    td = decompose_tw3(complete_graph(4))
    assert list(td.bags.values()) == [frozenset(range(4))]
    assert td.width == 3


def test_k5_is_too_wide() -> None:
    with pytest.raises(TooWide, match="tree-width exceeds 3"):
        decompose_tw3(complete_graph(5))


def test_k5_minus_edge_has_treewidth_exactly_three() -> None:
    g = figure1_graph().graph
    td = decompose_tw3(g)
    assert verify_td(g, td, 3) and td.width == 3
    assert not _brute_treewidth_at_most(g, 2)


def test_verify_td_examples() -> None:
    k4 = complete_graph(4)
    assert verify_td(k4, _td({0: range(4)}, []), 3)
    assert not verify_td(k4, _td({0: range(3)}, []), 3)
    p5 = path_graph(5)
    chain = _td({i: (i, i + 1) for i in range(4)}, [(i, i + 1) for i in range(3)])
    assert verify_td(p5, chain, 1)


def test_verify_td_rejects_broken_connectivity_and_cycles() -> None:
    p3 = path_graph(3)
    split = _td({0: {0, 1}, 1: {1, 2}, 2: {0}}, [(0, 1), (1, 2)])
    assert not verify_td(p3, split, 1)
    cyclic = _td({0: {0, 1}, 1: {1, 2}, 2: {1}}, [(0, 1), (1, 2), (0, 2)])
    assert not verify_td(p3, cyclic, 1)


@given(tw3_graphs(max_n=8))
def test_decompose_agrees_with_brute_force(g: Graph) -> None:
    td = decompose_tw3(g)
    assert verify_td(g, td, 3)
    assert _brute_treewidth_at_most(g, td.width)


def test_too_wide_agrees_with_brute_force_on_dense_graphs() -> None:
    import random

    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(5, 7)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.75]
        g = Graph(range(n), pairs)
        try:
            decompose_tw3(g)
            accepted = True
        except TooWide:
            accepted = False
        assert accepted == _brute_treewidth_at_most(g, 3)


@given(tw3_graphs(min_n=4))
def test_make_smooth_invariants(g: Graph) -> None:
    smooth = make_smooth(decompose_tw3(g), g, 3)
    assert verify_td(g, smooth, 3)
    assert smoothness_report(smooth, 3).smooth
    assert len(smooth.bags) == len(g.vertices) - 3
    for t in smooth.bags:
        if smooth.is_leaf(t) and len(smooth.bags) > 1:
            v = unique_bag_vertex(smooth, t)
            assert sum(v in b for b in smooth.bags.values()) == 1
            assert g.degree(v) <= 3


def test_make_smooth_on_smooth_input_keeps_bags() -> None:
    g = Graph(range(5), [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)])
    td = _td({0: {0, 1, 2, 3}, 1: {1, 2, 3, 4}}, [(0, 1)])
    out = make_smooth(td, g, 3)
    assert sorted(map(sorted, out.bags.values())) == sorted(map(sorted, td.bags.values()))
    k4 = complete_graph(4)
    assert list(make_smooth(decompose_tw3(k4), k4, 3).bags.values()) == [frozenset(range(4))]


def test_make_smooth_handles_duplicate_bags() -> None:
    g = figure5_graph().graph
    td = decompose_tw3(g)
    # duplicate every bag as an extra leaf
    fresh = max(td.bags) + 1
    bags = dict(td.bags)
    edges = set(td.tree_edges)
    for t in list(td.bags):
        bags[fresh] = td.bags[t]
        edges.add((t, fresh))
        fresh += 1
    doubled = TreeDecomposition(bags, frozenset(edges))
    assert verify_td(g, doubled, 3)
    assert not smoothness_report(doubled, 3).all_bags_distinct
    smooth = make_smooth(doubled, g, 3)
    assert verify_td(g, smooth, 3) and smoothness_report(smooth, 3).smooth


def test_make_smooth_needs_enough_vertices() -> None:
    g = path_graph(3)
    with pytest.raises(InputError):
        make_smooth(decompose_tw3(g), g, 3)


def test_pivot_examples() -> None:
    star = _td({0: {0}, 1: {1}, 2: {2}, 3: {3}}, [(0, 1), (0, 2), (0, 3)]).rooted(0)
    assert pivot_node(star) == 0
    path = _td({0: {0}, 1: {1}, 2: {2}}, [(0, 1), (1, 2)]).rooted(0)
    assert pivot_node(path) == 1
    with pytest.raises(NotApplicable):
        pivot_node(_td({0: {0}}, []))


@given(tw3_graphs(min_n=6))
def test_pivot_children_are_leaves(g: Graph) -> None:
    smooth = make_smooth(decompose_tw3(g), g, 3)
    if len(smooth.bags) < 3:
        return
    t = pivot_node(smooth)
    h = smooth.heights()
    assert smooth.tree_degree(t) >= 2
    for s in smooth.tree_neighbors(t):
        if h[s] > h[t]:
            assert smooth.is_leaf(s)
    assert all(h[s] <= h[t] for s in smooth.bags if smooth.tree_degree(s) >= 2)


def test_unique_bag_vertex_examples() -> None:
    td = _td({0: {0, 1, 2, 3}, 1: {1, 2, 3, 4}}, [(0, 1)])
    assert unique_bag_vertex(td, 0) == 0
    assert unique_bag_vertex(td, 1) == 4
    same = _td({0: {0, 1, 2, 3}, 1: {0, 1, 2, 3}}, [(0, 1)])
    with pytest.raises(IntegrityError):
        unique_bag_vertex(same, 0)
