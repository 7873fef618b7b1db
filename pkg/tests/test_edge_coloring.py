from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tw3color.colorings import bound_plus_lists, uniform_lists
from tw3color.edge_coloring import (
    EngineStats,
    _edge_bound,
    ballon_color,
    color_tw3_edges,
    greedy_extend,
    local_sizes,
    remaining_edge_lists,
    truncate,
)
from tw3color.errors import InputError, IntegrityError, ListTooShort, Stuck, TooWide
from tw3color.fixtures import figure1_graph, figure2_instance
from tw3color.generators import random_lists, random_partial_ktree, tight_edge_lists
from tw3color.graph import Graph, complete_graph, cycle_graph, edge
from tw3color.oracle import exact_list_edge_color, verify_edge_coloring

from conftest import tw3_graphs


def _cycle_edges(n: int) -> list:
    # e1 = (0,1), ..., en = (n-1, 0); e1 and en meet at 0, the pendant is (0, n)
    return [edge(i, (i + 1) % n) for i in range(n)]


@st.composite
def balloon_instances(draw: st.DrawFn):
    n = draw(st.integers(3, 6))
    cycle = _cycle_edges(n)
    pendant = edge(0, n)
    colors = st.integers(1, 6)
    rl = {cycle[0]: frozenset(draw(st.sets(colors, min_size=3, max_size=4)))}
    for e in cycle[1:] + [pendant]:
        rl[e] = frozenset(draw(st.sets(colors, min_size=2, max_size=3)))
    return cycle, pendant, rl


@given(balloon_instances())
def test_ballon_color_always_succeeds(inst) -> None:
    cycle, pendant, rl = inst
    col = ballon_color(cycle, pendant, rl)
    shape = Graph({v for e in rl for v in e}, rl)
    assert verify_edge_coloring(shape, col, rl) is None


def test_ballon_color_rejects_wrong_shapes_and_sizes() -> None:
    cycle = _cycle_edges(4)
    full = {e: frozenset({1, 2, 3}) for e in cycle + [edge(0, 4)]}
    with pytest.raises(InputError):
        ballon_color(cycle, edge(2, 4), full)  # pendant not at the hub
    with pytest.raises(InputError):
        ballon_color(cycle[:3], edge(0, 4), full)  # open path
    short = dict(full)
    short[cycle[0]] = frozenset({1, 2})
    with pytest.raises(InputError):
        ballon_color(cycle, edge(0, 4), short)


def test_greedy_extend_and_stuck() -> None:
    g = cycle_graph(3)
    rl = {e: frozenset({1, 2}) for e in g.edges}
    with pytest.raises(Stuck):
        greedy_extend(g, rl, {})
    rl[(0, 2)] = frozenset({3})
    out = greedy_extend(g, rl, {})
    assert verify_edge_coloring(g, out, rl) is None


def test_remaining_lists_and_truncate() -> None:
    g = cycle_graph(3)
    lists = uniform_lists(g, 3)
    rl = remaining_edge_lists(g, lists, {(0, 1): 2}, [(1, 2), (0, 2)])
    assert rl == {(1, 2): frozenset({1, 3}), (0, 2): frozenset({1, 3})}
    with pytest.raises(InputError):
        remaining_edge_lists(g, lists, {(0, 1): 2}, [(0, 1)])
    assert truncate(rl, {(1, 2): 1, (0, 2): 2})[(1, 2)] == frozenset({1})
    with pytest.raises(IntegrityError):
        truncate(rl, {(1, 2): 3, (0, 2): 1})


def test_local_sizes_reproduce_one_leaf_minima() -> None:
    fx = figure2_instance()
    labels = {s: v for v, s in fx.graph.labels.items()}
    w = {labels["w0"], labels["w1"]}
    assert local_sizes(fx.graph, w, _edge_bound) == fx.sizes


@given(tw3_graphs(), st.integers(0, 2**31))
def test_engine_on_tight_lists(g: Graph, seed: int) -> None:
    lists = tight_edge_lists(g, seed)
    stats = EngineStats(check_decompositions=True)
    col = color_tw3_edges(g, lists, stats=stats)
    assert verify_edge_coloring(g, col, lists) is None
    assert stats.decompositions_checked == stats.smoothings


@given(tw3_graphs(max_n=12), st.integers(0, 2**31))
def test_engine_agrees_with_oracle_on_small_instances(g: Graph, seed: int) -> None:
    lists = tight_edge_lists(g, seed, universe=max(g.max_degree + 2, 1))
    col = color_tw3_edges(g, lists)
    if g.num_edges <= 18:
        assert exact_list_edge_color(g, lists).satisfiable
    assert verify_edge_coloring(g, col, lists) is None


def test_every_branch_is_exercised() -> None:
    stats = EngineStats()
    for seed in range(150):
        g = random_partial_ktree(8 + seed % 25, 3, 0.85, seed)
        color_tw3_edges(g, tight_edge_lists(g, seed), stats=stats)
    expected = {"low_degree", "k4", "two_leaf_same", "two_leaf_distinct",
                "one_leaf_deg4", "one_leaf_deg3_pendant", "one_leaf_deg3_square"}
    assert expected <= set(stats.branches)
    assert stats.fallbacks == 0


def test_k5_minus_edge_with_five_colors() -> None:
    g = figure1_graph().graph
    col = color_tw3_edges(g, uniform_lists(g, 5))
    assert verify_edge_coloring(g, col) is None


def test_preconditions() -> None:
    with pytest.raises(TooWide):
        color_tw3_edges(complete_graph(5), uniform_lists(complete_graph(5), 5))
    g = figure1_graph().graph
    with pytest.raises(ListTooShort):
        color_tw3_edges(g, bound_plus_lists(g, 0))
    with pytest.raises(InputError):
        color_tw3_edges(g, {(0, 1): {1, 2, 3, 4, 5}})


def test_supplied_decomposition_is_checked() -> None:
    from tw3color.decomposition import TreeDecomposition

    g = complete_graph(4)
    bad = TreeDecomposition({0: frozenset({0, 1, 2})}, frozenset())
    with pytest.raises(InputError):
        color_tw3_edges(g, uniform_lists(g, 4), td=bad)


def test_random_lists_have_requested_sizes() -> None:
    g = random_partial_ktree(15, seed=2)
    lists = random_lists(g, lambda e: 3, 5, seed=1)
    assert all(len(cs) == 3 and cs <= set(range(1, 6)) for cs in lists.values())
