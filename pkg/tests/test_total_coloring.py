from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tw3color.colorings import TotalListAssignment
from tw3color.edge_coloring import EngineStats
from tw3color.errors import ListTooShort, TooWide
from tw3color.generators import random_partial_ktree
from tw3color.graph import Graph, complete_graph
from tw3color.oracle import verify_total_coloring
from tw3color.total_coloring import total_bound, total_color_delta_plus_2, total_color_tw3

from conftest import tw3_graphs


def _random_total_lists(g: Graph, size: int, universe: int, seed: int) -> TotalListAssignment:
    rng = random.Random(seed)
    pool = range(1, universe + 1)
    return TotalListAssignment({e: frozenset(rng.sample(pool, size)) for e in g.edge_list()},
                               {v: frozenset(rng.sample(pool, size)) for v in g.vertices})


def test_bound_is_max_five_delta_plus_two() -> None:
    assert total_bound(complete_graph(4)) == 7
    star = Graph(range(9), [(0, i) for i in range(1, 9)])
    assert total_bound(star) == 10


def test_k4_with_seven_colors() -> None:
    g = complete_graph(4)
    lists = TotalListAssignment.uniform(g, 7)
    col = total_color_tw3(g, lists)
    assert verify_total_coloring(g, col, lists) is None


@given(tw3_graphs(), st.integers(0, 2**31))
def test_engine_on_random_lists(g: Graph, seed: int) -> None:
    b = total_bound(g)
    lists = _random_total_lists(g, b, 2 * b, seed)
    stats = EngineStats(check_decompositions=True)
    col = total_color_tw3(g, lists, stats=stats)
    assert verify_total_coloring(g, col, lists) is None


@given(tw3_graphs(max_n=18))
def test_delta_plus_two(g: Graph) -> None:
    col = total_color_delta_plus_2(g)
    assert verify_total_coloring(g, col) is None
    assert col.colors_used() <= set(range(1, g.max_degree + 3))


def test_high_degree_route_uses_engine() -> None:
    stats = EngineStats()
    for seed in range(40):
        g = random_partial_ktree(25, 3, 1.0, seed)
        if g.max_degree < 6:
            continue
        total_color_delta_plus_2(g, stats=stats)
    assert "total_exact" not in stats.branches
    assert stats.branches["total_one_leaf"] > 0 and stats.fallbacks == 0


def test_preconditions() -> None:
    g = complete_graph(4)
    with pytest.raises(ListTooShort):
        total_color_tw3(g, TotalListAssignment.uniform(g, 6))
    k5 = complete_graph(5)
    with pytest.raises(TooWide):
        total_color_tw3(k5, TotalListAssignment.uniform(k5, 7))
