from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tw3color.errors import InputError
from tw3color.galvin import _kernel, galvin_color, konig_coloring
from tw3color.generators import random_lists
from tw3color.graph import Graph, complete_bipartite, cycle_graph
from tw3color.oracle import verify_edge_coloring


@st.composite
def bipartite_graphs(draw: st.DrawFn) -> Graph:
    a = draw(st.integers(1, 4))
    b = draw(st.integers(1, 4))
    pairs = [(i, a + j) for i in range(a) for j in range(b)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1))
    return Graph(range(a + b), chosen)


@given(bipartite_graphs())
def test_konig_uses_delta_colors(g: Graph) -> None:
    left, _ = g.bipartition()
    col = konig_coloring(g, left)
    assert verify_edge_coloring(g, col) is None
    assert set(col.values()) <= set(range(1, g.max_degree + 1))


@given(bipartite_graphs(), st.integers(0, 2**31), st.integers(0, 3))
def test_galvin_colors_from_delta_lists(g: Graph, seed: int, slack: int) -> None:
    lists = random_lists(g, lambda e: g.max_degree, g.max_degree + slack, seed)
    col = galvin_color(g, lists)
    assert verify_edge_coloring(g, col, lists) is None


@given(bipartite_graphs())
def test_kernel_is_independent_and_absorbing(g: Graph) -> None:
    left, _ = g.bipartition()
    phi = konig_coloring(g, left)
    edges = g.edge_list()
    kernel = _kernel(edges, phi, left)
    ends = [v for e in kernel for v in e]
    assert len(ends) == len(set(ends))
    for e in edges:
        if e in kernel:
            continue
        a = e[0] if e[0] in left else e[1]
        b = e[1] if a == e[0] else e[0]
        absorbed = any(a in k and phi[k] > phi[e] for k in kernel) or \
            any(b in k and phi[k] < phi[e] for k in kernel)
        assert absorbed


def test_rejects_odd_cycles_and_short_lists() -> None:
    g = cycle_graph(3)
    with pytest.raises(InputError):
        galvin_color(g, {e: frozenset({1, 2, 3}) for e in g.edges})
    k = complete_bipartite(2, 2)
    with pytest.raises(InputError):
        galvin_color(k, {e: frozenset({1}) for e in k.edges})
