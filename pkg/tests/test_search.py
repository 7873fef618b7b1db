from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tw3color import _search
from tw3color.generators import random_lists
from tw3color.oracle import exact_list_edge_color, SearchBudget

from conftest import brute_force_edge_coloring, tw3_graphs

needs_numba = pytest.mark.skipif(_search.search_jit is None, reason="numba not installed")


@needs_numba
@given(tw3_graphs(max_n=12), st.integers(0, 2**31), st.integers(2, 4))
def test_backends_agree(g, seed, size) -> None:
    lists = random_lists(g, lambda e: min(size, 6), 6, seed)
    py = exact_list_edge_color(g, lists, backend="py")
    jit = exact_list_edge_color(g, lists, backend="jit")
    assert (py.status, py.nodes, py.coloring) == (jit.status, jit.nodes, jit.coloring)


@given(tw3_graphs(max_n=6), st.integers(0, 2**31))
def test_kernel_agrees_with_product_enumeration(g, seed) -> None:
    if g.num_edges > 9:
        return
    lists = random_lists(g, lambda e: 2, 3, seed)
    result = exact_list_edge_color(g, lists, backend="py")
    assert result.satisfiable == (brute_force_edge_coloring(g, lists) is not None)


def test_budget_is_reported_as_exhausted() -> None:
    from tw3color.fixtures import figure5_graph

    fx = figure5_graph()
    result = exact_list_edge_color(fx.graph, fx.lists, SearchBudget(max_nodes=5))
    assert result.exhausted and result.nodes <= 6


def test_empty_instance() -> None:
    indptr = np.zeros(1, dtype=np.int64)
    assign, status, nodes = _search.run_search(indptr, np.zeros(0, np.int64),
                                               np.zeros((0, 1), np.uint8), 10, backend="py")
    assert status == _search.SAT and len(assign) == 0


def test_environment_flag_disables_numba() -> None:
    code = "import tw3color._search as s; print(s.USE_NUMBA, s.search is s.search_py)"
    env = dict(os.environ, TW3COLOR_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True).stdout.split()
    assert out == ["False", "True"]
