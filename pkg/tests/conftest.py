from __future__ import annotations

import itertools
import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tw3color.generators import random_partial_ktree
from tw3color.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=600, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES: list[str] = []


@st.composite
def tw3_graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 25) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    keep = draw(st.sampled_from([0.5, 0.8, 1.0]))
    seed = draw(st.integers(min_value=0, max_value=2**31))
    return random_partial_ktree(n, 3, keep, seed)


def brute_force_edge_coloring(g: Graph, lists) -> dict | None:
    """Plain product enumeration, for cross-checking the backtracking kernel."""
    edges = g.edge_list()
    for combo in itertools.product(*(sorted(lists[e]) for e in edges)):
        col = dict(zip(edges, combo))
        if all(col[e] != col[f] for e in edges for f in g.adjacent_edges(e)):
            return col
    return None


def pytest_terminal_summary(terminalreporter) -> None:
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
