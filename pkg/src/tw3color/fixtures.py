"""Named fixture instances: sharpness witnesses and the local list-size shapes.

Size instances record the minimum remaining-list size of each edge in one
local extension step; :func:`lists_for_sizes` turns them into concrete lists.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .colorings import ListAssignment
from .graph import Edge, Graph, edge
from .halin import HalinStructure


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    lists: ListAssignment | None = None
    sizes: dict[Edge, int] = field(default_factory=dict)
    halin: HalinStructure | None = None
    description: str = ""


def _labelled(names: list[str], pairs: list[tuple[str, str]]) -> tuple[Graph, dict[str, int]]:
    ids = {s: i for i, s in enumerate(names)}
    g = Graph(range(len(names)), [(ids[a], ids[b]) for a, b in pairs], dict(enumerate(names)))
    return g, ids


def _sized(name: str, names: list[str], sized: list[tuple[str, str, int]], description: str) -> Fixture:
    g, ids = _labelled(names, [(a, b) for a, b, _ in sized])
    sizes = {edge(ids[a], ids[b]): k for a, b, k in sized}
    return Fixture(name, g, sizes=sizes, description=description)


def figure1_graph() -> Fixture:
    """K5 minus one edge: tree-width 3, maximum degree 4, chromatic index 5."""
    names = ["v1", "v2", "v3", "v4", "v5"]
    pairs = [(a, b) for i, a in enumerate(names) for b in names[i + 1:] if {a, b} != {"v4", "v5"}]
    g, _ = _labelled(names, pairs)
    return Fixture("figure1_graph", g, description="tree-width 3 graph with chromatic index 5")


def figure2_instance() -> Fixture:
    return _sized("figure2_instance", ["w0", "w1", "w2", "w3", "w4"],
                  [("w0", "w1", 5), ("w0", "w2", 3), ("w0", "w3", 3),
                   ("w1", "w2", 3), ("w1", "w3", 3), ("w1", "w4", 2)],
                  "one-leaf extension with deg(w1) = 4")


def figure3_instance() -> Fixture:
    return _sized("figure3_instance", ["w0", "w1", "w2", "w3", "w4", "v"],
                  [("w0", "w1", 2), ("w1", "w2", 4), ("w2", "w3", 4),
                   ("v", "w1", 3), ("v", "w2", 3), ("v", "w3", 3), ("w3", "w4", 2)],
                  "Halin fan extension at a vertex of degree at least 4")


def figure4_instance() -> Fixture:
    return _sized("figure4_instance", ["v0", "v1", "v2", "v3", "v"],
                  [("v0", "v1", 2), ("v1", "v2", 4), ("v2", "v3", 2),
                   ("v", "v1", 3), ("v", "v2", 3)],
                  "Halin extension at a vertex of degree 3")


def figure5_halin() -> HalinStructure:
    """Root with four children, each carrying two leaves."""
    return HalinStructure(0, {0: (1, 2, 3, 4), 1: (5, 6), 2: (7, 8), 3: (9, 10), 4: (11, 12)})


def figure5_graph() -> Fixture:
    """Halin graph with lists ``{1..max(deg u, deg v)}`` that admit no coloring."""
    h = figure5_halin()
    g = h.graph
    lists = {e: frozenset(range(1, max(g.degree(e[0]), g.degree(e[1])) + 1)) for e in g.edges}
    return Fixture("figure5_graph", g, lists=lists, halin=h,
                   description="Halin graph whose degree-sized lists admit no coloring")


def lists_for_sizes(fx: Fixture, universe: int | None = None, seed: int | None = None) -> ListAssignment:
    """``{1..size}`` per edge, or random lists from ``{1..universe}`` when a seed is given."""
    if seed is None:
        return {e: frozenset(range(1, k + 1)) for e, k in fx.sizes.items()}
    rng = random.Random(seed)
    top = universe or max(fx.sizes.values()) + 2
    return {e: frozenset(rng.sample(range(1, top + 1), k)) for e, k in sorted(fx.sizes.items())}


def fixtures() -> dict[str, Fixture]:
    """All named fixtures, keyed by name."""
    out = [figure1_graph(), figure2_instance(), figure3_instance(), figure4_instance(), figure5_graph()]
    return {fx.name: fx for fx in out}
