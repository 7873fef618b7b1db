"""Ground truth: coloring verifiers and exhaustive solvers.

Nothing here depends on the proof-driven engines, so it can be used to check
them.  Solvers report ``sat``, ``unsat`` or ``exhausted``; an ``unsat``
answer is definitive because it is only returned after the whole search tree
was explored within budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

import numpy as np

from . import _search
from .colorings import ListAssignment, PartialColoring, TotalColoring, TotalListAssignment
from .errors import InputError, ResourceExceeded
from .graph import Edge, Graph

DEFAULT_MAX_NODES = 10_000_000


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = DEFAULT_MAX_NODES


@dataclass
class SearchResult:
    status: str  # "sat" | "unsat" | "exhausted"
    coloring: object
    nodes: int

    @property
    def exhausted(self) -> bool:
        return self.status == "exhausted"

    @property
    def satisfiable(self) -> bool:
        return self.status == "sat"

    def report_line(self) -> str:
        return f"result {self.status} nodes {self.nodes}"


@dataclass(frozen=True)
class Violation:
    kind: str
    elements: tuple
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.kind}: {self.elements} {self.detail}".strip()


# -- verifiers ------------------------------------------------------------

def verify_edge_coloring(g: Graph, coloring: Mapping[Edge, int],
                         lists: Mapping[Edge, frozenset] | None = None,
                         *, complete: bool = True) -> Violation | None:
    """First problem found in ``coloring``, or ``None`` if it is a valid L-edge-coloring."""
    for e in coloring:
        if e not in g.edges:
            return Violation("unknown-edge", (e,))
    if complete:
        for e in g.edge_list():
            if e not in coloring:
                return Violation("uncolored", (e,))
    if lists is not None:
        for e, c in sorted(coloring.items()):
            if c not in lists[e]:
                return Violation("not-in-list", (e,), f"color {c}")
    for v in g.vertices:
        seen: dict[int, Edge] = {}
        for e in g.incident(v):
            if e in coloring:
                c = coloring[e]
                if c in seen:
                    return Violation("adjacent-same-color", (seen[c], e), f"color {c}")
                seen[c] = e
    return None


def verify_total_coloring(g: Graph, coloring: TotalColoring,
                          lists: TotalListAssignment | None = None,
                          *, complete: bool = True) -> Violation | None:
    bad = verify_edge_coloring(g, coloring.edges, lists.edges if lists else None,
                               complete=complete)
    if bad is not None:
        return bad
    for v in coloring.vertices:
        if v not in g:
            return Violation("unknown-vertex", (v,))
    if complete:
        for v in g.vertices:
            if v not in coloring.vertices:
                return Violation("uncolored", (v,))
    vc = coloring.vertices
    if lists is not None:
        for v, c in sorted(vc.items()):
            if c not in lists.vertices[v]:
                return Violation("not-in-list", (v,), f"color {c}")
    for u, v in g.edge_list():
        if u in vc and v in vc and vc[u] == vc[v]:
            return Violation("adjacent-vertices-same-color", (u, v), f"color {vc[u]}")
        c = coloring.edges.get((u, v))
        if c is not None:
            for x in (u, v):
                if vc.get(x) == c:
                    return Violation("edge-equals-endpoint", ((u, v), x), f"color {c}")
    return None


def colors_used(coloring: Mapping[Edge, int]) -> set[int]:
    return set(coloring.values())


# -- generic exact search -------------------------------------------------

def solve_list_coloring(
    elements: Sequence[Hashable],
    conflicts: Mapping[Hashable, Sequence[Hashable]],
    lists: Mapping[Hashable, frozenset],
    budget: SearchBudget | None = None,
    *,
    backend: str | None = None,
) -> tuple[str, dict | None, int]:
    """List-color the conflict graph on ``elements``.

    Returns ``(status, assignment, nodes)``; ``assignment`` maps each element
    to a color and is ``None`` unless ``status == "sat"``.
    """
    budget = budget or SearchBudget()
    elements = list(elements)
    index = {x: i for i, x in enumerate(elements)}
    palette = sorted(set().union(*(lists[x] for x in elements))) if elements else []
    cidx = {c: i for i, c in enumerate(palette)}
    allowed = np.zeros((len(elements), max(len(palette), 1)), dtype=np.uint8)
    for x in elements:
        for c in lists[x]:
            allowed[index[x], cidx[c]] = 1
    indptr = np.zeros(len(elements) + 1, dtype=np.int64)
    flat: list[int] = []
    for i, x in enumerate(elements):
        nbrs = sorted({index[y] for y in conflicts.get(x, ()) if y in index and y != x})
        flat.extend(nbrs)
        indptr[i + 1] = len(flat)
    indices = np.asarray(flat, dtype=np.int64)
    assign, status, nodes = _search.run_search(indptr, indices, allowed,
                                               budget.max_nodes, backend=backend)
    if status == _search.SAT:
        return "sat", {x: palette[assign[index[x]]] for x in elements}, nodes
    return ("unsat" if status == _search.UNSAT else "exhausted"), None, nodes


def line_graph_conflicts(g: Graph, edges: Sequence[Edge] | None = None) -> dict[Edge, list[Edge]]:
    scope = set(g.edges if edges is None else edges)
    return {e: [f for f in g.adjacent_edges(e) if f in scope] for e in scope}


def exact_list_edge_color(g: Graph, lists: Mapping[Edge, frozenset],
                          budget: SearchBudget | None = None, *,
                          edges: Sequence[Edge] | None = None,
                          backend: str | None = None) -> SearchResult:
    """Exhaustive L-edge-coloring search; ``edges`` restricts the scope."""
    scope = sorted(g.edges) if edges is None else sorted(edges)
    for e in scope:
        if e not in lists:
            raise InputError(f"no list for edge {e}")
    status, found, nodes = solve_list_coloring(scope, line_graph_conflicts(g, scope),
                                               lists, budget, backend=backend)
    return SearchResult(status, found, nodes)


def chromatic_index(g: Graph, budget: SearchBudget | None = None) -> int:
    """Least ``k`` such that uniform lists ``{1..k}`` admit an edge coloring."""
    if not g.edges:
        return 0
    k = g.max_degree
    while True:
        lists = {e: frozenset(range(1, k + 1)) for e in g.edges}
        result = exact_list_edge_color(g, lists, budget)
        if result.satisfiable:
            return k
        if result.exhausted:
            raise ResourceExceeded(f"budget exhausted deciding chromatic index > {k - 1}")
        k += 1


def total_conflicts(g: Graph, edges: Sequence[Edge] | None = None,
                    vertices: Sequence[int] | None = None) -> dict[tuple, list[tuple]]:
    """Conflict graph of the total graph on the scoped elements.

    Elements are ``("e", edge)`` and ``("v", vertex)``.
    """
    es = set(g.edges if edges is None else edges)
    vs = set(g.vertices if vertices is None else vertices)
    out: dict[tuple, list[tuple]] = {}
    for e in es:
        nb = [("e", f) for f in g.adjacent_edges(e) if f in es]
        nb += [("v", x) for x in e if x in vs]
        out[("e", e)] = nb
    for v in vs:
        nb = [("v", u) for u in g.adj[v] if u in vs]
        nb += [("e", f) for f in g.incident(v) if f in es]
        out[("v", v)] = nb
    return out


def _total_elements(edges, vertices) -> list[tuple]:
    return [("e", e) for e in sorted(edges)] + [("v", v) for v in sorted(vertices)]


def exact_list_total_color(g: Graph, lists: TotalListAssignment,
                           budget: SearchBudget | None = None, *,
                           edges: Sequence[Edge] | None = None,
                           vertices: Sequence[int] | None = None,
                           backend: str | None = None) -> SearchResult:
    es = sorted(g.edges) if edges is None else sorted(edges)
    vs = list(g.vertices) if vertices is None else sorted(vertices)
    flat = {("e", e): lists.edges[e] for e in es}
    flat.update({("v", v): lists.vertices[v] for v in vs})
    status, found, nodes = solve_list_coloring(_total_elements(es, vs),
                                               total_conflicts(g, es, vs), flat,
                                               budget, backend=backend)
    coloring = None
    if found is not None:
        coloring = TotalColoring({x: c for (kind, x), c in found.items() if kind == "e"},
                                 {x: c for (kind, x), c in found.items() if kind == "v"})
    return SearchResult(status, coloring, nodes)


def exact_total_color(g: Graph, k: int, budget: SearchBudget | None = None, *,
                      backend: str | None = None) -> SearchResult:
    """Total coloring with the uniform palette ``{1..k}``."""
    if k < 1:
        raise InputError("k must be at least 1")
    return exact_list_total_color(g, TotalListAssignment.uniform(g, k), budget,
                                  backend=backend)


def total_chromatic_number(g: Graph, budget: SearchBudget | None = None) -> int:
    k = max(g.max_degree + 1, 1)
    while True:
        result = exact_total_color(g, k, budget)
        if result.satisfiable:
            return k
        if result.exhausted:
            raise ResourceExceeded(f"budget exhausted at k={k}")
        k += 1


def has_edge_coloring(g: Graph, lists: ListAssignment, budget: SearchBudget | None = None) -> bool:
    result = exact_list_edge_color(g, lists, budget)
    if result.exhausted:
        raise ResourceExceeded("search budget exhausted")
    return result.satisfiable


__all__ = [
    "SearchBudget", "SearchResult", "Violation", "verify_edge_coloring",
    "verify_total_coloring", "exact_list_edge_color", "exact_total_color",
    "exact_list_total_color", "chromatic_index", "total_chromatic_number",
    "solve_list_coloring", "has_edge_coloring", "PartialColoring",
]
