"""List total coloring of graphs of tree-width at most 3.

:func:`total_color_tw3` handles lists of size ``max(5, Delta) + 2`` by the
same peeling as the edge engine.  :func:`total_color_delta_plus_2` colors
with ``{1..Delta+2}``: through that engine when ``Delta >= 5`` (the two bounds
then coincide) and through exact search for smaller maximum degree.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .colorings import TotalColoring, TotalListAssignment
from .decomposition import TreeDecomposition, decompose_tw3, verify_td
from .edge_coloring import EngineStats, local_sizes, plan_peel, truncate
from .errors import InputError, IntegrityError, ListTooShort, ResourceExceeded, Stuck
from .galvin import galvin_color
from .graph import Edge, Graph, edge
from .oracle import SearchBudget, exact_list_total_color, verify_total_coloring

Element = tuple  # ("e", edge) or ("v", vertex)


def total_bound(g: Graph) -> int:
    """Required list size ``max(5, Delta) + 2``."""
    return max(5, g.max_degree) + 2


def remaining_total_lists(g: Graph, lists: TotalListAssignment, coloring: TotalColoring,
                          edges: Iterable[Edge] = (), vertices: Iterable[int] = ()
                          ) -> tuple[dict[Edge, frozenset], dict[int, frozenset]]:
    """Available colors of the scoped, still uncolored edges and vertices."""
    er: dict[Edge, frozenset] = {}
    vr: dict[int, frozenset] = {}
    for e in edges:
        e = edge(*e)
        if e in coloring.edges:
            raise InputError(f"edge {e} in scope is already colored")
        used = {coloring.edges[f] for f in g.adjacent_edges(e) if f in coloring.edges}
        used |= {coloring.vertices[x] for x in e if x in coloring.vertices}
        er[e] = lists.edges[e] - used
    for v in vertices:
        if v in coloring.vertices:
            raise InputError(f"vertex {v} in scope is already colored")
        used = {coloring.vertices[u] for u in g.adj[v] if u in coloring.vertices}
        used |= {coloring.edges[f] for f in g.incident(v) if f in coloring.edges}
        vr[v] = lists.vertices[v] - used
    return er, vr


def greedy_total_extend(g: Graph, er: Mapping[Edge, frozenset], vr: Mapping[int, frozenset],
                        coloring: TotalColoring) -> TotalColoring:
    """Edges first, then vertices; each by fewest available colors, ties by id."""
    out = coloring.copy()
    e_avail = {e: set(cs) for e, cs in er.items()}
    v_avail = {v: set(cs) for v, cs in vr.items()}
    while e_avail:
        e = min(e_avail, key=lambda f: (len(e_avail[f]), f))
        if not e_avail[e]:
            raise Stuck(e)
        c = min(e_avail.pop(e))
        out.edges[e] = c
        for f in g.adjacent_edges(e):
            if f in e_avail:
                e_avail[f].discard(c)
        for x in e:
            if x in v_avail:
                v_avail[x].discard(c)
    while v_avail:
        v = min(v_avail, key=lambda u: (len(v_avail[u]), u))
        if not v_avail[v]:
            raise Stuck(v)
        c = min(v_avail.pop(v))
        out.vertices[v] = c
        for u in g.adj[v]:
            if u in v_avail:
                v_avail[u].discard(c)
    return out


class _TotalExtension:
    """Extend a total coloring of ``G - W`` (or of ``G - e``) over what is missing."""

    def __init__(self, g: Graph, lists: TotalListAssignment, base: TotalColoring,
                 edges: Iterable[Edge], vertices: Iterable[int], bound: int,
                 sizes: Mapping[Edge, int] | None, stats: EngineStats, site: str) -> None:
        self.g, self.lists, self.base = g, lists, base
        self.stats, self.site = stats, site
        self.edges = sorted(edges)
        self.vertices = sorted(vertices)
        er, vr = remaining_total_lists(g, lists, base, self.edges, self.vertices)
        self.full_edges, self.full_vertices = er, vr
        if sizes is not None:
            self.er = truncate(er, sizes)
            vsizes = {v: bound - sum(1 for u in g.adj[v] if u in base.vertices)
                      for v in self.vertices}
            self.vr = {v: frozenset(sorted(vr[v])[:vsizes[v]]) for v in self.vertices}
            for v in self.vertices:
                if len(vr[v]) < vsizes[v]:
                    raise IntegrityError(f"vertex {v} keeps {len(vr[v])} colors, bound {vsizes[v]}")
        else:
            self.er, self.vr = dict(er), dict(vr)

    def available(self, coloring: TotalColoring, e: Edge) -> frozenset:
        used = {coloring.edges[f] for f in self.g.adjacent_edges(e) if f in coloring.edges}
        used |= {coloring.vertices[x] for x in e if x in coloring.vertices}
        return self.er[e] - used

    def vertex_available(self, coloring: TotalColoring, v: int) -> frozenset:
        used = {coloring.vertices[u] for u in self.g.adj[v] if u in coloring.vertices}
        used |= {coloring.edges[f] for f in self.g.incident(v) if f in coloring.edges}
        return self.vr[v] - used

    def run(self, step: Callable[[], TotalColoring]) -> TotalColoring:
        try:
            out = step()
            done = all(e in out.edges for e in self.edges) and \
                all(v in out.vertices for v in self.vertices)
            if done and verify_total_coloring(self.g, out, self.lists, complete=False) is None:
                return out
        except (Stuck, InputError, IntegrityError):
            pass
        self.stats.fallbacks += 1
        self.stats.fallback_sites[self.site] += 1
        merged = TotalListAssignment(dict(self.full_edges), dict(self.full_vertices))
        result = exact_list_total_color(self.g, merged, edges=self.edges, vertices=self.vertices)
        if not result.satisfiable:
            raise IntegrityError(f"no total extension at {self.site} ({result.status})")
        out = self.base.copy()
        out.edges.update(result.coloring.edges)
        out.vertices.update(result.coloring.vertices)
        return out


def total_color_tw3(g: Graph, lists: TotalListAssignment, *,
                    td: TreeDecomposition | None = None,
                    stats: EngineStats | None = None) -> TotalColoring:
    """L-total-coloring of a tree-width <= 3 graph with lists of size max(5, Delta)+2."""
    lists = lists.validate(g)
    need = total_bound(g)
    for e in g.edge_list():
        if len(lists.edges[e]) < need:
            raise ListTooShort(e, len(lists.edges[e]), need)
    for v in g.vertices:
        if len(lists.vertices[v]) < need:
            raise ListTooShort(v, len(lists.vertices[v]), need)
    if td is None:
        td = decompose_tw3(g)
    elif not verify_td(g, td, 3):
        raise InputError("supplied decomposition is not a width-3 decomposition of the graph")
    stats = stats if stats is not None else EngineStats()
    out = _total(g, lists, td, need, stats)
    bad = verify_total_coloring(g, out, lists)
    if bad is not None:
        raise IntegrityError(f"engine produced an invalid total coloring: {bad}")
    return out


def _sizes(g: Graph, w: Iterable[int], bound: int) -> dict[Edge, int]:
    # a cross edge xw also loses the color of x, which the +2 in the bound pays for
    return local_sizes(g, w, lambda _g, _e: bound, lambda h, x: h.degree(x) + 1)


def _total(g: Graph, lists: TotalListAssignment, td: TreeDecomposition, bound: int,
           stats: EngineStats) -> TotalColoring:
    if not g.vertices:
        return TotalColoring()
    low = next((v for v in g.vertices if g.degree(v) <= 2), None)
    if low is not None:
        stats.branches["total_low_degree"] += 1
        sub = g.remove_vertices([low])
        base = _total(sub, lists, td.restrict([low]), bound, stats)
        ext = _TotalExtension(g, lists, base, g.incident(low), [low], bound,
                              _sizes(g, [low], bound), stats, "total_low_degree")
        return ext.run(lambda: greedy_total_extend(g, ext.er, ext.vr, base))
    if len(g.vertices) <= 4:
        stats.branches["total_k4"] += 1
        result = exact_list_total_color(g, lists)
        if not result.satisfiable:
            raise IntegrityError("small instance has no total coloring")
        return result.coloring
    plan = plan_peel(g, td, stats)
    if plan.kind == "two_leaf":
        return _two_leaf(g, lists, td, bound, stats, plan.first, plan.second)
    return _one_leaf(g, lists, td, bound, stats, plan.first, plan.second)


def _two_leaf(g: Graph, lists: TotalListAssignment, td: TreeDecomposition, bound: int,
              stats: EngineStats, v1: int, v2: int) -> TotalColoring:
    n1, n2 = g.adj[v1], g.adj[v2]
    if g.degree(v1) != 3 or g.degree(v2) != 3 or g.has_edge(v1, v2) or len(n1 | n2) > 4:
        raise IntegrityError(f"twin leaf vertices {v1}, {v2} do not have the expected shape")
    sub = g.remove_vertices([v1, v2])
    base = _total(sub, lists, td.restrict([v1, v2]), bound, stats)
    scope = g.incident(v1) + g.incident(v2)
    ext = _TotalExtension(g, lists, base, scope, [v1, v2], bound,
                          _sizes(g, [v1, v2], bound), stats, "total_two_leaf")
    common = n1 & n2
    site = "total_two_leaf_same" if n1 == n2 else "total_two_leaf_distinct"
    stats.branches[site] += 1

    def step() -> TotalColoring:
        out = base.copy()
        outer = [edge(v1, x) for x in n1 - common] + [edge(v2, x) for x in n2 - common]
        if outer:
            out = greedy_total_extend(g, {e: ext.er[e] for e in outer}, {}, out)
        inner = [edge(vi, x) for vi in (v1, v2) for x in common]
        bip = Graph({v1, v2} | common, inner)
        out.edges.update(galvin_color(bip, {e: ext.available(out, e) for e in inner}))
        return greedy_total_extend(g, {}, {v: ext.vertex_available(out, v) for v in (v1, v2)}, out)

    return ext.run(step)


def _one_leaf(g: Graph, lists: TotalListAssignment, td: TreeDecomposition, bound: int,
              stats: EngineStats, w0: int, w1: int) -> TotalColoring:
    if g.degree(w0) != 3 or not g.has_edge(w0, w1) or g.degree(w1) > 4:
        raise IntegrityError(f"leaf vertices {w0}, {w1} do not have the expected shape")
    stats.branches["total_one_leaf"] += 1
    e01 = edge(w0, w1)
    sub = g.remove_edges([e01])
    base = _total(sub, lists, td, bound, stats)
    # uncolor w0, then color the edge w0w1 and the vertex w0 greedily
    base.vertices.pop(w0)
    ext = _TotalExtension(g, lists, base, [e01], [w0], bound, None, stats, "total_one_leaf")
    return ext.run(lambda: greedy_total_extend(g, ext.er, ext.vr, base))


def total_color_delta_plus_2(g: Graph, *, budget: SearchBudget | None = None,
                             stats: EngineStats | None = None) -> TotalColoring:
    """Total coloring with colors ``{1..Delta+2}`` for tree-width <= 3 graphs.

    Raises :class:`ResourceExceeded` when the exact path (``Delta <= 4``) runs
    out of budget.
    """
    k = g.max_degree + 2
    td = decompose_tw3(g)
    if g.max_degree >= 5:
        return total_color_tw3(g, TotalListAssignment.uniform(g, k), td=td, stats=stats)
    if stats is not None:
        stats.branches["total_exact"] += 1
    result = exact_list_total_color(g, TotalListAssignment.uniform(g, k), budget)
    if result.exhausted:
        raise ResourceExceeded(f"exact total coloring exhausted after {result.nodes} nodes")
    if not result.satisfiable:
        raise IntegrityError(f"no total coloring with {k} colors although Delta <= 4")
    return result.coloring
