"""List edge-coloring of graphs of tree-width at most 3.

:func:`color_tw3_edges` colors any tree-width-3 graph whose edge lists have
``max(deg u, deg v) + 1`` colors.  It runs the minimal-counterexample
argument forwards: peel a small piece ``W`` off the graph, color ``G - W``
recursively, then extend over ``G<W>`` from the remaining lists using greedy
steps, Galvin's theorem and the balloon lemma.

Every local extension that gets stuck falls back to an exact search over
the (at most seven) uncolored edges and records the event in
:class:`EngineStats`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .colorings import ListAssignment, PartialColoring, make_lists
from .decomposition import (
    TreeDecomposition,
    decompose_tw3,
    leaf_neighbors,
    make_smooth,
    pivot_node,
    smoothness_report,
    unique_bag_vertex,
    verify_td,
)
from .errors import InputError, IntegrityError, ListTooShort, Stuck
from .galvin import galvin_color
from .graph import Edge, Graph, edge
from .oracle import exact_list_edge_color, verify_edge_coloring

RemainingLists = dict[Edge, frozenset]


@dataclass
class EngineStats:
    """Audit counters filled in by the engines.

    ``branches`` counts which case of the case analysis handled each step;
    ``fallbacks`` counts local exact searches triggered by a stuck proof step.
    With ``check_decompositions`` set, every smoothed decomposition is
    re-verified and counted in ``decompositions_checked``.
    """

    branches: Counter = field(default_factory=Counter)
    fallbacks: int = 0
    fallback_sites: Counter = field(default_factory=Counter)
    smoothings: int = 0
    check_decompositions: bool = False
    decompositions_checked: int = 0

    def merge(self, other: EngineStats) -> None:
        self.branches.update(other.branches)
        self.fallbacks += other.fallbacks
        self.fallback_sites.update(other.fallback_sites)
        self.smoothings += other.smoothings
        self.decompositions_checked += other.decompositions_checked


# -- remaining lists and greedy extension -----------------------------------

def remaining_edge_lists(g: Graph, lists: Mapping[Edge, frozenset], coloring: Mapping[Edge, int],
                         scope: Iterable[Edge]) -> RemainingLists:
    """Colors of ``L(e)`` not used on any colored edge adjacent to ``e``."""
    out: RemainingLists = {}
    for e in scope:
        e = edge(*e)
        if e in coloring:
            raise InputError(f"edge {e} in scope is already colored")
        used = {coloring[f] for f in g.adjacent_edges(e) if f in coloring}
        out[e] = frozenset(lists[e]) - used
    return out


def greedy_extend(g: Graph, rl: Mapping[Edge, frozenset], coloring: Mapping[Edge, int],
                  order: Sequence[Edge] | None = None) -> PartialColoring:
    """Extend ``coloring`` over the keys of ``rl``.

    Without ``order`` the uncolored edge with the fewest available colors goes
    next (ties: smallest edge); the smallest available color is used.  Raises
    :class:`Stuck` with the first edge that runs out of colors.
    """
    avail = {e: set(cs) for e, cs in rl.items()}
    out = dict(coloring)
    pending = set(avail)
    seq = list(order) if order is not None else None
    if seq is not None and set(seq) != pending:
        raise InputError("order must list exactly the edges to be colored")
    while pending:
        if seq is not None:
            e = seq.pop(0)
        else:
            e = min(pending, key=lambda f: (len(avail[f]), f))
        if not avail[e]:
            raise Stuck(e)
        c = min(avail[e])
        out[e] = c
        pending.discard(e)
        for f in g.adjacent_edges(e):
            if f in pending:
                avail[f].discard(c)
    return out


def truncate(rl: Mapping[Edge, frozenset], sizes: Mapping[Edge, int]) -> RemainingLists:
    """Keep the ``sizes[e]`` smallest colors of each list."""
    out: RemainingLists = {}
    for e, cs in rl.items():
        k = sizes[e]
        if len(cs) < k:
            raise IntegrityError(f"remaining list of {e} has {len(cs)} colors, bound is {k}")
        out[e] = frozenset(sorted(cs)[:k])
    return out


# -- balloon lemma ------------------------------------------------------------

def _check_cycle(cycle: Sequence[Edge], pendant: Edge) -> int:
    """Validate the cycle-plus-pendant shape; returns the hub vertex."""
    n = len(cycle)
    if n < 3 or len(set(cycle)) != n:
        raise InputError("cycle needs at least three distinct edges")
    for i in range(n):
        a, b = cycle[i], cycle[(i + 1) % n]
        if len(set(a) & set(b)) != 1:
            raise InputError(f"cycle edges {a} and {b} are not consecutive")
    verts = set()
    for e in cycle:
        verts.update(e)
    if len(verts) != n:
        raise InputError("edges do not form a simple cycle")
    (hub,) = set(cycle[0]) & set(cycle[-1])
    if hub not in pendant:
        raise InputError("pendant edge must meet the vertex shared by e1 and en")
    tip = pendant[0] if pendant[1] == hub else pendant[1]
    if tip in verts:
        raise InputError("pendant edge must leave the cycle")
    return hub


def ballon_color(cycle: Sequence[Edge], pendant: Edge,
                 rl: Mapping[Edge, frozenset]) -> PartialColoring:
    """Color a cycle ``e1..en`` plus an edge ``f`` at the vertex of ``e1`` and ``en``.

    Needs ``|rl(e1)| >= 3`` and at least two colors on every other edge.
    """
    cycle = [edge(*e) for e in cycle]
    pendant = edge(*pendant)
    _check_cycle(cycle, pendant)
    n = len(cycle)
    sizes = {e: 2 for e in cycle}
    sizes[cycle[0]] = 3
    sizes[pendant] = 2
    for e, k in sizes.items():
        if len(rl[e]) < k:
            raise InputError(f"list of {e} has {len(rl[e])} colors, needs {k}")
    lists = truncate({e: rl[e] for e in sizes}, sizes)
    shape = Graph({v for e in sizes for v in e}, sizes)
    first, last = cycle[0], cycle[-1]
    spare = sorted(lists[last] - lists[pendant])
    if spare:
        # color en outside L(f); the rest is a path colored from the far end
        start = {last: spare[0]}
        order = [cycle[i] for i in range(n - 2, -1, -1)] + [pendant]
    else:
        # now L(en) = L(f) and e1 has a color outside both
        start = {first: min(lists[first] - lists[pendant] - lists[last])}
        order = cycle[1:] + [pendant]
    rest = remaining_edge_lists(shape, lists, start, order)
    try:
        return greedy_extend(shape, rest, start, order)
    except Stuck as exc:
        raise IntegrityError(f"balloon finish got stuck at {exc.element}") from exc


# -- the tree-width-3 recursion ---------------------------------------------------

def _edge_bound(g: Graph, e: Edge) -> int:
    return max(g.degree(e[0]), g.degree(e[1])) + 1


def check_lists(g: Graph, lists: Mapping[Edge, frozenset], bound: Callable[[Graph, Edge], int]) -> None:
    for e in g.edge_list():
        need = bound(g, e)
        if len(lists[e]) < need:
            raise ListTooShort(e, len(lists[e]), need)


def _vertex_bound(g: Graph, x: int) -> int:
    return g.degree(x) + 1


def local_sizes(g: Graph, w: Iterable[int], bound: Callable[[Graph, Edge], int],
                vertex_bound: Callable[[Graph, int], int] = _vertex_bound) -> dict[Edge, int]:
    """Guaranteed remaining-list sizes on G<W> after coloring G - W.

    An edge inside ``W`` keeps its full bound.  A cross edge ``xw`` keeps
    ``vertex_bound(x) - deg_{G-W}(x)`` colors, where ``vertex_bound(x)`` is a
    lower bound on the list size of every edge at ``x``; for the
    ``max(deg)+1`` lists this is ``deg_{G<W>}(x) + 1``.
    """
    w = set(w)
    sizes: dict[Edge, int] = {}
    for v in sorted(w):
        for e in g.incident(v):
            if e in sizes:
                continue
            outside = [x for x in e if x not in w]
            if outside:
                x = outside[0]
                sizes[e] = vertex_bound(g, x) - sum(1 for y in g.adj[x] if y not in w)
            else:
                sizes[e] = bound(g, e)
    return sizes


class _Extension:
    """One local extension step over G<W>, with exact fallback on failure."""

    def __init__(self, g: Graph, lists: Mapping[Edge, frozenset], base: PartialColoring,
                 w: Iterable[int], bound: Callable[[Graph, Edge], int], stats: EngineStats,
                 site: str, vertex_bound: Callable[[Graph, int], int] = _vertex_bound) -> None:
        self.g = g
        self.lists = lists
        self.base = base
        self.w = set(w)
        self.site = site
        self.stats = stats
        self.sizes = local_sizes(g, self.w, bound, vertex_bound)
        self.scope = sorted(self.sizes)
        full = remaining_edge_lists(g, lists, base, self.scope)
        for e in self.scope:
            if len(full[e]) < self.sizes[e]:
                raise IntegrityError(
                    f"remaining list of {e} has {len(full[e])} colors, bound says {self.sizes[e]}")
        self.full = full
        self.rl = truncate(full, self.sizes)

    def run(self, step: Callable[[], PartialColoring]) -> PartialColoring:
        try:
            out = step()
            if verify_edge_coloring(self.g, out, self.lists, complete=False) is None and \
                    all(e in out for e in self.scope):
                return out
        except (Stuck, InputError, IntegrityError):
            pass
        self.stats.fallbacks += 1
        self.stats.fallback_sites[self.site] += 1
        result = exact_list_edge_color(self.g, self.full, edges=self.scope)
        if not result.satisfiable:
            raise IntegrityError(f"no extension over G<{sorted(self.w)}> exists ({result.status})")
        out = dict(self.base)
        out.update(result.coloring)
        return out

    def available(self, coloring: Mapping[Edge, int], e: Edge) -> frozenset:
        used = {coloring[f] for f in self.g.adjacent_edges(e) if f in coloring}
        return self.rl[e] - used

    def rest(self, coloring: Mapping[Edge, int], edges: Iterable[Edge]) -> RemainingLists:
        return {e: self.available(coloring, e) for e in edges}


def color_tw3_edges(g: Graph, lists: Mapping[Edge, Iterable[int]], *,
                    td: TreeDecomposition | None = None,
                    stats: EngineStats | None = None) -> PartialColoring:
    """L-edge-coloring of a tree-width <= 3 graph with lists of size max(deg)+1.

    Raises :class:`~tw3color.errors.TooWide` for wider graphs and
    :class:`~tw3color.errors.ListTooShort` naming the first short list.
    """
    lists = make_lists(g, lists)
    check_lists(g, lists, _edge_bound)
    if td is None:
        td = decompose_tw3(g)
    elif not verify_td(g, td, 3):
        raise InputError("supplied decomposition is not a width-3 decomposition of the graph")
    stats = stats if stats is not None else EngineStats()
    coloring = _color(g, lists, td, stats)
    bad = verify_edge_coloring(g, coloring, lists)
    if bad is not None:
        raise IntegrityError(f"engine produced an invalid coloring: {bad}")
    return coloring


def _pick_low_degree(g: Graph, limit: int) -> int | None:
    return next((v for v in g.vertices if g.degree(v) <= limit), None)


def smooth_for(g: Graph, td: TreeDecomposition, stats: EngineStats) -> TreeDecomposition:
    smooth = make_smooth(td, g, 3)
    stats.smoothings += 1
    if stats.check_decompositions:
        if not (verify_td(g, smooth, 3) and smoothness_report(smooth, 3).smooth
                and len(smooth.bags) == len(g.vertices) - 3):
            raise IntegrityError("smoothing produced an invalid decomposition")
        stats.decompositions_checked += 1
    return smooth


@dataclass(frozen=True)
class PeelPlan:
    """Which case of the case analysis applies, and to which vertices."""

    kind: str  # "two_leaf" | "one_leaf"
    first: int  # v1 or w0
    second: int  # v2 or w1
    bag: frozenset = frozenset()  # pivot bag (one_leaf only)


def plan_peel(g: Graph, td: TreeDecomposition, stats: EngineStats) -> PeelPlan:
    """Locate the peel for a graph of minimum degree >= 3 and at least 5 vertices."""
    smooth = smooth_for(g, td, stats)
    if len(smooth.bags) == 2:
        a, b = smooth.nodes
        return PeelPlan("two_leaf", unique_bag_vertex(smooth, a), unique_bag_vertex(smooth, b))
    t = pivot_node(smooth)
    leaves = leaf_neighbors(smooth, t)
    if len(leaves) >= 2:
        return PeelPlan("two_leaf", unique_bag_vertex(smooth, leaves[0]),
                        unique_bag_vertex(smooth, leaves[1]))
    if len(leaves) != 1:
        raise IntegrityError(f"pivot {t} has no leaf neighbour")
    t0 = leaves[0]
    w0 = unique_bag_vertex(smooth, t0)
    elsewhere: set[int] = set()
    for s, bag in smooth.bags.items():
        if s not in (t, t0):
            elsewhere |= bag
    shared = smooth.bags[t] & smooth.bags[t0]
    private = sorted(shared - elsewhere)
    if private:
        return PeelPlan("one_leaf", w0, private[0], smooth.bags[t])
    # the pivot's private vertex lies outside t0: it and w0 are twins of degree 3
    (x,) = sorted(smooth.bags[t] - elsewhere - smooth.bags[t0])
    return PeelPlan("two_leaf", w0, x)


def _color(g: Graph, lists: ListAssignment, td: TreeDecomposition,
           stats: EngineStats) -> PartialColoring:
    if not g.edges:
        return {}
    v = _pick_low_degree(g, 2)
    if v is not None:
        stats.branches["low_degree"] += 1
        sub = g.remove_vertices([v])
        base = _color(sub, lists, td.restrict([v]), stats) if sub.edges else {}
        ext = _Extension(g, lists, base, [v], _edge_bound, stats, "low_degree")
        return ext.run(lambda: greedy_extend(g, ext.rl, base))
    if len(g.vertices) <= 4:
        stats.branches["k4"] += 1
        result = exact_list_edge_color(g, lists)
        if not result.satisfiable:
            raise IntegrityError("small instance has no coloring")
        return result.coloring
    plan = plan_peel(g, td, stats)
    if plan.kind == "two_leaf":
        return _two_leaf(g, lists, td, stats, plan.first, plan.second)
    return _one_leaf(g, lists, td, stats, plan)


def _two_leaf(g: Graph, lists: ListAssignment, td: TreeDecomposition, stats: EngineStats,
              v1: int, v2: int) -> PartialColoring:
    n1, n2 = g.adj[v1], g.adj[v2]
    if g.degree(v1) != 3 or g.degree(v2) != 3 or g.has_edge(v1, v2) or len(n1 | n2) > 4:
        raise IntegrityError(f"twin leaf vertices {v1}, {v2} do not have the expected shape")
    sub = g.remove_vertices([v1, v2])
    base = _color(sub, lists, td.restrict([v1, v2]), stats)
    ext = _Extension(g, lists, base, [v1, v2], _edge_bound, stats, "two_leaf")
    if n1 == n2:
        stats.branches["two_leaf_same"] += 1

        def step() -> PartialColoring:
            local = g.local_subgraph([v1, v2])
            out = dict(base)
            out.update(galvin_color(local, ext.rl))
            return out
    else:
        stats.branches["two_leaf_distinct"] += 1

        def step() -> PartialColoring:
            common = n1 & n2
            outer = [edge(v1, x) for x in n1 - common] + [edge(v2, x) for x in n2 - common]
            out = greedy_extend(g, {e: ext.rl[e] for e in outer}, base)
            square = [edge(vi, x) for vi in (v1, v2) for x in common]
            c4 = Graph({v1, v2} | common, square)
            out.update(galvin_color(c4, ext.rest(out, square)))
            return out
    return ext.run(step)


def _one_leaf(g: Graph, lists: ListAssignment, td: TreeDecomposition, stats: EngineStats,
              plan: PeelPlan) -> PartialColoring:
    w0, w1 = plan.first, plan.second
    n0 = g.adj[w0]
    if g.degree(w0) != 3 or w1 not in n0 or g.degree(w1) > 4:
        raise IntegrityError(f"leaf vertices {w0}, {w1} do not have the expected shape")
    (w4,) = plan.bag - n0 - {w0}
    a, b = sorted(n0 - {w1})
    sub = g.remove_vertices([w0, w1])
    base = _color(sub, lists, td.restrict([w0, w1]), stats)
    ext = _Extension(g, lists, base, [w0, w1], _edge_bound, stats, "one_leaf")
    n1 = g.adj[w1]
    if len(n1) == 4:
        stats.branches["one_leaf_deg4"] += 1
        w2, w3 = a, b

        def step() -> PartialColoring:
            e12, e14 = edge(w1, w2), edge(w1, w4)
            c = min(ext.rl[e12] - ext.rl[e14])
            out = dict(base)
            out[e12] = c
            e20 = edge(w2, w0)
            out = greedy_extend(g, ext.rest(out, [e20]), out)
            cycle = [edge(w1, w0), edge(w0, w3), edge(w3, w1)]
            out.update(ballon_color(cycle, e14, ext.rest(out, cycle + [e14])))
            return out
    elif w4 in n1:
        stats.branches["one_leaf_deg3_pendant"] += 1
        w2 = a if a in n1 else b
        w3 = b if w2 == a else a

        def step() -> PartialColoring:
            e14 = edge(w1, w4)
            out = dict(base)
            out[e14] = min(ext.rl[e14])
            cycle = [edge(w0, w1), edge(w1, w2), edge(w2, w0)]
            f = edge(w0, w3)
            out.update(ballon_color(cycle, f, ext.rest(out, cycle + [f])))
            return out
    else:
        stats.branches["one_leaf_deg3_square"] += 1

        def step() -> PartialColoring:
            e01 = edge(w0, w1)
            out = dict(base)
            out[e01] = min(ext.rl[e01])
            square = [edge(w0, a), edge(a, w1), edge(w1, b), edge(b, w0)]
            c4 = Graph({w0, w1, a, b}, square)
            out.update(galvin_color(c4, ext.rest(out, square)))
            return out
    return ext.run(step)
