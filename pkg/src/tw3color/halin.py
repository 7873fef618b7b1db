"""Halin graphs: a plane tree without degree-2 vertices plus a cycle through its leaves.

Structures are always carried as the plane tree; the leaf cycle and the graph
are derived.  The recursions here shrink the tree by one or two vertices per
step and keep it a valid Halin structure, so the sub-instances never need
Halin recognition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .colorings import PartialColoring, make_lists
from .edge_coloring import EngineStats, _Extension, ballon_color, greedy_extend
from .errors import InputError, IntegrityError, ListTooShort, ResourceExceeded
from .graph import Edge, Graph, edge
from .oracle import SearchBudget, exact_list_edge_color, verify_edge_coloring


@dataclass(frozen=True)
class HalinStructure:
    """Plane tree given by ``root`` and ordered ``children`` of internal vertices."""

    root: int
    children: Mapping[int, tuple[int, ...]]

    def __post_init__(self) -> None:
        kids = {v: tuple(c) for v, c in self.children.items() if c}
        object.__setattr__(self, "children", kids)
        seen = {self.root}
        stack = [self.root]
        while stack:
            v = stack.pop()
            for c in kids.get(v, ()):
                if c in seen:
                    raise InputError(f"vertex {c} appears twice in the tree")
                seen.add(c)
                stack.append(c)
        if set(kids) - seen:
            raise InputError("children listed for vertices not in the tree")
        for v, c in kids.items():
            need = 3 if v == self.root else 2
            if len(c) < need:
                raise InputError(f"tree vertex {v} has degree {len(c) + (v != self.root)} "
                                 "(Halin trees have no vertex of degree 2 or less)")
        if self.root not in kids:
            raise InputError("tree needs at least one internal vertex")

    @classmethod
    def from_parent_pairs(cls, pairs: Iterable[tuple[int, int]]) -> HalinStructure:
        """Build from ``(parent, child)`` pairs listed in plane order."""
        children: dict[int, list[int]] = {}
        child_set: set[int] = set()
        for p, c in pairs:
            children.setdefault(p, []).append(c)
            child_set.add(c)
        roots = sorted(set(children) - child_set)
        if len(roots) != 1:
            raise InputError(f"expected one root, found {roots}")
        return cls(roots[0], {p: tuple(cs) for p, cs in children.items()})

    @cached_property
    def parent(self) -> dict[int, int]:
        return {c: p for p, cs in self.children.items() for c in cs}

    @cached_property
    def vertices(self) -> list[int]:
        return sorted({self.root} | set(self.parent))

    @cached_property
    def leaf_cycle(self) -> list[int]:
        """Leaves in left-to-right order of the plane tree."""
        out: list[int] = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            kids = self.children.get(v)
            if kids is None:
                out.append(v)
            else:
                stack.extend(reversed(kids))
        return out

    def is_leaf(self, v: int) -> bool:
        return v not in self.children

    def tree_edges(self) -> list[Edge]:
        return sorted(edge(p, c) for p, cs in self.children.items() for c in cs)

    def cycle_edges(self) -> list[Edge]:
        cyc = self.leaf_cycle
        return sorted(edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))

    @cached_property
    def graph(self) -> Graph:
        return Graph(self.vertices, self.tree_edges() + self.cycle_edges())

    def heights(self) -> dict[int, int]:
        h = {self.root: 0}
        stack = [self.root]
        while stack:
            v = stack.pop()
            for c in self.children.get(v, ()):
                h[c] = h[v] + 1
                stack.append(c)
        return h

    def cycle_neighbors(self, leaf: int) -> tuple[int, int]:
        cyc = self.leaf_cycle
        i = cyc.index(leaf)
        return cyc[i - 1], cyc[(i + 1) % len(cyc)]

    def deepest_internal(self) -> int:
        """Internal vertex of maximum height; smallest id on ties."""
        h = self.heights()
        top = max(h[v] for v in self.children)
        return min(v for v in self.children if h[v] == top)

    @property
    def is_cubic(self) -> bool:
        return all(len(c) == (3 if v == self.root else 2) for v, c in self.children.items())

    # -- reductions --------------------------------------------------------

    def without_leaf(self, leaf: int) -> HalinStructure:
        p = self.parent[leaf]
        kids = dict(self.children)
        kids[p] = tuple(c for c in kids[p] if c != leaf)
        return HalinStructure(self.root, kids)

    def collapse(self, v: int, drop: int, keep: int) -> HalinStructure:
        """Delete ``v`` and its leaf child ``drop``; ``keep`` takes ``v``'s place."""
        p = self.parent[v]
        kids = {u: cs for u, cs in self.children.items() if u != v}
        kids[p] = tuple(keep if c == v else c for c in kids[p])
        return HalinStructure(self.root, kids)


def generate_halin(seed: int, internal_nodes: int, *, leaves: int | None = None,
                   cubic: bool = False, max_children: int = 4) -> HalinStructure:
    """Random plane tree with ``internal_nodes`` internal vertices, as a Halin structure.

    Internal vertices get the minimum number of children needed to avoid
    degree 2; extra leaves are spread at random until ``leaves`` is reached
    (default: a random count, capped by ``max_children`` per vertex).  With
    ``cubic`` the result is 3-regular.
    """
    if internal_nodes < 1:
        raise InputError("need at least one internal vertex")
    rng = random.Random(seed)
    if cubic:
        return _random_cubic(rng, internal_nodes)
    parent_of = {0: None}
    order = [0]
    for v in range(1, internal_nodes):
        parent_of[v] = rng.choice(order)
        order.append(v)
    inner_kids: dict[int, list[int]] = {v: [] for v in order}
    for v in order[1:]:
        inner_kids[parent_of[v]].append(v)
    need = {v: max(0, (3 if v == 0 else 2) - len(inner_kids[v])) for v in order}
    minimum = sum(need.values())
    if leaves is None:
        room = sum(max(0, max_children - len(inner_kids[v]) - need[v]) for v in order)
        extra = rng.randint(0, room)
    else:
        if leaves < minimum:
            raise InputError(f"{internal_nodes} internal vertices need at least {minimum} leaves")
        extra = leaves - minimum
    leaf_count = {v: need[v] for v in order}
    for _ in range(extra):
        if leaves is None:
            open_ = [v for v in order if len(inner_kids[v]) + leaf_count[v] < max_children]
            v = rng.choice(open_ or order)
        else:
            v = rng.choice(order)
        leaf_count[v] += 1
    next_id = internal_nodes
    kids: dict[int, list[int]] = {}
    for v in order:
        slots = list(inner_kids[v])
        for _ in range(leaf_count[v]):
            slots.append(next_id)
            next_id += 1
        rng.shuffle(slots)
        kids[v] = slots
    return _renumber(HalinStructure(0, {v: tuple(c) for v, c in kids.items()}))


def _random_cubic(rng: random.Random, internal_nodes: int) -> HalinStructure:
    # grow from K_{1,3} by giving a random leaf two children
    kids: dict[int, tuple[int, ...]] = {0: (1, 2, 3)}
    leaves = [1, 2, 3]
    nxt = 4
    for _ in range(internal_nodes - 1):
        leaf = leaves.pop(rng.randrange(len(leaves)))
        kids[leaf] = (nxt, nxt + 1)
        leaves += [nxt, nxt + 1]
        nxt += 2
    return _renumber(HalinStructure(0, kids))


def _renumber(h: HalinStructure) -> HalinStructure:
    """Relabel vertices 0..n-1 in breadth-first plane order."""
    mapping = {h.root: 0}
    queue = [h.root]
    for v in queue:
        for c in h.children.get(v, ()):
            mapping[c] = len(mapping)
            queue.append(c)
    return HalinStructure(0, {mapping[v]: tuple(mapping[c] for c in cs)
                              for v, cs in h.children.items()})


# -- 3-edge-coloring of cubic Halin graphs -------------------------------------

def cubic_halin_3color(h: HalinStructure) -> PartialColoring:
    """Proper edge coloring of a 3-regular Halin graph with colors {1, 2, 3}."""
    if not h.is_cubic:
        raise InputError("Halin graph is not 3-regular")
    out = _cubic(h)
    if verify_edge_coloring(h.graph, out) is not None or set(out.values()) - {1, 2, 3}:
        raise IntegrityError("cubic recursion produced an invalid coloring")
    return out


_THREE = frozenset({1, 2, 3})


def _cubic(h: HalinStructure) -> PartialColoring:
    g = h.graph
    if len(h.leaf_cycle) == 3:
        result = exact_list_edge_color(g, {e: _THREE for e in g.edges})
        return result.coloring
    v = h.deepest_internal()
    v1, v2 = h.children[v]
    # dropping v and v1 and hanging v2 on v's parent keeps the graph cubic and Halin
    smaller = h.collapse(v, v1, v2)
    c1 = _cubic(smaller)
    removed = {v, v1, v2}
    base = {e: c for e, c in c1.items() if e in g.edges and not (set(e) & removed)}
    scope = sorted(e for e in g.edges if set(e) & removed)
    rl = {e: _THREE - {base[f] for f in g.adjacent_edges(e) if f in base} for e in scope}
    result = exact_list_edge_color(g, rl, edges=scope)
    if not result.satisfiable:
        raise IntegrityError(f"cubic extension at {v} failed")
    base.update(result.coloring)
    return base


# -- compatible colors -----------------------------------------------------------

@dataclass(frozen=True)
class CompatiblePair:
    color_a: int
    color_b: int


def connecting_edges(g: Graph, e: Edge, f: Edge) -> list[Edge]:
    """Edges adjacent to both ``e`` and ``f``."""
    return sorted(edge(x, y) for x in e for y in f if g.has_edge(x, y))


def compatibility_guard(g: Graph, lists: Mapping[Edge, frozenset], e: Edge, f: Edge) -> tuple[int, int]:
    """Both sides of the counting inequality: ``|L(e)||L(f)|`` and the connecting-edge sum."""
    total = 0
    for x in connecting_edges(g, e, f):
        k = len(lists[x])
        total += (k // 2) * ((k + 1) // 2)
    return len(lists[e]) * len(lists[f]), total


def is_compatible(g: Graph, lists: Mapping[Edge, frozenset], e: Edge, f: Edge,
                  ca: int, cb: int) -> bool:
    if ca not in lists[e] or cb not in lists[f]:
        return False
    if ca == cb:
        return True
    return all(not (ca in lists[x] and cb in lists[x]) for x in connecting_edges(g, e, f))


def find_compatible_pair(g: Graph, lists: Mapping[Edge, frozenset], e: Edge,
                         f: Edge) -> CompatiblePair | None:
    """Smallest compatible pair ``(c1, c2)`` with ``c1 in L(e)``, ``c2 in L(f)``, or ``None``."""
    e, f = edge(*e), edge(*f)
    if set(e) & set(f):
        raise InputError(f"edges {e} and {f} are adjacent")
    shared = lists[e] & lists[f]
    if shared:
        c = min(shared)
        return CompatiblePair(c, c)
    for ca in sorted(lists[e]):
        for cb in sorted(lists[f]):
            if is_compatible(g, lists, e, f, ca, cb):
                return CompatiblePair(ca, cb)
    return None


# -- list coloring with max(deg, deg, 4) colors ---------------------------------------

def halin_bound(g: Graph, e: Edge) -> int:
    return max(g.degree(e[0]), g.degree(e[1]), 4)


def _halin_vertex_bound(g: Graph, x: int) -> int:
    return max(g.degree(x), 4)


def color_halin(h: HalinStructure, lists: Mapping[Edge, Iterable[int]], *,
                stats: EngineStats | None = None) -> PartialColoring:
    """L-edge-coloring of a Halin graph with lists of size max(deg u, deg v, 4)."""
    g = h.graph
    lists = make_lists(g, lists)
    for e in g.edge_list():
        if len(lists[e]) < halin_bound(g, e):
            raise ListTooShort(e, len(lists[e]), halin_bound(g, e))
    stats = stats if stats is not None else EngineStats()
    out = _halin(h, lists, stats)
    bad = verify_edge_coloring(g, out, lists)
    if bad is not None:
        raise IntegrityError(f"Halin engine produced an invalid coloring: {bad}")
    return out


def _fresh_list(g: Graph, e: Edge) -> frozenset:
    return frozenset(range(1, halin_bound(g, e) + 1))


def _halin(h: HalinStructure, lists: Mapping[Edge, frozenset], stats: EngineStats) -> PartialColoring:
    g = h.graph
    if len(h.leaf_cycle) == 3:
        stats.branches["halin_k4"] += 1
        result = exact_list_edge_color(g, lists)
        if not result.satisfiable:
            raise IntegrityError("K4 with lists of size 4 has no coloring")
        return result.coloring
    v = h.deepest_internal()
    if g.degree(v) >= 4:
        return _fan(h, lists, stats, v)
    return _cubic_vertex(h, lists, stats, v)


def _fan(h: HalinStructure, lists: Mapping[Edge, frozenset], stats: EngineStats,
         v: int) -> PartialColoring:
    stats.branches["halin_fan"] += 1
    g = h.graph
    w1, w2, w3 = h.children[v][:3]
    w0 = h.cycle_neighbors(w1)[0]
    if g.adj[w2] != {v, w1, w3} or g.adj[w1] != {v, w0, w2}:
        raise IntegrityError(f"fan at {v} does not have the expected shape")
    smaller = h.without_leaf(w1)
    g1 = smaller.graph
    new = edge(w0, w2)
    sub_lists = {e: lists[e] for e in g1.edges if e != new}
    sub_lists[new] = _fresh_list(g1, new)
    for e in g1.edges:
        if len(sub_lists[e]) < halin_bound(g1, e):
            raise IntegrityError(f"degree increased at {e} in the reduced graph")
    c1 = _halin(smaller, sub_lists, stats)
    removed = {w1, w2, w3}
    base = {e: c for e, c in c1.items() if e in g.edges and not (set(e) & removed)}
    ext = _Extension(g, lists, base, removed, halin_bound, stats, "halin_fan",
                     _halin_vertex_bound)
    e_a, e_b = edge(v, w1), edge(w2, w3)

    def step() -> PartialColoring:
        pair = find_compatible_pair(g, ext.rl, e_a, e_b)
        if pair is None:
            raise IntegrityError("no compatible pair although the counting bound holds")
        out = dict(base)
        out[e_a], out[e_b] = pair.color_a, pair.color_b
        rest = [e for e in ext.scope if e not in out]
        return greedy_extend(g, ext.rest(out, rest), out)

    return ext.run(step)


def _cubic_vertex(h: HalinStructure, lists: Mapping[Edge, frozenset], stats: EngineStats,
                  v: int) -> PartialColoring:
    stats.branches["halin_cubic_vertex"] += 1
    g = h.graph
    v1, v2 = h.children[v]
    w = h.parent[v]
    v0 = h.cycle_neighbors(v1)[0]
    smaller = h.collapse(v, v1, v2)
    g2 = smaller.graph
    fresh = {edge(v0, v2), edge(v2, w)}
    sub_lists = {e: lists[e] for e in g2.edges if e not in fresh}
    for e in fresh:
        sub_lists[e] = _fresh_list(g2, e)
    c2 = _halin(smaller, sub_lists, stats)
    removed = {v, v1, v2}
    base = {e: c for e, c in c2.items() if e in g.edges and not (set(e) & removed)}
    ext = _Extension(g, lists, base, removed, halin_bound, stats, "halin_cubic_vertex",
                     _halin_vertex_bound)

    def step() -> PartialColoring:
        out = greedy_extend(g, {edge(v, w): ext.rl[edge(v, w)]}, base)
        e01 = edge(v0, v1)
        out = greedy_extend(g, ext.rest(out, [e01]), out)
        v3 = h.cycle_neighbors(v2)[1]
        cycle = [edge(v2, v1), edge(v1, v), edge(v, v2)]
        f = edge(v2, v3)
        out.update(ballon_color(cycle, f, ext.rest(out, cycle + [f])))
        return out

    return ext.run(step)


def halin_delta_choose(h: HalinStructure, lists: Mapping[Edge, Iterable[int]], *,
                       budget: SearchBudget | None = None,
                       stats: EngineStats | None = None) -> PartialColoring:
    """L-edge-coloring of a Halin graph from lists of size Delta.

    For Delta >= 4 this is :func:`color_halin`; cubic graphs go through exact
    search, whose success is guaranteed because cubic Halin graphs are
    3-edge-colorable and hence 3-edge-choosable.
    """
    g = h.graph
    lists = make_lists(g, lists)
    delta = g.max_degree
    for e in g.edge_list():
        if len(lists[e]) < delta:
            raise ListTooShort(e, len(lists[e]), delta)
    if delta >= 4:
        return color_halin(h, lists, stats=stats)
    if stats is not None:
        stats.branches["halin_exact"] += 1
    result = exact_list_edge_color(g, lists, budget)
    if result.exhausted:
        raise ResourceExceeded(f"exact search exhausted after {result.nodes} nodes")
    if not result.satisfiable:
        raise IntegrityError("cubic Halin graph not colorable from size-3 lists")
    return result.coloring
