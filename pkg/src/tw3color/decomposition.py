"""Tree decompositions of width at most 3.

Decompositions are built by an exact elimination-order search, checked
against the three axioms, normalised into *smooth* form (all bags full,
pairwise distinct, adjacent bags overlapping in exactly ``k`` vertices) and
rooted for the peeling recursions in :mod:`tw3color.edge_coloring` and
:mod:`tw3color.total_coloring`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InputError, IntegrityError, NotApplicable, TooWide
from .graph import Graph


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class TreeDecomposition:
    bags: Mapping[int, frozenset[int]]
    tree_edges: frozenset[tuple[int, int]]
    root: int | None = None
    _tree: dict[int, frozenset[int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        bags = {t: frozenset(b) for t, b in self.bags.items()}
        object.__setattr__(self, "bags", bags)
        tree_edges = frozenset(_pair(a, b) for a, b in self.tree_edges)
        object.__setattr__(self, "tree_edges", tree_edges)
        nbrs: dict[int, set[int]] = {t: set() for t in bags}
        for a, b in tree_edges:
            if a not in nbrs or b not in nbrs:
                raise InputError(f"tree edge {(a, b)} references an unknown node")
            nbrs[a].add(b)
            nbrs[b].add(a)
        object.__setattr__(self, "_tree", {t: frozenset(n) for t, n in nbrs.items()})
        if self.root is not None and self.root not in bags:
            raise InputError(f"root {self.root} is not a node")

    @property
    def nodes(self) -> list[int]:
        return sorted(self.bags)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    def tree_neighbors(self, t: int) -> frozenset[int]:
        return self._tree[t]

    def tree_degree(self, t: int) -> int:
        return len(self._tree[t])

    def is_leaf(self, t: int) -> bool:
        return len(self._tree[t]) == 1

    def heights(self) -> dict[int, int]:
        if self.root is None:
            raise NotApplicable("decomposition is not rooted")
        dist = {self.root: 0}
        queue = deque([self.root])
        while queue:
            t = queue.popleft()
            for s in self._tree[t]:
                if s not in dist:
                    dist[s] = dist[t] + 1
                    queue.append(s)
        return dist

    def rooted(self, root: int | None = None) -> TreeDecomposition:
        """Root at ``root``, or at the smallest node id by default."""
        if root is None:
            root = min(self.bags)
        return TreeDecomposition(self.bags, self.tree_edges, root)

    def restrict(self, removed: Iterable[int]) -> TreeDecomposition:
        """Decomposition of ``G - removed`` obtained by deleting vertices from bags."""
        removed = frozenset(removed)
        return TreeDecomposition({t: b - removed for t, b in self.bags.items()},
                                 self.tree_edges, self.root)


def _is_tree(nodes: Iterable[int], tree_edges: Iterable[tuple[int, int]]) -> bool:
    nodes = list(nodes)
    tree_edges = list(tree_edges)
    if not nodes:
        return not tree_edges
    if len(tree_edges) != len(nodes) - 1:
        return False
    nbrs: dict[int, list[int]] = {t: [] for t in nodes}
    for a, b in tree_edges:
        if a not in nbrs or b not in nbrs or a == b:
            return False
        nbrs[a].append(b)
        nbrs[b].append(a)
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        t = stack.pop()
        for s in nbrs[t]:
            if s not in seen:
                seen.add(s)
                stack.append(s)
    return len(seen) == len(nodes)


def verify_td(g: Graph, td: TreeDecomposition, k: int) -> bool:
    """True iff ``td`` is a tree decomposition of ``g`` with bags of size <= k+1."""
    if not _is_tree(td.bags, td.tree_edges):
        return False
    if any(len(b) > k + 1 for b in td.bags.values()):
        return False
    covered: set[int] = set()
    for b in td.bags.values():
        covered |= b
    if covered != set(g.vertices):
        return False
    for u, v in g.edges:
        if not any(u in b and v in b for b in td.bags.values()):
            return False
    # connectivity: nodes holding v span a connected subtree
    for v in g.vertices:
        holding = {t for t, b in td.bags.items() if v in b}
        start = next(iter(holding))
        seen = {start}
        stack = [start]
        while stack:
            t = stack.pop()
            for s in td.tree_neighbors(t):
                if s in holding and s not in seen:
                    seen.add(s)
                    stack.append(s)
        if seen != holding:
            return False
    return True


@dataclass(frozen=True)
class SmoothnessReport:
    all_bags_full: bool
    all_bags_distinct: bool
    adjacent_overlap_k: bool

    @property
    def smooth(self) -> bool:
        return self.all_bags_full and self.all_bags_distinct and self.adjacent_overlap_k


def smoothness_report(td: TreeDecomposition, k: int) -> SmoothnessReport:
    bags = list(td.bags.values())
    return SmoothnessReport(
        all_bags_full=all(len(b) == k + 1 for b in bags),
        all_bags_distinct=len(set(bags)) == len(bags),
        adjacent_overlap_k=all(len(td.bags[a] & td.bags[b]) == k for a, b in td.tree_edges),
    )


# -- construction -----------------------------------------------------------

_MAX_WIDTH = 3


def _almost_simplicial(nbrs: set[int], adj: dict[int, set[int]]) -> bool:
    """Some neighbour can be dropped so that the rest is a clique."""
    ns = list(nbrs)
    missing = [(a, b) for i, a in enumerate(ns) for b in ns[i + 1:] if b not in adj[a]]
    if not missing:
        return True
    common = set(missing[0])
    for pair in missing[1:]:
        common &= set(pair)
    return bool(common)


def _elimination_order(g: Graph) -> list[int] | None:
    """Elimination order of max degree <= 3, or ``None`` if tree-width > 3.

    Vertices of degree <= 3 whose neighbourhood is a clique after dropping one
    neighbour are eliminated without branching: the filled graph is then a
    minor of the current one, so the width-3 question is unchanged.  Only
    degree-3 vertices with independent neighbourhoods cause branching; dead
    graphs are memoised.
    """
    failed: set[frozenset] = set()

    def search(adj: dict[int, set[int]], order: list[int]) -> list[int] | None:
        adj = {v: set(n) for v, n in adj.items()}
        order = list(order)
        while True:
            if len(adj) <= _MAX_WIDTH + 1:
                return order + sorted(adj)
            safe = next((v for v in sorted(adj)
                         if len(adj[v]) <= _MAX_WIDTH and _almost_simplicial(adj[v], adj)), None)
            if safe is None:
                break
            _eliminate(adj, safe)
            order.append(safe)
        key = frozenset(frozenset((v, *n)) for v, n in adj.items())
        if key in failed:
            return None
        for v in sorted(adj):
            if len(adj[v]) == _MAX_WIDTH:
                trial = {u: set(n) for u, n in adj.items()}
                _eliminate(trial, v)
                found = search(trial, order + [v])
                if found is not None:
                    return found
        failed.add(key)
        return None

    return search({v: set(g.adj[v]) for v in g.vertices}, [])


def _eliminate(adj: dict[int, set[int]], v: int) -> None:
    nbrs = adj.pop(v)
    for a in nbrs:
        adj[a].discard(v)
        adj[a] |= nbrs - {a}


def td_from_elimination(g: Graph, order: list[int]) -> TreeDecomposition:
    """Standard bag-per-vertex decomposition induced by an elimination order."""
    pos = {v: i for i, v in enumerate(order)}
    adj = {v: set(g.adj[v]) for v in g.vertices}
    bags: dict[int, frozenset[int]] = {}
    parent: dict[int, int] = {}
    for i, v in enumerate(order):
        later = adj[v]
        bags[i] = frozenset(later | {v})
        if later:
            parent[i] = min(pos[u] for u in later)
        _eliminate(adj, v)
    roots = [i for i in bags if i not in parent]
    tree_edges = {_pair(i, p) for i, p in parent.items()}
    tree_edges |= {_pair(a, b) for a, b in zip(roots, roots[1:])}
    return TreeDecomposition(bags, frozenset(tree_edges))


def decompose_tw3(g: Graph) -> TreeDecomposition:
    """A tree decomposition of width <= 3; raises :class:`TooWide` otherwise."""
    if not g.vertices:
        return TreeDecomposition({0: frozenset()}, frozenset())
    order = _elimination_order(g)
    if order is None:
        raise TooWide()
    return _contract_containments(td_from_elimination(g, order))


# -- smoothing ------------------------------------------------------------------

def _contract_containments(td: TreeDecomposition) -> TreeDecomposition:
    """Merge every tree edge whose one bag contains the other."""
    bags = dict(td.bags)
    nbrs = {t: set(td.tree_neighbors(t)) for t in bags}
    changed = True
    while changed:
        changed = False
        for a in sorted(bags):
            for b in sorted(nbrs[a]):
                if bags[a] <= bags[b]:
                    _merge_into(bags, nbrs, a, b)
                    changed = True
                    break
            if changed:
                break
    edges = frozenset(_pair(a, b) for a in nbrs for b in nbrs[a])
    return TreeDecomposition(bags, edges)


def _merge_into(bags, nbrs, a: int, b: int) -> None:
    for c in nbrs.pop(a):
        nbrs[c].discard(a)
        if c != b:
            nbrs[c].add(b)
            nbrs[b].add(c)
    del bags[a]


def make_smooth(td: TreeDecomposition, g: Graph, k: int = 3) -> TreeDecomposition:
    """Smooth width-``k`` decomposition of ``g`` derived from ``td``.

    Pads small bags from neighbours, contracts containments, then subdivides
    tree edges whose bags differ by more than one vertex.  The result has
    exactly ``|V(g)| - k`` nodes and is rooted at its smallest node id.
    """
    if len(g.vertices) < k + 1:
        raise InputError(f"graph has {len(g.vertices)} vertices, smoothing needs at least {k + 1}")
    td = _contract_containments(td)
    while True:
        bags = dict(td.bags)
        padded = False
        for a, b in sorted(td.tree_edges):
            for s, t in ((a, b), (b, a)):
                if len(bags[s]) < k + 1:
                    extra = bags[t] - bags[s]
                    if extra:
                        bags[s] = bags[s] | {min(extra)}
                        padded = True
        if not padded:
            break
        td = _contract_containments(TreeDecomposition(bags, td.tree_edges))
    if len(td.bags) == 1:
        (only,) = td.bags.values()
        if len(only) != k + 1:
            raise IntegrityError("single bag does not have k+1 vertices")
        return TreeDecomposition({0: only}, frozenset(), 0)

    bags = dict(td.bags)
    edges: set[tuple[int, int]] = set()
    fresh = max(bags) + 1
    for a, b in sorted(td.tree_edges):
        out = sorted(bags[a] - bags[b])
        into = sorted(bags[b] - bags[a])
        prev, cur = a, bags[a]
        for x, y in zip(out[:-1], into[:-1]):
            cur = (cur - {x}) | {y}
            bags[fresh] = cur
            edges.add(_pair(prev, fresh))
            prev, fresh = fresh, fresh + 1
        edges.add(_pair(prev, b))
    # compact ids so node numbering is canonical
    mapping = {t: i for i, t in enumerate(sorted(bags))}
    out_td = TreeDecomposition({mapping[t]: bag for t, bag in bags.items()},
                               frozenset(_pair(mapping[a], mapping[b]) for a, b in edges), 0)
    return out_td


# -- the proof's pivot ------------------------------------------------------

def pivot_node(td: TreeDecomposition) -> int:
    """Node of tree-degree >= 2 with maximum height; smallest id on ties."""
    if len(td.bags) < 2:
        raise NotApplicable("single-node decomposition has no pivot")
    heights = td.heights()
    candidates = [t for t in td.bags if td.tree_degree(t) >= 2]
    if not candidates:
        raise NotApplicable("tree has no node of degree >= 2")
    top = max(heights[t] for t in candidates)
    pivot = min(t for t in candidates if heights[t] == top)
    for s in td.tree_neighbors(pivot):
        if heights[s] > top and not td.is_leaf(s):
            raise IntegrityError(f"child {s} of pivot {pivot} is not a leaf")
    return pivot


def leaf_neighbors(td: TreeDecomposition, t: int) -> list[int]:
    """Tree leaves adjacent to ``t`` (a parent leaf counts as well)."""
    return sorted(s for s in td.tree_neighbors(t) if td.is_leaf(s))


def unique_bag_vertex(td: TreeDecomposition, leaf: int) -> int:
    """The vertex that lies in ``leaf``'s bag and in no other bag."""
    others: set[int] = set()
    for t, b in td.bags.items():
        if t != leaf:
            others |= b
    unique = sorted(td.bags[leaf] - others)
    if len(unique) != 1:
        raise IntegrityError(f"leaf {leaf} has {len(unique)} private vertices; not smooth")
    return unique[0]
