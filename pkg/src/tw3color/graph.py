"""Immutable simple graphs.

Vertices are small nonnegative integers.  An edge is the tuple ``(u, v)``
with ``u < v``; build one with :func:`edge` so orientation never matters.
Every operation that changes the graph returns a new instance.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping

from .errors import InputError

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical form of the unordered pair ``{u, v}``."""
    if u == v:
        raise InputError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def edges_adjacent(e: Edge, f: Edge) -> bool:
    return e != f and (e[0] in f or e[1] in f)


class Graph:
    """A finite simple undirected graph.

    ``labels`` is an optional side table mapping vertex ids to display names;
    it plays no part in equality or hashing.
    """

    __slots__ = ("vertices", "edges", "adj", "labels", "_hash")

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int]] = (),
        labels: Mapping[int, str] | None = None,
    ) -> None:
        verts = sorted(set(vertices))
        vset = set(verts)
        adj: dict[int, set[int]] = {v: set() for v in verts}
        es: set[Edge] = set()
        for u, v in edges:
            e = edge(u, v)
            if e[0] not in vset or e[1] not in vset:
                raise InputError(f"edge {e} has an endpoint outside the vertex set")
            if e in es:
                raise InputError(f"parallel edge {e}")
            es.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.vertices: tuple[int, ...] = tuple(verts)
        self.edges: frozenset[Edge] = frozenset(es)
        self.adj: dict[int, frozenset[int]] = {v: frozenset(n) for v, n in adj.items()}
        self.labels: dict[int, str] = dict(labels) if labels else {}
        self._hash: int | None = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
        edges = list(edges)
        verts = set(range(n)) if n is not None else set()
        for u, v in edges:
            verts.update((u, v))
        return cls(verts, edges)

    # -- basic queries -------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={len(self.vertices)}, m={len(self.edges)})"

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    @property
    def max_degree(self) -> int:
        return max((len(n) for n in self.adj.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.adj and v in self.adj[u]

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def incident(self, v: int) -> list[Edge]:
        return sorted(edge(v, u) for u in self.adj[v])

    def adjacent_edges(self, e: Edge) -> list[Edge]:
        u, v = e
        out = [edge(u, x) for x in self.adj[u] if x != v]
        out += [edge(v, x) for x in self.adj[v] if x != u]
        return out

    def neighborhood(self, w: Iterable[int]) -> frozenset[int]:
        """N(W): vertices outside ``w`` adjacent to some vertex of ``w``."""
        w = set(w)
        out: set[int] = set()
        for v in w:
            out |= self.adj[v]
        return frozenset(out - w)

    def _check_subset(self, w: Iterable[int]) -> set[int]:
        w = set(w)
        unknown = w - self.adj.keys()
        if unknown:
            raise InputError(f"unknown vertex ids {sorted(unknown)}")
        return w

    # -- subgraph operators ---------------------------------------------

    def local_subgraph(self, w: Iterable[int]) -> Graph:
        """G<W>: vertex set W + N(W), edges of G with an endpoint in W."""
        w = self._check_subset(w)
        es = [e for e in self.edges if e[0] in w or e[1] in w]
        return Graph(w | self.neighborhood(w), es, self.labels)

    def remove_vertices(self, w: Iterable[int]) -> Graph:
        """G - W, the subgraph induced on the remaining vertices."""
        w = self._check_subset(w)
        if not w:
            return self
        es = [e for e in self.edges if e[0] not in w and e[1] not in w]
        return Graph((v for v in self.vertices if v not in w), es, self.labels)

    def remove_edges(self, es: Iterable[Edge]) -> Graph:
        drop = {edge(*e) for e in es}
        missing = drop - self.edges
        if missing:
            raise InputError(f"edges {sorted(missing)} not in graph")
        return Graph(self.vertices, self.edges - drop, self.labels)

    def add_edges(self, es: Iterable[Edge]) -> Graph:
        return Graph(self.vertices, list(self.edges) + [edge(*e) for e in es], self.labels)

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """Two-coloring of the vertices, or ``None`` when an odd cycle exists."""
        side: dict[int, int] = {}
        for s in self.vertices:
            if s in side:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for x in self.adj[u]:
                    if x not in side:
                        side[x] = 1 - side[u]
                        queue.append(x)
                    elif side[x] == side[u]:
                        return None
        left = frozenset(v for v, s in side.items() if s == 0)
        return left, frozenset(self.adj.keys() - left)

    def relabeled(self) -> tuple[Graph, dict[int, int]]:
        """Copy with vertices renumbered 0..n-1 in sorted order, plus the map used."""
        mapping = {v: i for i, v in enumerate(self.vertices)}
        g = Graph(range(len(mapping)), ((mapping[u], mapping[v]) for u, v in self.edges),
                  {mapping[v]: s for v, s in self.labels.items()})
        return g, mapping


def complete_graph(n: int) -> Graph:
    return Graph(range(n), ((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph(range(n), ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(range(n), ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(range(a + b), ((i, a + j) for i in range(a) for j in range(b)))
