"""List assignments and (partial) colorings.

Edge lists and edge colorings are plain dicts keyed by canonical edges.
Total colorings carry an edge part and a vertex part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping

from .errors import InputError
from .graph import Edge, Graph, edge

ListAssignment = Dict[Edge, frozenset]
PartialColoring = Dict[Edge, int]


def make_lists(g: Graph, lists: Mapping[Edge, Iterable[int]]) -> ListAssignment:
    """Normalise keys and values; every edge of ``g`` needs a non-empty list."""
    out: ListAssignment = {}
    for key, colors in lists.items():
        e = edge(*key)
        if e not in g.edges:
            raise InputError(f"list given for non-edge {e}")
        cs = frozenset(int(c) for c in colors)
        if not cs:
            raise InputError(f"empty list for edge {e}")
        if min(cs) < 0:
            raise InputError(f"negative color in list of {e}")
        out[e] = cs
    missing = g.edges - out.keys()
    if missing:
        raise InputError(f"no list for edges {sorted(missing)[:5]}")
    return out


def uniform_lists(g: Graph, k: int) -> ListAssignment:
    colors = frozenset(range(1, k + 1))
    return {e: colors for e in g.edges}


def bound_plus_lists(g: Graph, j: int) -> ListAssignment:
    """``{1..max(deg u, deg v)+j}`` on every edge ``uv``."""
    return {e: frozenset(range(1, max(g.degree(e[0]), g.degree(e[1])) + j + 1))
            for e in g.edges}


@dataclass
class TotalListAssignment:
    edges: dict[Edge, frozenset] = field(default_factory=dict)
    vertices: dict[int, frozenset] = field(default_factory=dict)

    @classmethod
    def uniform(cls, g: Graph, k: int) -> TotalListAssignment:
        colors = frozenset(range(1, k + 1))
        return cls({e: colors for e in g.edges}, {v: colors for v in g.vertices})

    def validate(self, g: Graph) -> TotalListAssignment:
        edges = make_lists(g, self.edges) if g.edges or self.edges else {}
        verts: dict[int, frozenset] = {}
        for v, colors in self.vertices.items():
            if v not in g:
                raise InputError(f"list given for unknown vertex {v}")
            cs = frozenset(int(c) for c in colors)
            if not cs:
                raise InputError(f"empty list for vertex {v}")
            verts[v] = cs
        missing = set(g.vertices) - verts.keys()
        if missing:
            raise InputError(f"no list for vertices {sorted(missing)[:5]}")
        return TotalListAssignment(edges, verts)

    def restrict(self, g: Graph) -> TotalListAssignment:
        return TotalListAssignment({e: self.edges[e] for e in g.edges},
                                   {v: self.vertices[v] for v in g.vertices})

    def min_size(self) -> int:
        sizes = [len(c) for c in self.edges.values()] + [len(c) for c in self.vertices.values()]
        return min(sizes, default=0)


@dataclass
class TotalColoring:
    edges: dict[Edge, int] = field(default_factory=dict)
    vertices: dict[int, int] = field(default_factory=dict)

    def copy(self) -> TotalColoring:
        return TotalColoring(dict(self.edges), dict(self.vertices))

    def colors_used(self) -> set[int]:
        return set(self.edges.values()) | set(self.vertices.values())
