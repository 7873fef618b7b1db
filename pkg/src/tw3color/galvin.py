"""List edge-coloring of bipartite graphs from lists of size Delta.

Implements Galvin's kernel argument directly:

1. properly edge-color the bipartite graph with ``Delta`` colors (Konig);
2. orient the line graph: at a left vertex an edge points to edges of larger
   color, at a right vertex to edges of smaller color, so every out-degree is
   at most ``Delta - 1``;
3. for each color ``c`` in turn, take the uncolored edges whose list holds
   ``c``, find a kernel of the induced digraph (a stable matching, via
   Gale-Shapley), color the kernel ``c`` and strike ``c`` from every other
   list in the set.

Each round keeps ``|list| > out-degree`` for every uncolored edge, so the
procedure never gets stuck.
"""

from __future__ import annotations

from typing import Mapping

from .colorings import PartialColoring
from .errors import InputError, IntegrityError
from .graph import Edge, Graph


def konig_coloring(g: Graph, left: frozenset[int]) -> dict[Edge, int]:
    """Proper edge coloring of a bipartite graph with colors ``1..Delta``.

    Uses alternating-path recoloring: an ``a/b`` path started at a vertex of
    one side can never reach the other endpoint of the edge being colored.
    """
    delta = g.max_degree
    at: dict[int, dict[int, int]] = {v: {} for v in g.vertices}  # vertex -> color -> other end
    color: dict[Edge, int] = {}

    def free(v: int) -> int:
        return next(c for c in range(1, delta + 1) if c not in at[v])

    for u, v in g.edge_list():
        a = free(u)
        b = free(v)
        if a not in at[v]:
            pass
        else:
            # flip the a/b alternating path starting at v along color a
            path = []
            x, c = v, a
            while c in at[x]:
                y = at[x][c]
                path.append((x, y, c))
                x, c = y, (b if c == a else a)
            for x, y, c in path:
                del at[x][c]
                del at[y][c]
            for x, y, c in path:
                nc = b if c == a else a
                at[x][nc] = y
                at[y][nc] = x
                color[(x, y) if x < y else (y, x)] = nc
        at[u][a] = v
        at[v][a] = u
        color[(u, v)] = a
    return color


def _kernel(edges: list[Edge], phi: Mapping[Edge, int], left: frozenset[int]) -> set[Edge]:
    """Stable matching where left vertices prefer larger ``phi``, right ones smaller.

    The result is independent in the line digraph and absorbs every other edge
    of ``edges``: each unmatched edge has a kernel edge at its left end with a
    larger color or at its right end with a smaller color.
    """
    proposals: dict[int, list[Edge]] = {}
    for e in edges:
        a = e[0] if e[0] in left else e[1]
        proposals.setdefault(a, []).append(e)
    for a in proposals:
        proposals[a].sort(key=lambda e: phi[e])  # popped from the end: largest first
    holding: dict[int, Edge] = {}
    free = sorted(proposals)
    while free:
        a = free.pop()
        if not proposals[a]:
            continue
        e = proposals[a].pop()
        b = e[1] if e[0] == a else e[0]
        current = holding.get(b)
        if current is None:
            holding[b] = e
        elif phi[e] < phi[current]:
            holding[b] = e
            loser = current[0] if current[0] in left else current[1]
            free.append(loser)
        else:
            free.append(a)
    return set(holding.values())


def galvin_color(g: Graph, lists: Mapping[Edge, frozenset]) -> PartialColoring:
    """L-edge-coloring of bipartite ``g`` when every list has at least Delta colors."""
    parts = g.bipartition()
    if parts is None:
        raise InputError("graph is not bipartite")
    delta = g.max_degree
    for e in g.edges:
        if len(lists[e]) < delta:
            raise InputError(f"list of {e} has {len(lists[e])} colors, Delta is {delta}")
    if not g.edges:
        return {}
    left = parts[0]
    phi = konig_coloring(g, left)
    remaining = {e: set(lists[e]) for e in g.edges}
    result: PartialColoring = {}
    for c in sorted(set().union(*remaining.values())):
        if not remaining:
            break
        holders = sorted(e for e, cs in remaining.items() if c in cs)
        if not holders:
            continue
        kernel = _kernel(holders, phi, left)
        for e in holders:
            if e in kernel:
                result[e] = c
                del remaining[e]
            else:
                remaining[e].discard(c)
                if not remaining[e]:
                    raise IntegrityError(f"kernel method ran dry on {e}")
    if remaining:
        raise IntegrityError(f"kernel method left {sorted(remaining)} uncolored")
    return result
