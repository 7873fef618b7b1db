"""Seeded random graphs of tree-width at most 3."""

from __future__ import annotations

import random

from .colorings import ListAssignment
from .graph import Edge, Graph, edge


def random_ktree(n: int, k: int = 3, seed: int | None = None) -> Graph:
    """Random k-tree on ``n`` vertices: a (k+1)-clique grown by stacking on k-cliques."""
    rng = random.Random(seed)
    if n <= k + 1:
        return Graph(range(n), ((i, j) for i in range(n) for j in range(i + 1, n)))
    edges = {edge(i, j) for i in range(k + 1) for j in range(i + 1, k + 1)}
    base = tuple(range(k + 1))
    cliques = [tuple(x for x in base if x != drop) for drop in base]
    for v in range(k + 1, n):
        clique = rng.choice(cliques)
        edges.update(edge(v, x) for x in clique)
        cliques.extend(tuple(sorted((v, *(x for x in clique if x != drop)))) for drop in clique)
    return Graph(range(n), edges)


def random_partial_ktree(n: int, k: int = 3, keep: float = 0.8, seed: int | None = None,
                         max_degree: int | None = None) -> Graph:
    """Spanning subgraph of a random k-tree; tree-width is at most ``k``.

    Each edge survives with probability ``keep``; with ``max_degree`` set,
    random edges at over-full vertices are then dropped until the cap holds.
    """
    rng = random.Random(seed)
    full = random_ktree(n, k, rng.randrange(2**32))
    edges = {e for e in sorted(full.edges) if rng.random() < keep}
    if max_degree is not None:
        deg = {v: 0 for v in range(n)}
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        for v in range(n):
            while deg[v] > max_degree:
                e = rng.choice(sorted(e for e in edges if v in e))
                edges.discard(e)
                deg[e[0]] -= 1
                deg[e[1]] -= 1
    return Graph(range(n), edges)


def random_lists(g: Graph, size_of, universe: int, seed: int | None = None) -> ListAssignment:
    """Random lists: ``size_of(e)`` distinct colors from ``{1..universe}`` per edge."""
    rng = random.Random(seed)
    out: ListAssignment = {}
    colors = list(range(1, universe + 1))
    for e in g.edge_list():
        out[e] = frozenset(rng.sample(colors, size_of(e)))
    return out


def tight_edge_lists(g: Graph, seed: int | None = None, universe: int | None = None) -> ListAssignment:
    """Lists of exactly ``max(deg u, deg v) + 1`` colors drawn from a ``3*Delta`` palette."""
    universe = universe or max(3 * g.max_degree, 1)

    def size(e: Edge) -> int:
        return max(g.degree(e[0]), g.degree(e[1])) + 1

    return random_lists(g, size, universe, seed)
