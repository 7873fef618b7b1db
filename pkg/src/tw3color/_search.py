"""Backtracking list-coloring kernel.

Every exact solver in the package reduces to list-coloring the vertices of a
*conflict graph* (the line graph for edge colorings, the total graph for
total colorings).  The kernel below does that with most-constrained-variable
selection, smallest-color-first branching and forward checking.

The same Python source is used twice: run by the interpreter on numpy arrays
(``search_py``) and compiled by numba (``search_jit``).  ``search`` points at
the compiled version unless numba is missing or ``TW3COLOR_NO_NUMBA`` is set.
"""

from __future__ import annotations

import os

import numpy as np

SAT, UNSAT, EXHAUSTED = 0, 1, 2


def _search(indptr, indices, allowed, max_nodes):
    n = allowed.shape[0]
    ncol = allowed.shape[1]
    assign = np.full(n, -1, dtype=np.int64)
    if n == 0:
        return assign, SAT, 0
    avail = allowed.copy()
    count = np.zeros(n, dtype=np.int64)
    for v in range(n):
        for c in range(ncol):
            count[v] += avail[v, c]
    trail_v = np.empty(n * ncol + 1, dtype=np.int64)
    trail_c = np.empty(n * ncol + 1, dtype=np.int64)
    var_at = np.empty(n, dtype=np.int64)
    next_c = np.zeros(n, dtype=np.int64)
    trail_start = np.zeros(n, dtype=np.int64)
    tp = 0
    nodes = 0
    d = 0
    # most constrained variable, smallest index on ties
    best = 0
    for u in range(1, n):
        if count[u] < count[best]:
            best = u
    var_at[0] = best
    while True:
        v = var_at[d]
        while tp > trail_start[d]:
            tp -= 1
            avail[trail_v[tp], trail_c[tp]] = 1
            count[trail_v[tp]] += 1
        assign[v] = -1
        c = next_c[d]
        while c < ncol and avail[v, c] == 0:
            c += 1
        if c >= ncol:
            if d == 0:
                return assign, UNSAT, nodes
            d -= 1
            continue
        next_c[d] = c + 1
        if nodes >= max_nodes:
            return assign, EXHAUSTED, nodes
        nodes += 1
        assign[v] = c
        ok = True
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if assign[w] < 0 and avail[w, c] == 1:
                avail[w, c] = 0
                count[w] -= 1
                trail_v[tp] = w
                trail_c[tp] = c
                tp += 1
                if count[w] == 0:
                    ok = False
                    break
        if not ok:
            continue
        nxt = -1
        for u in range(n):
            if assign[u] < 0 and (nxt < 0 or count[u] < count[nxt]):
                nxt = u
        if nxt < 0:
            return assign, SAT, nodes
        d += 1
        var_at[d] = nxt
        next_c[d] = 0
        trail_start[d] = tp


def _numba_wanted() -> bool:
    return os.environ.get("TW3COLOR_NO_NUMBA", "").strip().lower() in ("", "0", "false", "no")


search_py = _search
search_jit = None
try:
    import numba

    search_jit = numba.njit(cache=True)(_search)
except ImportError:  # pragma: no cover - numba absent
    numba = None

USE_NUMBA = search_jit is not None and _numba_wanted()
search = search_jit if USE_NUMBA else search_py


def run_search(indptr: np.ndarray, indices: np.ndarray, allowed: np.ndarray,
               max_nodes: int, *, backend: str | None = None):
    """Dispatch to the selected kernel; ``backend`` is ``"jit"``, ``"py"`` or ``None``."""
    if backend == "py":
        fn = search_py
    elif backend == "jit":
        if search_jit is None:
            raise RuntimeError("numba is not installed")
        fn = search_jit
    else:
        fn = search
    assign, status, nodes = fn(indptr.astype(np.int64), indices.astype(np.int64),
                               np.ascontiguousarray(allowed, dtype=np.uint8), int(max_nodes))
    return assign, int(status), int(nodes)
