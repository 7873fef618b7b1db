"""Compare the compiled and interpreted search kernels on the same instances.

Run with ``python benchmarks/bench_search.py [--repeat N]``.  Both backends
must agree on status and node count; the script exits non-zero if they don't.
"""

from __future__ import annotations

import argparse
import sys
import time

from tw3color import _search
from tw3color.fixtures import figure1_graph, figure5_graph
from tw3color.generators import random_partial_ktree, tight_edge_lists
from tw3color.halin import generate_halin
from tw3color.oracle import SearchBudget, exact_list_edge_color, exact_total_color


def instances():
    """(name, callable taking a backend) pairs."""
    k5 = figure1_graph().graph
    yield "k5-minus-edge 4 colors (unsat)", lambda b: exact_list_edge_color(
        k5, {e: frozenset(range(1, 5)) for e in k5.edges}, backend=b)
    sharp = figure5_graph()
    yield "halin degree lists (unsat)", lambda b: exact_list_edge_color(
        sharp.graph, sharp.lists, backend=b)
    for seed in range(3):
        g = random_partial_ktree(40, seed=seed)
        lists = tight_edge_lists(g, seed=seed)
        yield f"partial 3-tree n=40 seed={seed}", lambda b, g=g, lists=lists: exact_list_edge_color(
            g, lists, backend=b)
    h = generate_halin(3, 28, cubic=True)
    yield f"cubic halin n={len(h.vertices)} 3 colors", lambda b, g=h.graph: exact_list_edge_color(
        g, {e: frozenset({1, 2, 3}) for e in g.edges}, backend=b)
    g = random_partial_ktree(12, seed=7, max_degree=4)
    yield "total coloring n=12 k=Delta+1", lambda b, g=g: exact_total_color(
        g, g.max_degree + 1, SearchBudget(2_000_000), backend=b)


def timed(fn, backend: str, repeat: int):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="best-of count per backend")
    args = ap.parse_args(argv)
    if _search.search_jit is None:
        print("numba is not installed; only the interpreted kernel is available", file=sys.stderr)
        return 1

    t0 = time.perf_counter()
    exact_list_edge_color(figure1_graph().graph, {e: frozenset({1}) for e in figure1_graph().graph.edges},
                          backend="jit")
    print(f"jit warm-up (compile or cache load): {time.perf_counter() - t0:.2f}s")
    print(f"{'instance':36} {'status':>9} {'nodes':>9} {'py s':>9} {'jit s':>9} {'speedup':>8}")
    ok = True
    for name, fn in instances():
        tp, rp = timed(fn, "py", args.repeat)
        tj, rj = timed(fn, "jit", args.repeat)
        same = (rp.status, rp.nodes) == (rj.status, rj.nodes)
        ok &= same
        flag = "" if same else "  MISMATCH"
        print(f"{name:36} {rj.status:>9} {rj.nodes:>9} {tp:9.4f} {tj:9.4f} {tp / max(tj, 1e-9):7.1f}x{flag}")
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
