"""Command-line front end: ``tw3color <command> ...``.

Exit codes: 0 success, 1 parse or usage error, 2 structural precondition
failed (tree-width too large, not a Halin structure, lists too short),
3 no coloring exists, 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .colorings import TotalListAssignment, bound_plus_lists, uniform_lists
from .decomposition import decompose_tw3, make_smooth, smoothness_report, verify_td
from .edge_coloring import EngineStats, color_tw3_edges
from .errors import (ColoringError, InputError, IntegrityError, ListTooShort, ParseError,
                     ResourceExceeded, TooWide)
from .fixtures import fixtures
from .formats import (load_graph_or_halin, parse_lists, parse_total_lists, write_coloring,
                      write_graph, write_halin, write_lists, write_td, write_total_coloring)
from .generators import random_lists, random_partial_ktree, tight_edge_lists
from .graph import Graph
from .halin import HalinStructure, color_halin, generate_halin, halin_bound, halin_delta_choose
from .oracle import (SearchBudget, exact_list_edge_color, exact_list_total_color,
                     verify_edge_coloring, verify_total_coloring)
from .total_coloring import total_bound, total_color_tw3

log = logging.getLogger("tw3color")

EXIT_OK, EXIT_USAGE, EXIT_STRUCTURE, EXIT_UNSAT, EXIT_RESOURCES = 0, 1, 2, 3, 4


@dataclass
class RunReport:
    instance: str
    operation: str
    outcome: str
    verified: str = "n/a"
    nodes: int = 0
    fallbacks: int = 0
    seconds: float = 0.0

    def line(self) -> str:
        return (f"report instance={self.instance} op={self.operation} outcome={self.outcome} "
                f"verified={self.verified} nodes={self.nodes} fallbacks={self.fallbacks} "
                f"time={self.seconds:.3f}")


# -- io helpers ---------------------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def write_atomic(path: str | None, text: str) -> None:
    """Write ``text`` to ``path`` via a temporary file and rename; stdout for ``None`` or ``-``."""
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _emit_report(report: RunReport, out: str | None) -> None:
    # keep stdout clean when the coloring itself goes there
    stream = sys.stderr if out in (None, "-") else sys.stdout
    print(report.line(), file=stream)


def _edge_lists(args: argparse.Namespace, g: Graph):
    if args.lists:
        return parse_lists(_read(args.lists))
    if args.uniform is not None:
        return uniform_lists(g, args.uniform)
    if args.bound_plus is not None:
        return bound_plus_lists(g, args.bound_plus)
    raise InputError("give one of --lists, --uniform or --bound-plus")


def _total_lists(args: argparse.Namespace, g: Graph) -> TotalListAssignment:
    if args.lists:
        return parse_total_lists(_read(args.lists))
    if args.uniform is not None:
        return TotalListAssignment.uniform(g, args.uniform)
    if args.bound_plus is not None:
        k = g.max_degree + args.bound_plus
        return TotalListAssignment.uniform(g, k)
    raise InputError("give one of --lists, --uniform or --bound-plus")


def _budget(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(max_nodes=args.budget)


# -- commands -------------------------------------------------------------------------

def cmd_decompose(args: argparse.Namespace) -> int:
    g, _ = load_graph_or_halin(_read(args.graph))
    t0 = time.perf_counter()
    td = decompose_tw3(g)
    if args.smooth:
        td = make_smooth(td, g, 3)
    ok = verify_td(g, td, 3)
    if not ok:
        raise IntegrityError("computed decomposition does not verify")
    if args.smooth and not smoothness_report(td, 3).smooth:
        raise IntegrityError("smoothing produced a non-smooth decomposition")
    write_atomic(args.out, write_td(td, len(g.vertices)))
    _emit_report(RunReport(Path(args.graph).name, "decompose", f"width={td.width}",
                           "yes", seconds=time.perf_counter() - t0), args.out)
    return EXIT_OK


def cmd_color_edges(args: argparse.Namespace) -> int:
    g, h = load_graph_or_halin(_read(args.graph))
    lists = _edge_lists(args, g)
    stats = EngineStats()
    t0 = time.perf_counter()
    nodes = 0
    if args.mode == "tw3":
        coloring = color_tw3_edges(g, lists, stats=stats)
    elif args.mode == "halin":
        if h is None:
            raise InputError("--mode halin needs a Halin structure file ('h <n>' header)")
        coloring = _color_halin(h, lists, stats, _budget(args))
    else:
        result = exact_list_edge_color(g, lists, _budget(args))
        nodes = result.nodes
        print(result.report_line(), file=sys.stderr)
        if result.exhausted:
            raise ResourceExceeded(f"search exhausted after {nodes} nodes")
        if not result.satisfiable:
            _emit_report(RunReport(Path(args.graph).name, "color-edges/oracle", "unsat",
                                   nodes=nodes, seconds=time.perf_counter() - t0), args.out)
            return EXIT_UNSAT
        coloring = result.coloring
    log.info("branches %s", dict(stats.branches))
    bad = verify_edge_coloring(g, coloring, lists)
    if bad is not None:
        raise IntegrityError(f"coloring failed verification: {bad}")
    write_atomic(args.out, write_coloring(coloring))
    _emit_report(RunReport(Path(args.graph).name, f"color-edges/{args.mode}", "colored", "yes",
                           nodes, stats.fallbacks, time.perf_counter() - t0), args.out)
    return EXIT_OK


def _color_halin(h: HalinStructure, lists, stats: EngineStats, budget: SearchBudget):
    g = h.graph
    delta = g.max_degree
    if all(len(lists[e]) >= delta for e in g.edges):
        return halin_delta_choose(h, lists, budget=budget, stats=stats)
    return color_halin(h, lists, stats=stats)


def cmd_color_total(args: argparse.Namespace) -> int:
    g, _ = load_graph_or_halin(_read(args.graph))
    lists = _total_lists(args, g)
    stats = EngineStats()
    t0 = time.perf_counter()
    nodes = 0
    mode = args.mode
    if mode == "auto":
        mode = "tw3" if lists.validate(g).min_size() >= total_bound(g) else "oracle"
    if mode == "tw3":
        coloring = total_color_tw3(g, lists, stats=stats)
    else:
        decompose_tw3(g)  # the exact path is still reserved for tree-width <= 3 inputs
        result = exact_list_total_color(g, lists.validate(g), _budget(args))
        nodes = result.nodes
        print(result.report_line(), file=sys.stderr)
        if result.exhausted:
            raise ResourceExceeded(f"search exhausted after {nodes} nodes")
        if not result.satisfiable:
            _emit_report(RunReport(Path(args.graph).name, "color-total/oracle", "unsat",
                                   nodes=nodes, seconds=time.perf_counter() - t0), args.out)
            return EXIT_UNSAT
        coloring = result.coloring
    log.info("branches %s", dict(stats.branches))
    bad = verify_total_coloring(g, coloring, lists)
    if bad is not None:
        raise IntegrityError(f"total coloring failed verification: {bad}")
    write_atomic(args.out, write_total_coloring(coloring))
    _emit_report(RunReport(Path(args.graph).name, f"color-total/{mode}", "colored", "yes",
                           nodes, stats.fallbacks, time.perf_counter() - t0), args.out)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "tw3":
        g = random_partial_ktree(args.size, 3, args.keep, args.seed, args.max_degree)
        write_atomic(args.out, write_graph(g))
        if args.lists_out:
            write_atomic(args.lists_out, write_lists(tight_edge_lists(g, args.seed)))
        return EXIT_OK
    h = generate_halin(args.seed, args.size, leaves=args.leaves, cubic=args.kind == "cubic-halin")
    write_atomic(args.out, write_halin(h))
    if args.graph_out:
        write_atomic(args.graph_out, write_graph(h.graph))
    if args.lists_out:
        g = h.graph
        lists = random_lists(g, lambda e: g.max_degree, 2 * g.max_degree, args.seed)
        write_atomic(args.lists_out, write_lists(lists))
    return EXIT_OK


def cmd_export_graph(args: argparse.Namespace) -> int:
    g, _ = load_graph_or_halin(_read(args.structure))
    write_atomic(args.out, write_graph(g))
    return EXIT_OK


def cmd_fixtures(args: argparse.Namespace) -> int:
    out = Path(args.out_dir)
    for name, fx in fixtures().items():
        write_atomic(str(out / f"{name}.graph"), write_graph(fx.graph))
        if fx.halin is not None:
            write_atomic(str(out / f"{name}.halin"), write_halin(fx.halin))
        if fx.lists is not None:
            write_atomic(str(out / f"{name}.lists"), write_lists(fx.lists))
        if fx.sizes:
            write_atomic(str(out / f"{name}.sizes"),
                         "".join(f"s {u + 1} {v + 1} {k}\n" for (u, v), k in sorted(fx.sizes.items())))
        print(f"wrote {name}")
    return EXIT_OK


def _bench_one(job: tuple[int, int, int]) -> RunReport:
    seed, n, kind = job
    t0 = time.perf_counter()
    stats = EngineStats()
    if kind == 0:
        g = random_partial_ktree(n, 3, 0.8, seed)
        lists = tight_edge_lists(g, seed)
        op = "color-edges/tw3"
        colored = color_tw3_edges(g, lists, stats=stats)
    else:
        h = generate_halin(seed, max(1, n // 3))
        g = h.graph
        lists = random_lists(g, lambda e: halin_bound(g, e), 3 * max(g.max_degree, 4), seed)
        op = "color-edges/halin"
        colored = color_halin(h, lists, stats=stats)
    ok = verify_edge_coloring(g, colored, lists) is None
    return RunReport(f"seed{seed}-n{len(g.vertices)}", op, "colored", "yes" if ok else "no",
                     0, stats.fallbacks, time.perf_counter() - t0)


def cmd_bench(args: argparse.Namespace) -> int:
    kind = 0 if args.kind == "tw3" else 1
    jobs = [(args.seed + i, args.size, kind) for i in range(args.count)]
    t0 = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_bench_one, jobs))
    else:
        reports = [_bench_one(j) for j in jobs]
    for r in reports:
        print(r.line())
    failed = sum(r.verified != "yes" for r in reports)
    print(f"summary instances={len(reports)} failed={failed} "
          f"fallbacks={sum(r.fallbacks for r in reports)} time={time.perf_counter() - t0:.3f}")
    return EXIT_OK if failed == 0 else EXIT_UNSAT


# -- parser --------------------------------------------------------------------------------

def _add_list_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--lists", help="list file")
    src.add_argument("--uniform", type=int, metavar="K", help="list {1..K} everywhere")
    src.add_argument("--bound-plus", type=int, metavar="J",
                     help="edge lists {1..max(deg u, deg v)+J}; total lists {1..Delta+J}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tw3color", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="width-3 tree decomposition of a graph")
    p.add_argument("graph")
    p.add_argument("--smooth", action="store_true", help="output a smooth decomposition")
    p.add_argument("--verify", action="store_true", help="accepted for scripts; always on")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("color-edges", help="list edge coloring")
    p.add_argument("graph", help="graph file or Halin structure file")
    _add_list_source(p)
    p.add_argument("--mode", choices=["tw3", "halin", "oracle"], default="tw3")
    p.add_argument("--verify", action="store_true", help="accepted for scripts; always on")
    p.add_argument("--budget", type=int, default=10_000_000, help="search node budget")
    p.add_argument("--out")
    p.set_defaults(func=cmd_color_edges)

    p = sub.add_parser("color-total", help="list total coloring")
    p.add_argument("graph")
    _add_list_source(p)
    p.add_argument("--mode", choices=["auto", "tw3", "oracle"], default="auto",
                   help="auto: peeling engine when lists reach max(5,Delta)+2, else exact search")
    p.add_argument("--verify", action="store_true", help="accepted for scripts; always on")
    p.add_argument("--budget", type=int, default=10_000_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_color_total)

    p = sub.add_parser("gen", help="seeded random instance")
    p.add_argument("kind", choices=["tw3", "halin", "cubic-halin"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, required=True,
                   help="vertex count (tw3) or internal tree vertices (Halin)")
    p.add_argument("--leaves", type=int, help="leaf count for Halin structures")
    p.add_argument("--keep", type=float, default=0.8, help="edge survival rate for tw3")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--graph-out", help="also write the derived graph of a Halin structure")
    p.add_argument("--lists-out", help="also write random lists at the engine's bound")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export-graph", help="graph file from a Halin structure file")
    p.add_argument("structure")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_graph)

    p = sub.add_parser("fixtures", help="write the named fixture instances")
    p.add_argument("--out-dir", default="fixtures")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("bench", help="run a seeded corpus and print one report per instance")
    p.add_argument("kind", choices=["tw3", "halin"], nargs="?", default="tw3")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--size", type=int, default=30)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


_EXIT_FOR: list[tuple[type, int]] = [
    (ParseError, EXIT_USAGE),
    (TooWide, EXIT_STRUCTURE),
    (ListTooShort, EXIT_STRUCTURE),
    (InputError, EXIT_STRUCTURE),
    (ResourceExceeded, EXIT_RESOURCES),
]


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except ColoringError as exc:
        code = next((c for t, c in _EXIT_FOR if isinstance(exc, t)), None)
        if code is None:  # integrity failures are bugs, not user errors
            raise
        print(f"error: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
