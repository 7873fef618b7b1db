"""Line-oriented text formats for graphs, decompositions, lists, colorings and Halin trees.

Every format uses 1-based vertex ids on disk and 0-based ids in memory.
Lines starting with ``#`` and blank lines are ignored.  Writers emit a
canonical, sorted layout so parse -> write -> parse is the identity and equal
objects give equal bytes.

========  ==================================================================
graph     ``g <n> <m>`` then ``e <u> <v>`` per edge
td        ``s td <nodes> <maxbag> <n>``, ``b <node> <v...>`` per bag, ``<a> <b>`` per tree edge
lists     ``l <u> <v> : <c...>`` per edge, plus ``v <u> : <c...>`` per vertex for total lists
coloring  ``c <u> <v> -> <color>`` per edge, ``cv <u> -> <color>`` per vertex
halin     ``h <n>`` then ``t <parent> <child>`` in plane order
========  ==================================================================
"""

from __future__ import annotations

from typing import Iterator, Mapping

from .colorings import ListAssignment, PartialColoring, TotalColoring, TotalListAssignment
from .decomposition import TreeDecomposition
from .errors import InputError, ParseError
from .graph import Edge, Graph, edge
from .halin import HalinStructure


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for i, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield i, s.split()


def _ints(tokens: list[str], line: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", line) from None


def _vertex(token: str, n: int | None, line: int) -> int:
    (v,) = _ints([token], line)
    if v < 1 or (n is not None and v > n):
        raise ParseError(f"vertex id {v} out of range 1..{n}", line)
    return v - 1


def _contiguous(vertices: tuple[int, ...]) -> int:
    n = len(vertices)
    if vertices != tuple(range(n)):
        raise InputError("writers need vertices 0..n-1; relabel the graph first")
    return n


# -- graphs ----------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    n = m = None
    edges: list[Edge] = []
    for line, tok in _lines(text):
        if tok[0] == "g":
            if n is not None:
                raise ParseError("second header line", line)
            if len(tok) != 3:
                raise ParseError("header must be 'g <n> <m>'", line)
            n, m = _ints(tok[1:], line)
        elif tok[0] == "e":
            if n is None:
                raise ParseError("edge line before header", line)
            if len(tok) != 3:
                raise ParseError("edge line must be 'e <u> <v>'", line)
            u, v = _vertex(tok[1], n, line), _vertex(tok[2], n, line)
            if u == v:
                raise ParseError(f"self-loop at vertex {u + 1}", line)
            e = edge(u, v)
            if e in edges:
                raise ParseError(f"parallel edge {u + 1} {v + 1}", line)
            edges.append(e)
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", line)
    if n is None:
        raise ParseError("missing header 'g <n> <m>'")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return Graph(range(n), edges)


def write_graph(g: Graph) -> str:
    n = _contiguous(g.vertices)
    out = [f"g {n} {g.num_edges}"]
    out += [f"e {u + 1} {v + 1}" for u, v in g.edge_list()]
    return "\n".join(out) + "\n"


# -- tree decompositions ------------------------------------------------------------

def parse_td(text: str) -> tuple[TreeDecomposition, int]:
    """Decomposition and the vertex count from its header."""
    header = None
    bags: dict[int, frozenset[int]] = {}
    tree_edges: list[tuple[int, int]] = []
    for line, tok in _lines(text):
        if tok[0] == "s":
            if header is not None or len(tok) != 5 or tok[1] != "td":
                raise ParseError("header must be 's td <nodes> <maxbag> <n>'", line)
            header = _ints(tok[2:], line)
        elif header is None:
            raise ParseError("content before header", line)
        elif tok[0] == "b":
            if len(tok) < 2:
                raise ParseError("bag line needs a node id", line)
            t = _ints(tok[1:2], line)[0]
            if not 1 <= t <= header[0]:
                raise ParseError(f"node id {t} out of range", line)
            if t - 1 in bags:
                raise ParseError(f"bag {t} given twice", line)
            vs = [_vertex(x, header[2], line) for x in tok[2:]]
            if len(vs) > header[1]:
                raise ParseError(f"bag {t} exceeds the announced size {header[1]}", line)
            bags[t - 1] = frozenset(vs)
        else:
            if len(tok) != 2:
                raise ParseError("tree edge line must be '<a> <b>'", line)
            a, b = _ints(tok, line)
            for x in (a, b):
                if not 1 <= x <= header[0]:
                    raise ParseError(f"node id {x} out of range", line)
            tree_edges.append((a - 1, b - 1))
    if header is None:
        raise ParseError("missing header 's td <nodes> <maxbag> <n>'")
    if len(bags) != header[0]:
        raise ParseError(f"header announces {header[0]} bags, found {len(bags)}")
    return TreeDecomposition(bags, frozenset(tree_edges)), header[2]


def write_td(td: TreeDecomposition, n: int) -> str:
    """Nodes are renumbered 1..k in sorted order of their ids."""
    pos = {t: i + 1 for i, t in enumerate(td.nodes)}
    maxbag = max((len(b) for b in td.bags.values()), default=0)
    out = [f"s td {len(pos)} {maxbag} {n}"]
    for t, i in pos.items():
        out.append(" ".join(["b", str(i), *(str(v + 1) for v in sorted(td.bags[t]))]))
    pairs = sorted(tuple(sorted((pos[x], pos[y]))) for x, y in td.tree_edges)
    out += [f"{a} {b}" for a, b in pairs]
    return "\n".join(out) + "\n"


# -- lists ---------------------------------------------------------------------------

def _colors(tokens: list[str], line: int) -> frozenset[int]:
    if not tokens:
        raise ParseError("empty list", line)
    cs = _ints(tokens, line)
    if len(set(cs)) != len(cs):
        raise ParseError("repeated color in list", line)
    return frozenset(cs)


def _split_colon(tok: list[str], line: int) -> tuple[list[str], list[str]]:
    if ":" not in tok:
        raise ParseError("missing ':' separator", line)
    i = tok.index(":")
    return tok[1:i], tok[i + 1:]


def parse_total_lists(text: str) -> TotalListAssignment:
    edges: dict[Edge, frozenset[int]] = {}
    vertices: dict[int, frozenset[int]] = {}
    for line, tok in _lines(text):
        head, rest = _split_colon(tok, line)
        if tok[0] == "l":
            if len(head) != 2:
                raise ParseError("list line must be 'l <u> <v> : <colors>'", line)
            e = edge(_vertex(head[0], None, line), _vertex(head[1], None, line))
            if e in edges:
                raise ParseError(f"second list for edge {e[0] + 1} {e[1] + 1}", line)
            edges[e] = _colors(rest, line)
        elif tok[0] == "v":
            if len(head) != 1:
                raise ParseError("vertex list line must be 'v <u> : <colors>'", line)
            v = _vertex(head[0], None, line)
            if v in vertices:
                raise ParseError(f"second list for vertex {v + 1}", line)
            vertices[v] = _colors(rest, line)
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", line)
    return TotalListAssignment(edges, vertices)


def parse_lists(text: str) -> ListAssignment:
    total = parse_total_lists(text)
    if total.vertices:
        raise ParseError("vertex lists in an edge list file")
    return dict(total.edges)


def write_lists(lists: Mapping[Edge, frozenset], vertex_lists: Mapping[int, frozenset] | None = None) -> str:
    out = [f"l {u + 1} {v + 1} : " + " ".join(map(str, sorted(lists[(u, v)])))
           for u, v in sorted(lists)]
    for v in sorted(vertex_lists or {}):
        out.append(f"v {v + 1} : " + " ".join(map(str, sorted(vertex_lists[v]))))
    return "\n".join(out) + "\n"


def write_total_lists(lists: TotalListAssignment) -> str:
    return write_lists(lists.edges, lists.vertices)


# -- colorings ------------------------------------------------------------------------

def parse_total_coloring(text: str) -> TotalColoring:
    out = TotalColoring()
    for line, tok in _lines(text):
        if "->" not in tok or tok.index("->") != len(tok) - 2:
            raise ParseError("coloring line must end in '-> <color>'", line)
        (c,) = _ints(tok[-1:], line)
        head = tok[1:-2]
        if tok[0] == "c" and len(head) == 2:
            e = edge(_vertex(head[0], None, line), _vertex(head[1], None, line))
            if e in out.edges:
                raise ParseError("edge colored twice", line)
            out.edges[e] = c
        elif tok[0] == "cv" and len(head) == 1:
            v = _vertex(head[0], None, line)
            if v in out.vertices:
                raise ParseError("vertex colored twice", line)
            out.vertices[v] = c
        else:
            raise ParseError(f"malformed coloring line starting {tok[0]!r}", line)
    return out


def parse_coloring(text: str) -> PartialColoring:
    total = parse_total_coloring(text)
    if total.vertices:
        raise ParseError("vertex colors in an edge coloring file")
    return dict(total.edges)


def write_coloring(coloring: Mapping[Edge, int], vertex_colors: Mapping[int, int] | None = None) -> str:
    out = [f"c {u + 1} {v + 1} -> {coloring[(u, v)]}" for u, v in sorted(coloring)]
    out += [f"cv {v + 1} -> {c}" for v, c in sorted((vertex_colors or {}).items())]
    return "\n".join(out) + "\n"


def write_total_coloring(coloring: TotalColoring) -> str:
    return write_coloring(coloring.edges, coloring.vertices)


# -- Halin structures ---------------------------------------------------------------------

def parse_halin(text: str) -> HalinStructure:
    n = None
    pairs: list[tuple[int, int]] = []
    for line, tok in _lines(text):
        if tok[0] == "h":
            if n is not None or len(tok) != 2:
                raise ParseError("header must be 'h <n>'", line)
            (n,) = _ints(tok[1:], line)
        elif tok[0] == "t":
            if n is None:
                raise ParseError("tree line before header", line)
            if len(tok) != 3:
                raise ParseError("tree line must be 't <parent> <child>'", line)
            pairs.append((_vertex(tok[1], n, line), _vertex(tok[2], n, line)))
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", line)
    if n is None:
        raise ParseError("missing header 'h <n>'")
    try:
        h = HalinStructure.from_parent_pairs(pairs)
    except InputError as exc:
        raise ParseError(str(exc)) from None
    if len(h.vertices) != n:
        raise ParseError(f"header announces {n} vertices, tree has {len(h.vertices)}")
    return h


def write_halin(h: HalinStructure) -> str:
    n = _contiguous(tuple(h.vertices))
    out = [f"h {n}"]
    queue = [h.root]
    for v in queue:
        for c in h.children.get(v, ()):
            out.append(f"t {v + 1} {c + 1}")
            queue.append(c)
    return "\n".join(out) + "\n"


def sniff(text: str) -> str:
    """Kind of file from its first content line: ``graph``, ``halin``, ``td``, ``lists`` or ``coloring``."""
    for _, tok in _lines(text):
        kinds = {"g": "graph", "h": "halin", "s": "td", "l": "lists", "v": "lists",
                 "c": "coloring", "cv": "coloring"}
        if tok[0] in kinds:
            return kinds[tok[0]]
        break
    raise ParseError("cannot tell the file type from its first line")


def load_graph_or_halin(text: str) -> tuple[Graph, HalinStructure | None]:
    """Graph file or Halin structure file; the graph is derived for the latter."""
    if sniff(text) == "halin":
        h = parse_halin(text)
        return h.graph, h
    return parse_graph(text), None
