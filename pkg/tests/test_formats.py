from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tw3color.colorings import TotalListAssignment
from tw3color.decomposition import decompose_tw3, make_smooth
from tw3color.errors import ParseError
from tw3color.formats import (
    load_graph_or_halin,
    parse_coloring,
    parse_graph,
    parse_halin,
    parse_lists,
    parse_td,
    parse_total_coloring,
    parse_total_lists,
    sniff,
    write_coloring,
    write_graph,
    write_halin,
    write_lists,
    write_td,
    write_total_coloring,
    write_total_lists,
)
from tw3color.generators import tight_edge_lists
from tw3color.graph import Graph
from tw3color.halin import generate_halin
from tw3color.total_coloring import total_color_delta_plus_2

from conftest import tw3_graphs


@given(tw3_graphs(max_n=15))
def test_graph_round_trip(g: Graph) -> None:
    text = write_graph(g)
    assert parse_graph(text) == g
    assert write_graph(parse_graph(text)) == text


@given(tw3_graphs(min_n=4, max_n=15))
def test_td_round_trip(g: Graph) -> None:
    for td in (decompose_tw3(g), make_smooth(decompose_tw3(g), g, 3)):
        text = write_td(td, len(g.vertices))
        back, n = parse_td(text)
        assert n == len(g.vertices)
        assert write_td(back, n) == text


@given(tw3_graphs(max_n=15), st.integers(0, 2**31))
def test_lists_and_coloring_round_trip(g: Graph, seed: int) -> None:
    lists = tight_edge_lists(g, seed)
    assert parse_lists(write_lists(lists)) == lists
    coloring = {e: min(cs) for e, cs in lists.items()}
    assert parse_coloring(write_coloring(coloring)) == coloring


@given(tw3_graphs(max_n=12))
def test_total_round_trip(g: Graph) -> None:
    lists = TotalListAssignment.uniform(g, g.max_degree + 2)
    back = parse_total_lists(write_total_lists(lists))
    assert (back.edges, back.vertices) == (lists.edges, lists.vertices)
    col = total_color_delta_plus_2(g)
    again = parse_total_coloring(write_total_coloring(col))
    assert (again.edges, again.vertices) == (col.edges, col.vertices)


@given(st.integers(0, 2**31), st.integers(1, 10))
def test_halin_round_trip(seed: int, k: int) -> None:
    h = generate_halin(seed, k)
    text = write_halin(h)
    assert parse_halin(text) == h
    assert write_halin(parse_halin(text)) == text
    g, back = load_graph_or_halin(text)
    assert back == h and g == h.graph


def test_writers_sort_output() -> None:
    text = write_coloring({(1, 2): 3, (0, 1): 1})
    assert text == "c 1 2 -> 1\nc 2 3 -> 3\n"
    assert write_lists({(0, 1): frozenset({3, 1})}) == "l 1 2 : 1 3\n"


def test_comments_and_blank_lines_are_ignored() -> None:
    g = parse_graph("# a triangle\n\ng 3 3\ne 1 2\n# middle\ne 2 3\ne 1 3\n")
    assert g.num_edges == 3


@pytest.mark.parametrize("text, line", [
    ("g 3 1\ne 1 4\n", 2),
    ("g 3 1\ne 1 x\n", 2),
    ("e 1 2\n", 1),
    ("g 2 1\ne 1 1\n", 2),
    ("g 2 2\ne 1 2\ne 2 1\n", 3),
    ("g 2 1\nq 1 2\n", 2),
])
def test_graph_parse_errors_carry_line_numbers(text: str, line: int) -> None:
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_header_count_mismatch() -> None:
    with pytest.raises(ParseError):
        parse_graph("g 3 2\ne 1 2\n")


def test_other_parse_errors() -> None:
    with pytest.raises(ParseError):
        parse_lists("l 1 2 1 2\n")
    with pytest.raises(ParseError):
        parse_lists("l 1 2 :\n")
    with pytest.raises(ParseError):
        parse_lists("v 1 : 2\n")
    with pytest.raises(ParseError):
        parse_coloring("c 1 2 3\n")
    with pytest.raises(ParseError):
        parse_td("b 1 1 2\n")
    with pytest.raises(ParseError):
        parse_halin("h 4\nt 1 2\nt 1 3\n")


def test_sniff() -> None:
    assert sniff("# x\ng 1 0\n") == "graph"
    assert sniff("h 4\n") == "halin"
    assert sniff("s td 1 1 1\n") == "td"
    with pytest.raises(ParseError):
        sniff("zzz\n")
