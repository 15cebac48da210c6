import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exact3 import ArgumentError, FormatError, Multigraph, dumbbell, is_isomorphic
from exact3.families import complete, petersen
from exact3.io import (
    format_dot,
    format_edge_list,
    format_graph6,
    parse_edge_list,
    parse_graph6,
    read_graph,
)


def test_edge_list_roundtrip():
    g = Multigraph([3, 5, 9], [(3, 5, 2), (5, 9), (3, 9, 3)])
    text = format_edge_list(g)
    assert text.splitlines()[0] == "3 3"
    assert is_isomorphic(parse_edge_list(text), g)


def test_edge_list_comments_and_blanks():
    text = "# dumbbell\n\n2 1\n0 1 3\n"
    assert parse_edge_list(text) == dumbbell()


@pytest.mark.parametrize("text,line", [
    ("2 1\n0 1\n", 2),
    ("2 1\na b 1\n", 2),
    ("2 1\n0 5 1\n", 2),
    ("2 1\n0 0 1\n", 2),
    ("2 1\n0 1 0\n", 2),
    ("3 2\n0 1 1\n1 0 1\n", 3),
    ("x y\n", 1),
])
def test_edge_list_errors_carry_line(text, line):
    with pytest.raises(FormatError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_edge_list_count_mismatch():
    with pytest.raises(FormatError):
        parse_edge_list("3 3\n0 1 1\n")
    with pytest.raises(FormatError):
        parse_edge_list("")


def test_graph6_roundtrip():
    for g in (complete(4), petersen()):
        s = format_graph6(g)
        assert "\n" not in s
        assert is_isomorphic(parse_graph6(s), g)
    assert format_graph6(complete(4)) == "C~"
    with pytest.raises(ArgumentError):
        format_graph6(dumbbell())
    with pytest.raises(FormatError):
        parse_graph6("\x7f\x7f")


def test_read_graph_sniffing():
    assert read_graph("2 1\n0 1 3\n") == dumbbell()
    assert is_isomorphic(read_graph("C~\n"), complete(4))
    assert is_isomorphic(read_graph(">>graph6<<C~\n"), complete(4))
    assert is_isomorphic(read_graph("C~", "graph6"), complete(4))
    with pytest.raises(ArgumentError):
        read_graph("C~", "sparse6")


def test_dot_repeats_parallel_edges():
    text = format_dot(dumbbell())
    assert text.count("0 -- 1;") == 3 and text.startswith("graph G {")


@given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(1, 4)), max_size=15))
@settings(max_examples=150, deadline=None)
def test_edge_list_roundtrip_property(items):
    edges = [(u, v, r) for u, v, r in items if u != v]
    g = Multigraph(range(7), edges)
    h = parse_edge_list(format_edge_list(g))
    assert h == g
