import pytest

from injhom.fileformat import (
    EdgeListError,
    format_edge_list,
    format_undirected_edge_list,
    parse_edge_list,
    parse_undirected_edge_list,
)
from injhom.graphs import OrientedGraph, directed_cycle


def test_roundtrip_plain():
    g = directed_cycle(5)
    again = parse_edge_list(format_edge_list(g))
    assert again.n == g.n and again.arcs == g.arcs and not again.reflexive


def test_roundtrip_reflexive():
    g = OrientedGraph(3, [(0, 1), (1, 2)], reflexive=True)
    text = format_edge_list(g)
    assert "3 2 reflexive" in text
    again = parse_edge_list(text)
    assert again.reflexive and again.arcs == g.arcs


def test_comments_and_blanks_ignored():
    text = """
# a description
# another line

3 2

0 1
# interleaved comment
1 2
"""
    g = parse_edge_list(text)
    assert g.n == 3 and g.arcs == frozenset({(0, 1), (1, 2)})


def test_format_includes_comments():
    text = format_edge_list(directed_cycle(3), comments=["hello", ""])
    lines = text.splitlines()
    assert lines[0] == "# hello"
    assert lines[1] == "#"


def test_error_line_numbers():
    with pytest.raises(EdgeListError) as exc:
        parse_edge_list("2 1\n0 2\n")
    assert exc.value.lineno == 2
    assert "line 2" in str(exc.value)

    with pytest.raises(EdgeListError) as exc:
        parse_edge_list("# comment\nnot a header\n")
    assert exc.value.lineno == 2


def test_error_kinds():
    with pytest.raises(EdgeListError):
        parse_edge_list("")
    with pytest.raises(EdgeListError):
        parse_edge_list("2 1\n0 0\n")  # loop
    with pytest.raises(EdgeListError):
        parse_edge_list("2 2\n0 1\n1 0\n")  # digon
    with pytest.raises(EdgeListError):
        parse_edge_list("2 2\n0 1\n0 1\n")  # duplicate
    with pytest.raises(EdgeListError):
        parse_edge_list("2 2\n0 1\n")  # missing arcs
    with pytest.raises(EdgeListError):
        parse_edge_list("2 1\n0 1\n1 0\n")  # extra data
    with pytest.raises(EdgeListError):
        parse_edge_list("2 x\n")  # bad counts
    with pytest.raises(EdgeListError):
        parse_edge_list("-1 0\n")


def test_undirected_roundtrip():
    edges = {(0, 1), (1, 2), (0, 2)}
    text = format_undirected_edge_list(3, edges)
    n, got = parse_undirected_edge_list(text)
    assert n == 3 and got == frozenset(edges)


def test_undirected_rejects_reflexive_flag():
    with pytest.raises(EdgeListError):
        parse_undirected_edge_list("2 1 reflexive\n0 1\n")


def test_undirected_normalizes_orientation():
    n, edges = parse_undirected_edge_list("3 2\n2 0\n1 0\n")
    assert edges == frozenset({(0, 2), (0, 1)})
    with pytest.raises(EdgeListError):
        parse_undirected_edge_list("3 2\n0 1\n1 0\n")  # same edge twice
