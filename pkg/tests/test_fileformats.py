import random

import pytest
from hypothesis import given, settings, strategies as st

from algequiv.constraints import PatternMatrixConstraint, build_correlation, build_minor, build_partial_correlation
from algequiv.errors import DuplicateEdge, ParseError, SelfLoop, UnknownNode
from algequiv.fileformats import format_constraint, format_graph, parse_constraint, parse_graph
from algequiv.graph import MixedGraph, classify

from conftest import random_admg


def test_two_node_graph():
    g = parse_graph("nodes: a b\na -> b")
    assert g.n == 2 and g.directed == {(0, 1)} and not g.bidirected


def test_self_loop():
    with pytest.raises(SelfLoop) as exc:
        parse_graph("nodes: a\na -> a")
    assert exc.value.line == 2


def test_confounded_chain_text():
    g = parse_graph("nodes: a b c d e\na -> b\nb -> c\nc -> d\na <-> c\na <-> d")
    assert classify(g).is_bap


def test_comments_and_blank_lines():
    text = "# header\n\nnodes: x1 y_2   # trailing\n\nx1 <-> y_2\n   # only a comment\n"
    g = parse_graph(text)
    assert g.names == ("x1", "y_2") and g.bidirected == {(0, 1)}


@pytest.mark.parametrize(
    "text,exc,line",
    [
        ("", ParseError, None),
        ("a -> b", ParseError, 1),
        ("nodes:", ParseError, 1),
        ("nodes: a a", ParseError, 1),
        ("nodes: a-b", ParseError, 1),
        ("nodes: a b\na => b", ParseError, 2),
        ("nodes: a b\na -> c", UnknownNode, 2),
        ("nodes: a b\na -> b\n\na -> b", DuplicateEdge, 4),
        ("nodes: a b\na <-> b\nb <-> a", DuplicateEdge, 3),
    ],
)
def test_graph_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_graph(text)
    assert info.value.line == line
    if line is not None:
        assert str(info.value).startswith(f"line {line}:")


def test_both_directions_allowed_syntactically():
    # a 2-cycle parses; acyclicity is checked downstream
    g = parse_graph("nodes: a b\na -> b\nb -> a")
    assert not classify(g).acyclic


def test_round_trip_random():
    rng = random.Random(30)
    for _ in range(100):
        g = random_admg(rng.randint(1, 8), rng)
        text = format_graph(g)
        assert parse_graph(text) == g
        assert format_graph(parse_graph(text)) == text


@settings(max_examples=100, deadline=None)
@given(st.lists(st.from_regex(r"[A-Za-z0-9_]{1,6}", fullmatch=True), min_size=1, max_size=6, unique=True), st.data())
def test_round_trip_names(names, data):
    n = len(names)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    directed = data.draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    bidirected = data.draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    g = MixedGraph(n, frozenset(directed), frozenset(bidirected), tuple(names))
    assert parse_graph(format_graph(g)) == g


NAMES = ("a", "b", "c", "d", "e")


def test_constraint_forms():
    assert parse_constraint("corr a e", NAMES) == build_correlation(0, 4)
    assert parse_constraint("pcorr a b | c d", NAMES) == build_partial_correlation(0, 1, [2, 3])
    assert parse_constraint("pcorr a b |", NAMES) == build_partial_correlation(0, 1)
    assert parse_constraint("# gen\nminor a,b ; c,d\n", NAMES) == build_minor([0, 1], [2, 3])
    f = parse_constraint("pattern 2\na:a 0\nb:a b:c\n", NAMES)
    assert f == PatternMatrixConstraint((((0, 0), None), ((1, 0), (1, 2))))


@pytest.mark.parametrize(
    "text,exc",
    [
        ("", ParseError),
        ("corr a", ParseError),
        ("corr a z", UnknownNode),
        ("pcorr a b | a", ParseError),
        ("minor a,b ; c", ParseError),
        ("minor a,b", ParseError),
        ("pattern 2\na:a 0", ParseError),
        ("pattern 2\na:a 0\nb:b", ParseError),
        ("pattern 1\nab", ParseError),
        ("pattern 0", ParseError),
        ("corr a b\ncorr a c", ParseError),
        ("cov a b", ParseError),
    ],
)
def test_constraint_errors(text, exc):
    with pytest.raises(exc):
        parse_constraint(text, NAMES)


def test_constraint_round_trip():
    f = build_partial_correlation(0, 3, [1, 2])
    assert parse_constraint(format_constraint(f, NAMES), NAMES) == f
