"""Text formats for graphs and constraints.

Graph files::

    # comment
    nodes: a b c
    a -> b
    b <-> c

Constraint files hold one of ``corr v w``, ``pcorr v w | s1 s2 ...``,
``minor a,b ; c,d`` or ``pattern r`` followed by r rows of r cells, each
``0`` or ``v:w``.
"""

from __future__ import annotations

import re
from typing import Mapping, Sequence

from .constraints import (
    Constraint,
    PatternMatrixConstraint,
    build_correlation,
    build_minor,
    build_partial_correlation,
)
from .errors import DuplicateEdge, ParseError, SelfLoop, UnknownNode
from .graph import MixedGraph

__all__ = ["parse_graph", "format_graph", "parse_constraint", "format_constraint"]

_NAME = re.compile(r"[A-Za-z0-9_]+\Z")
_EDGE = re.compile(r"(\S+)\s*(<->|->)\s*(\S+)\Z")


def _content_lines(text: str):
    """(line number, stripped content) for every non-blank line, comments removed."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text: str) -> MixedGraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'nodes:' line") from None
    if not header.startswith("nodes:"):
        raise ParseError("first line must be 'nodes: <name> ...'", lineno)
    names = header[len("nodes:"):].split()
    if not names:
        raise ParseError("no node names given", lineno)
    for name in names:
        if not _NAME.match(name):
            raise ParseError(f"invalid node name {name!r}", lineno)
    if len(set(names)) != len(names):
        raise ParseError("node names must be unique", lineno)
    index = {name: i for i, name in enumerate(names)}

    directed, bidirected = set(), set()
    for lineno, line in lines:
        m = _EDGE.match(line)
        if not m:
            raise ParseError(f"expected 'X -> Y' or 'X <-> Y', got {line!r}", lineno)
        x, arrow, y = m.groups()
        for name in (x, y):
            if name not in index:
                raise UnknownNode(f"unknown node {name!r}", lineno)
        if x == y:
            raise SelfLoop(f"self-loop at {x}", lineno)
        u, v = index[x], index[y]
        if arrow == "->":
            edge, bucket = (u, v), directed
        else:
            edge, bucket = (min(u, v), max(u, v)), bidirected
        if edge in bucket:
            raise DuplicateEdge(f"duplicate edge {x} {arrow} {y}", lineno)
        bucket.add(edge)
    return MixedGraph(len(names), frozenset(directed), frozenset(bidirected), tuple(names))


def format_graph(g: MixedGraph) -> str:
    """Canonical text: node line, then directed and bidirected edges in index order."""
    nm = g.names
    out = ["nodes: " + " ".join(nm)]
    out += [f"{nm[t]} -> {nm[h]}" for t, h in sorted(g.directed)]
    out += [f"{nm[a]} <-> {nm[b]}" for a, b in sorted(g.bidirected)]
    return "\n".join(out) + "\n"


def _lookup(index: Mapping[str, int], name: str, lineno: int) -> int:
    if name not in index:
        raise UnknownNode(f"unknown node {name!r}", lineno)
    return index[name]


def parse_constraint(text: str, names: Sequence[str]) -> Constraint:
    """Parse a constraint file against the node names of a graph."""
    index = {name: i for i, name in enumerate(names)}
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty constraint file")
    lineno, head = lines[0]
    words = head.split()
    kind = words[0]

    def nodes(tokens):
        return [_lookup(index, t, lineno) for t in tokens]

    if kind == "corr":
        if len(words) != 3:
            raise ParseError("expected 'corr v w'", lineno)
        c = build_correlation(*nodes(words[1:]))
        rest = lines[1:]
    elif kind == "pcorr":
        body = head[len("pcorr"):]
        left, _, right = body.partition("|")
        pair = left.split()
        if len(pair) != 2:
            raise ParseError("expected 'pcorr v w | s1 s2 ...'", lineno)
        v, w = nodes(pair)
        try:
            c = build_partial_correlation(v, w, nodes(right.split()))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        rest = lines[1:]
    elif kind == "minor":
        body = head[len("minor"):]
        parts = body.split(";")
        if len(parts) != 2:
            raise ParseError("expected 'minor a,b ; c,d'", lineno)
        rows, cols = ([t.strip() for t in part.split(",") if t.strip()] for part in parts)
        if not rows or len(rows) != len(cols):
            raise ParseError("minor needs two non-empty index lists of equal length", lineno)
        c = build_minor(nodes(rows), nodes(cols))
        rest = lines[1:]
    elif kind == "pattern":
        if len(words) != 2 or not words[1].isdigit() or int(words[1]) < 1:
            raise ParseError("expected 'pattern r' with r >= 1", lineno)
        r = int(words[1])
        if len(lines) < r + 1:
            raise ParseError(f"pattern needs {r} rows, found {len(lines) - 1}", lineno)
        grid = []
        for rl, row in lines[1:r + 1]:
            cells = row.split()
            if len(cells) != r:
                raise ParseError(f"expected {r} cells, got {len(cells)}", rl)
            parsed = []
            for cell in cells:
                if cell == "0":
                    parsed.append(None)
                    continue
                v, sep, w = cell.partition(":")
                if not sep:
                    raise ParseError(f"cell must be '0' or 'v:w', got {cell!r}", rl)
                parsed.append((_lookup(index, v, rl), _lookup(index, w, rl)))
            grid.append(tuple(parsed))
        c = PatternMatrixConstraint(tuple(grid))
        rest = lines[r + 1:]
    else:
        raise ParseError(f"unknown constraint kind {kind!r}", lineno)
    if rest:
        raise ParseError("unexpected trailing content", rest[0][0])
    return c


def format_constraint(c: PatternMatrixConstraint, names: Sequence[str]) -> str:
    """Write any pattern constraint in the general ``pattern r`` form."""
    out = [f"pattern {c.size}"]
    for row in c.cells:
        out.append(" ".join("0" if cell is None else f"{names[cell[0]]}:{names[cell[1]]}" for cell in row))
    return "\n".join(out) + "\n"
