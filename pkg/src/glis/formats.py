"""Line-oriented text formats.

Graph files (``.cg``)::

    p cvs <n> <m> <k>
    v <id> <color>        exactly n lines, each id once
    e <u> <v>             exactly m lines

Interval model files (``.ivm``), endpoints in doubled units::

    p ivm <n>
    i <id> <a2> <b2>

Layout files hold one line of space-separated vertex ids.  Lines starting
with ``#`` and blank lines are ignored everywhere.
"""
from __future__ import annotations

from typing import Iterator, Sequence

from .graph import ColoredGraph, GraphError, Layout
from .intervals import IntervalModel, model_problems


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _records(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(lineno, fields, count):
    if len(fields) != count:
        raise ParseError(lineno, f"expected {count} fields, got {len(fields)}")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(lineno, f"non-integer field in {' '.join(fields)!r}") from None


def parse_graph(text: str) -> ColoredGraph:
    header = None
    colors: dict[int, int] = {}
    edges: dict[tuple[int, int], int] = {}
    lineno = 0
    for lineno, rec in _records(text):
        tag, rest = rec[0], rec[1:]
        if tag == "p":
            if header is not None:
                raise ParseError(lineno, "second header line")
            if not rest or rest[0] != "cvs":
                raise ParseError(lineno, "header must read 'p cvs <n> <m> <k>'")
            n, m, k = _ints(lineno, rest[1:], 3)
            if n < 0 or m < 0 or k < 1:
                raise ParseError(lineno, f"bad header values n={n} m={m} k={k}")
            header = (n, m, k)
            continue
        if header is None:
            raise ParseError(lineno, "record before header")
        n, m, k = header
        if tag == "v":
            v, c = _ints(lineno, rest, 2)
            if not 0 <= v < n:
                raise ParseError(lineno, f"vertex id {v} out of range 0..{n - 1}")
            if v in colors:
                raise ParseError(lineno, f"vertex {v} listed twice")
            if not 1 <= c <= k:
                raise ParseError(lineno, f"color {c} outside 1..{k}")
            colors[v] = c
        elif tag == "e":
            u, v = _ints(lineno, rest, 2)
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u}")
            for x in (u, v):
                if not 0 <= x < n:
                    raise ParseError(lineno, f"vertex id {x} out of range 0..{n - 1}")
            e = (min(u, v), max(u, v))
            if e in edges:
                raise ParseError(lineno, f"duplicate edge {u} {v} (first on line {edges[e]})")
            edges[e] = lineno
        else:
            raise ParseError(lineno, f"unknown record type {tag!r}")
    if header is None:
        raise ParseError(lineno, "missing 'p cvs' header")
    n, m, k = header
    if len(colors) != n:
        raise ParseError(lineno, f"expected {n} vertex lines, got {len(colors)}")
    if len(edges) != m:
        raise ParseError(lineno, f"header announces {m} edges, found {len(edges)}")
    try:
        return ColoredGraph(n, frozenset(edges), k, tuple(colors[v] for v in range(n)))
    except GraphError as exc:
        raise ParseError(lineno, str(exc)) from None


def serialize_graph(g: ColoredGraph) -> str:
    lines = [f"p cvs {g.n} {len(g.edges)} {g.k}"]
    lines += [f"v {v} {c}" for v, c in enumerate(g.color)]
    lines += [f"e {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_model(text: str) -> IntervalModel:
    n = None
    spans: dict[int, tuple[int, int]] = {}
    owner: dict[int, int] = {}
    lineno = 0
    for lineno, rec in _records(text):
        tag, rest = rec[0], rec[1:]
        if tag == "p":
            if n is not None:
                raise ParseError(lineno, "second header line")
            if not rest or rest[0] != "ivm":
                raise ParseError(lineno, "header must read 'p ivm <n>'")
            (n,) = _ints(lineno, rest[1:], 1)
            if n < 0:
                raise ParseError(lineno, f"negative vertex count {n}")
            continue
        if n is None:
            raise ParseError(lineno, "record before header")
        if tag != "i":
            raise ParseError(lineno, f"unknown record type {tag!r}")
        v, a2, b2 = _ints(lineno, rest, 3)
        if not 0 <= v < n:
            raise ParseError(lineno, f"vertex id {v} out of range 0..{n - 1}")
        if v in spans:
            raise ParseError(lineno, f"vertex {v} listed twice")
        if a2 >= b2:
            kind = "zero-length interval" if a2 == b2 else "left endpoint above right endpoint"
            raise ParseError(lineno, f"{kind} for vertex {v}: {a2} {b2}")
        if a2 in owner:
            raise ParseError(lineno, f"left endpoint {a2} of vertex {v} duplicates vertex {owner[a2]}")
        owner[a2] = v
        spans[v] = (a2, b2)
    if n is None:
        raise ParseError(lineno, "missing 'p ivm' header")
    if len(spans) != n:
        raise ParseError(lineno, f"expected {n} interval lines, got {len(spans)}")
    intervals = tuple(spans[v] for v in range(n))
    bad = model_problems(n, intervals)
    if bad:
        raise ParseError(lineno, "; ".join(bad))
    return IntervalModel(n, intervals)


def serialize_model(m: IntervalModel) -> str:
    lines = [f"p ivm {m.n}"]
    lines += [f"i {v} {a2} {b2}" for v, (a2, b2) in enumerate(m.intervals)]
    return "\n".join(lines) + "\n"


def parse_layout(text: str) -> Layout:
    ids = []
    for lineno, rec in _records(text):
        if ids:
            raise ParseError(lineno, "layout must be a single line")
        ids = _ints(lineno, rec, len(rec))
    return tuple(ids)


def serialize_layout(layout: Sequence[int]) -> str:
    return " ".join(str(v) for v in layout) + "\n"
