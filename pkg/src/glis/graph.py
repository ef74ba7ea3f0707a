"""Colored graphs, layouts and active sets.

Vertices are the integers ``0..n-1``.  A layout is a tuple listing every
vertex exactly once; position ``i`` in the tuple (0-based) corresponds to the
1-based position ``i + 1`` in the usual mathematical notation.  Colors
are integers in ``1..k``.

For a placed set ``S`` of vertices, the active set is the set of placed
vertices that still have a neighbor outside ``S``.  It is a function of the
set alone, not of the order in which ``S`` was placed, which is what lets the
exact solvers work over subsets instead of permutations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]
Layout = tuple[int, ...]

#: Largest vertex count accepted by the exact (subset-based) solvers.
EXACT_CAP = 26


class GraphError(ValueError):
    """Malformed graph data."""


class LayoutError(ValueError):
    """A sequence that is not a permutation of the graph's vertices."""


class InstanceTooLarge(ValueError):
    """Instance too large for exact mode."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"instance too large for exact mode: n={n} > {cap}")
        self.n = n
        self.cap = cap


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ColoredGraph:
    """Undirected simple graph with a vertex coloring from a palette of size ``k``.

    ``color[v]`` is the color of vertex ``v``.  Palette colors that no vertex
    uses are allowed; ``k`` is the palette size, not the number of used colors.
    """

    n: int
    edges: frozenset[Edge]
    k: int
    color: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if self.k < 1:
            raise GraphError(f"palette size must be >= 1, got {self.k}")
        if len(self.color) != self.n:
            raise GraphError(f"expected {self.n} colors, got {len(self.color)}")
        for v, c in enumerate(self.color):
            if not 1 <= c <= self.k:
                raise GraphError(f"color {c} of vertex {v} outside 1..{self.k}")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) is not normalized")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")

    @classmethod
    def build(cls, n: int, edges: Iterable[Sequence[int]], colors: Sequence[int] | None = None,
              k: int | None = None) -> "ColoredGraph":
        """Convenience constructor.

        Edges may be given in any orientation; duplicates are rejected.
        Without ``colors`` every vertex gets color 1.  ``k`` defaults to the
        largest color used (at least 1).
        """
        norm = set()
        for u, v in edges:
            e = normalize_edge(int(u), int(v))
            if e in norm:
                raise GraphError(f"duplicate edge {e}")
            norm.add(e)
        color = tuple(int(c) for c in colors) if colors is not None else (1,) * n
        if k is None:
            k = max(color, default=1)
        return cls(n, frozenset(norm), k, color)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as a bitmask."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(members(self.adjacency[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "ColoredGraph":
        """Same vertices and colors, edge set extended by ``extra``."""
        edges = set(self.edges)
        edges.update(normalize_edge(u, v) for u, v in extra)
        return ColoredGraph(self.n, frozenset(edges), self.k, self.color)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex id {v} out of range 0..{self.n - 1}")


def members(mask: int) -> list[int]:
    """Vertex ids of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def is_properly_colored(g: ColoredGraph) -> bool:
    """True iff no edge joins two vertices of the same color."""
    return all(g.color[u] != g.color[v] for u, v in g.edges)


def active_mask(g: ColoredGraph, placed: int) -> int:
    """Bitmask form of :func:`active_set`; ``placed`` is a bitmask."""
    outside = g.full_mask & ~placed
    act = 0
    rest = placed
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        if g.adjacency[v] & outside:
            act |= low
        rest ^= low
    return act


def active_set(g: ColoredGraph, placed: Iterable[int]) -> frozenset[int]:
    """Placed vertices having at least one neighbor outside ``placed``."""
    placed = set(placed)
    for v in placed:
        g._check_vertex(v)
    return frozenset(members(active_mask(g, to_mask(placed))))


def colors_of(g: ColoredGraph, vertices: Iterable[int]) -> frozenset[int]:
    return frozenset(g.color[v] for v in vertices)


def check_layout(g: ColoredGraph, order: Sequence[int]) -> Layout:
    """Return ``order`` as a tuple, raising :class:`LayoutError` unless it is a
    permutation of ``0..n-1``."""
    layout = tuple(int(v) for v in order)
    if len(layout) != g.n or sorted(layout) != list(range(g.n)):
        raise LayoutError(f"not a permutation of the {g.n} vertices: {list(layout)}")
    return layout


def active_sets(g: ColoredGraph, layout: Sequence[int]) -> list[frozenset[int]]:
    """The active set after each prefix of ``layout`` (prefix lengths 1..n)."""
    layout = check_layout(g, layout)
    out = []
    placed = 0
    for v in layout:
        placed |= 1 << v
        out.append(frozenset(members(active_mask(g, placed))))
    return out


def vs_of_layout(g: ColoredGraph, layout: Sequence[int]) -> int:
    """Vertex separation of ``g`` with respect to ``layout``.

    The maximum active-set size over all prefixes; 0 for edgeless graphs.
    """
    layout = check_layout(g, layout)
    # Incremental: a vertex enters the active set when placed (if it has a
    # later neighbor) and leaves once its last neighbor is placed.
    pos = {v: i for i, v in enumerate(layout)}
    last = [pos[v] for v in range(g.n)]
    for u, v in g.edges:
        last[u] = max(last[u], pos[v])
        last[v] = max(last[v], pos[u])
    best = size = 0
    leaving = [0] * g.n
    for i, v in enumerate(layout):
        if last[v] > i:
            size += 1
            leaving[last[v]] += 1
        size -= leaving[i]
        best = max(best, size)
    return best


def is_colored_layout(g: ColoredGraph, layout: Sequence[int]) -> bool:
    """True iff each vertex's color is absent from the colors of the active set
    of the prefix before it.  Vacuously true for ``n <= 1``."""
    layout = check_layout(g, layout)
    placed = 0
    for v in layout:
        act = active_mask(g, placed)
        if any(g.color[u] == g.color[v] for u in members(act)):
            return False
        placed |= 1 << v
    return True
