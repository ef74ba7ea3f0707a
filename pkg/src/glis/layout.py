"""Exact vertex separation and colored vertex separation.

Both solvers search over placed-vertex sets rather than permutations.  The
search runs layer by layer (layer ``i`` holds sets of size ``i``), with each
layer kept as an ``int64`` array of bitmasks so transitions are vectorized.
A parent vertex is recorded for every reached set in a dense array indexed
by bitmask, which is enough to rebuild a witness layout by walking back from
the full set.  Memory is ``2**n`` bytes plus the largest layer.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np

from .graph import (
    EXACT_CAP,
    ColoredGraph,
    InstanceTooLarge,
    Layout,
    active_sets,
    check_layout,
    is_colored_layout,
    is_properly_colored,
    vs_of_layout,
)

MONOCHROMATIC_EDGE = "monochromatic-edge"
NO_COLORED_LAYOUT = "no-colored-layout"


class SolverError(RuntimeError):
    """An internal consistency check failed; this is a bug, not bad input."""


@dataclass(frozen=True)
class CvsResult:
    answer: bool
    witness: Optional[Layout] = None
    reason: Optional[str] = None

    def __bool__(self):
        return self.answer


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def problems(self, g: ColoredGraph) -> list[str]:
        """Violated path-decomposition conditions for ``g`` (empty when valid)."""
        out = []
        seen = set().union(*self.bags) if self.bags else set()
        missing = set(range(g.n)) - seen
        if missing:
            out.append(f"vertices in no bag: {sorted(missing)}")
        extra = seen - set(range(g.n))
        if extra:
            out.append(f"unknown vertices in bags: {sorted(extra)}")
        for u, v in sorted(g.edges):
            if not any(u in b and v in b for b in self.bags):
                out.append(f"edge ({u}, {v}) not covered by any bag")
        for v in sorted(seen):
            idx = [i for i, b in enumerate(self.bags) if v in b]
            if idx[-1] - idx[0] + 1 != len(idx):
                out.append(f"bags containing vertex {v} are not contiguous: {idx}")
        return out


class LayoutMetrics(NamedTuple):
    pathwidth: int
    node_search_number: int
    gate_matrix_cost: int


def _check_size(g: ColoredGraph) -> None:
    if g.n > EXACT_CAP:
        raise InstanceTooLarge(g.n, EXACT_CAP)


def _adjacency_array(g: ColoredGraph) -> np.ndarray:
    return np.array(g.adjacency, dtype=np.int64)


def _active_masks(states: np.ndarray, adj: np.ndarray, n: int) -> np.ndarray:
    """Active-set bitmask for every placed-set bitmask in ``states``."""
    full = np.int64((1 << n) - 1)
    outside = ~states & full
    act = np.zeros_like(states)
    for v in range(n):
        bit = np.int64(1 << v)
        hit = ((states & bit) != 0) & ((outside & adj[v]) != 0)
        act |= np.where(hit, bit, np.int64(0))
    return act


Expander = Callable[[np.ndarray], list[tuple[int, np.ndarray]]]


def _layered_search(n: int, expand: Expander) -> Optional[Layout]:
    """Reachability from the empty set to the full set, one vertex at a time.

    ``expand(states)`` returns, for each vertex ``v``, a boolean array marking
    which of ``states`` may be extended by ``v``.  Returns a layout whose
    prefixes are all reached sets, or None if the full set is unreachable.
    """
    # parent[T] is the vertex whose addition first reached T; -1 if unreached
    parent = np.full(1 << n, -1, dtype=np.int8)
    frontier = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        fresh = []
        # highest vertex first, so witnesses tend to come out in ascending order
        for v, ok in reversed(expand(frontier)):
            nxt = frontier[ok] | np.int64(1 << v)
            nxt = nxt[parent[nxt] < 0]
            parent[nxt] = v
            fresh.append(nxt)
        frontier = np.concatenate(fresh) if fresh else frontier[:0]
        if not len(frontier):
            return None
    order = []
    state = (1 << n) - 1
    while state:
        v = int(parent[state])
        if v < 0:
            raise SolverError("lost track of a reached state during reconstruction")
        order.append(v)
        state ^= 1 << v
    return tuple(reversed(order))


def _vs_at_most(g: ColoredGraph, width: int) -> Optional[Layout]:
    """A layout with vertex separation <= ``width``, or None."""
    n = g.n
    adj = _adjacency_array(g)

    def expand(states):
        out = []
        for v in range(n):
            bit = np.int64(1 << v)
            free = (states & bit) == 0
            nxt = states[free] | bit
            ok = np.zeros(len(states), dtype=bool)
            ok[free] = np.bitwise_count(_active_masks(nxt, adj, n)) <= width
            out.append((v, ok))
        return out

    return _layered_search(n, expand)


def exact_vs(g: ColoredGraph) -> tuple[int, Layout]:
    """Minimum vertex separation over all layouts, with a witness layout.

    Colors are ignored.  Tries widths 0, 1, 2, ... and stops at the first one
    for which the full vertex set is reachable through placed sets whose
    active sets never exceed that width; this is the same value as the
    subset recurrence ``cost(S) = min_v max(cost(S - v), |active(S)|)``.
    """
    _check_size(g)
    if g.n == 0:
        return 0, ()
    if not g.edges:
        return 0, tuple(range(g.n))
    for width in range(1, g.n):
        layout = _vs_at_most(g, width)
        if layout is not None:
            got = vs_of_layout(g, layout)
            if got > width:
                raise SolverError(f"witness has vs {got}, expected <= {width}")
            return width, layout
    raise SolverError("no layout found with width < n")


def solve_cvs(g: ColoredGraph) -> CvsResult:
    """Decide whether ``g`` has a colored layout.

    Sets are grown by vertices whose color does not appear in the current
    active set.  A graph with a monochromatic edge is rejected without
    searching.
    """
    _check_size(g)
    if not is_properly_colored(g):
        return CvsResult(False, reason=MONOCHROMATIC_EDGE)
    n = g.n
    if n == 0:
        return CvsResult(True, witness=())
    adj = _adjacency_array(g)
    # compact color ids so they fit in an int64 bitmask whatever k is
    slot = {c: i for i, c in enumerate(sorted(set(g.color)))}
    color = [slot[c] for c in g.color]

    def expand(states):
        act = _active_masks(states, adj, n)
        used = np.zeros_like(states)
        for u in range(n):
            used |= np.where((act >> u) & 1 == 1, np.int64(1 << color[u]), np.int64(0))
        out = []
        for v in range(n):
            free = (states >> v) & 1 == 0
            allowed = (used >> color[v]) & 1 == 0
            out.append((v, free & allowed))
        return out

    layout = _layered_search(n, expand)
    if layout is None:
        return CvsResult(False, reason=NO_COLORED_LAYOUT)
    if not is_colored_layout(g, layout):
        raise SolverError(f"witness {layout} is not a colored layout")
    vs = vs_of_layout(g, layout)
    if vs > g.k - 1:
        raise SolverError(f"colored layout with vs {vs} >= k={g.k}")
    return CvsResult(True, witness=layout)


def layout_to_path_decomposition(g: ColoredGraph, layout: Sequence[int]) -> PathDecomposition:
    """Bags ``V_{i-1} + {v_i}``: the active set before each vertex plus the vertex.

    The width equals ``vs_of_layout(g, layout)``.
    """
    layout = check_layout(g, layout)
    before = [frozenset()] + active_sets(g, layout)[:-1]
    pd = PathDecomposition(tuple(a | {v} for a, v in zip(before, layout)))
    bad = pd.problems(g)
    if bad:
        raise SolverError("; ".join(bad))
    return pd


def derived_metrics(vs_value: int) -> LayoutMetrics:
    """Layout costs that are fixed offsets of the vertex separation."""
    if vs_value < 0:
        raise ValueError(f"vertex separation must be >= 0, got {vs_value}")
    return LayoutMetrics(vs_value, vs_value + 1, vs_value + 1)
