"""Slow reference answers by enumeration, for cross-checking the solvers.

Nothing here uses the subset search or the interval construction; the only
shared code is the definitional ``vs_of_layout`` / ``is_colored_layout``
predicates and the graph type.  Enumeration is in lexicographic order of
vertex ids, so results are deterministic.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

from .graph import ColoredGraph, Layout, is_colored_layout, vs_of_layout

VS_CAP = 9
CVS_CAP = 9
INTERVAL_CAP = 8
ICG_CAP = 6


class OracleCapExceeded(ValueError):
    pass


def _cap(n, cap, name):
    if n > cap:
        raise OracleCapExceeded(f"{name} enumerates at most {cap} vertices, got {n}")


def _prefix_active(nbrs, prefix):
    placed = set(prefix)
    return [u for u in prefix if nbrs[u] - placed]


def brute_vs(g: ColoredGraph) -> int:
    """Minimum of ``vs_of_layout`` over all permutations.

    Permutations are grown prefix by prefix; a prefix is abandoned once an
    active set already reaches the best full layout found, since every
    completion would score at least that much.
    """
    _cap(g.n, VS_CAP, "brute_vs")
    if g.n == 0:
        return 0
    nbrs = [set() for _ in range(g.n)]
    for u, v in g.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    best = g.n

    def extend(prefix, worst):
        nonlocal best
        if len(prefix) == g.n:
            assert vs_of_layout(g, prefix) == worst
            best = min(best, worst)
            return
        for v in range(g.n):
            if v in prefix:
                continue
            nxt = prefix + [v]
            w = max(worst, len(_prefix_active(nbrs, nxt)))
            if w < best:
                extend(nxt, w)

    extend([], 0)
    return best


def brute_cvs(g: ColoredGraph) -> Optional[Layout]:
    """First colored layout in lexicographic order, or None.

    Whether the next vertex is allowed depends only on the prefix before it,
    so a prefix that already breaks the rule is skipped along with all its
    completions.
    """
    _cap(g.n, CVS_CAP, "brute_cvs")
    nbrs = [set() for _ in range(g.n)]
    for u, v in g.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)

    def extend(prefix):
        if len(prefix) == g.n:
            return tuple(prefix)
        blocked = {g.color[u] for u in _prefix_active(nbrs, prefix)}
        for v in range(g.n):
            if v not in prefix and g.color[v] not in blocked:
                found = extend(prefix + [v])
                if found is not None:
                    return found
        return None

    found = extend([])
    if found is not None:
        assert is_colored_layout(g, found)
    return found


def brute_is_interval(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    """Interval-graph test by search over vertex orderings.

    A graph is an interval graph iff its vertices can be ordered so that for
    positions ``i < j < l``, an edge ``(v_i, v_l)`` forces the edge
    ``(v_j, v_l)``.  Equivalently, when a vertex is appended, its neighbors
    among the earlier vertices form a suffix of the ordering so far.
    """
    _cap(n, INTERVAL_CAP, "brute_is_interval")
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)

    def extend(order):
        if len(order) == n:
            return True
        for w in range(n):
            if w in order:
                continue
            earlier = sum(1 for u in order if u in nbrs[w])
            if all(u in nbrs[w] for u in order[len(order) - earlier:]):
                if extend(order + [w]):
                    return True
        return False

    return extend([])


def brute_icg(g: ColoredGraph) -> bool:
    """Is there a set of differently colored non-edges whose addition makes
    ``g`` an interval graph?  Tries every subset of the candidates."""
    _cap(g.n, ICG_CAP, "brute_icg")
    if any(g.color[u] == g.color[v] for u, v in g.edges):
        return False
    candidates = [(u, v) for u, v in combinations(range(g.n), 2)
                  if (u, v) not in g.edges and g.color[u] != g.color[v]]
    base = list(g.edges)
    for r in range(len(candidates) + 1):
        for extra in combinations(candidates, r):
            if brute_is_interval(g.n, base + list(extra)):
                return True
    return False
