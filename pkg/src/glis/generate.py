"""Seeded instance generators.

All randomness comes from :class:`random.Random` (Mersenne Twister) and
only through its ``random()`` method, whose output for a given integer seed
is guaranteed stable across Python versions and platforms.  Integer draws
are derived from it here rather than through ``randrange``, whose algorithm
is not covered by that guarantee.
"""
from __future__ import annotations

import random
import warnings

from .graph import ColoredGraph
from .intervals import IntervalModel, model_to_graph


def _below(rng: random.Random, m: int) -> int:
    return min(int(rng.random() * m), m - 1)


def _shuffled(rng: random.Random, items: list) -> list:
    items = list(items)
    for i in range(len(items) - 1, 0, -1):
        j = _below(rng, i + 1)
        items[i], items[j] = items[j], items[i]
    return items


def _clamp_prob(name, p):
    if not 0.0 <= p <= 1.0:
        clamped = min(max(p, 0.0), 1.0)
        warnings.warn(f"{name}={p} clamped to {clamped}", stacklevel=3)
        return clamped
    return p


def _clamp_min(name, value, low):
    if value < low:
        warnings.warn(f"{name}={value} clamped to {low}", stacklevel=3)
        return low
    return value


def planted_model(n: int, k: int, rng: random.Random) -> IntervalModel:
    """Random interval model in which no point lies in more than ``k`` intervals.

    Left endpoints are ``0, 2, 4, ...`` in doubled units, assigned to
    vertices in random order; right endpoints are random.  Sweeping left to
    right, whenever a new interval would make ``k + 1`` overlap at its left
    endpoint, the earlier interval reaching furthest right is cut short just
    before it.  Depth only ever peaks at a left endpoint, so checking there is
    enough.
    """
    vertices = _shuffled(rng, range(n))
    spans = {}
    live = []  # vertices whose interval reaches the current left endpoint
    for i, v in enumerate(vertices):
        a2 = 2 * i
        live = [u for u in live if spans[u][1] >= a2]
        while len(live) >= k:
            u = max(live, key=lambda x: (spans[x][1], x))
            spans[u] = (spans[u][0], a2 - 1)
            live.remove(u)
        spans[v] = (a2, a2 + 1 + 2 * _below(rng, max(1, n // 2 + 1)))
        live.append(v)
    return IntervalModel(n, tuple(spans[v] for v in range(n)))


def greedy_interval_coloring(m: IntervalModel) -> tuple[int, ...]:
    """Lowest color not held by an interval covering the current left endpoint."""
    order = sorted(range(m.n), key=lambda v: m.intervals[v][0])
    color = [0] * m.n
    for i, v in enumerate(order):
        a2 = m.intervals[v][0]
        taken = {color[u] for u in order[:i] if m.intervals[u][1] >= a2}
        c = 1
        while c in taken:
            c += 1
        color[v] = c
    return tuple(color)


def gen_yes_instance(n: int, k: int, keep_prob: float, seed: int) -> ColoredGraph:
    """A k-colored graph that has a properly colored interval supergraph.

    Built from a planted interval model of depth at most ``k``, colored
    greedily along the line, with each overlap edge then kept independently
    with probability ``keep_prob``.
    """
    n = _clamp_min("n", n, 1)
    k = _clamp_min("k", k, 1)
    keep_prob = _clamp_prob("keep_prob", keep_prob)
    rng = random.Random(seed)
    model = planted_model(n, k, rng)
    color = greedy_interval_coloring(model)
    edges = frozenset(e for e in sorted(model_to_graph(model)) if rng.random() < keep_prob)
    return ColoredGraph(n, edges, k, color)


def gen_random(n: int, k: int, p: float, seed: int, distinct_colors: bool = False) -> ColoredGraph:
    """Erdos-Renyi style graph with uniform random colors from ``1..k``.

    With ``distinct_colors`` every vertex gets its own color (``k`` is raised
    to ``n`` if needed), so the graph is properly colored whatever ``p`` is.
    """
    n = _clamp_min("n", n, 0)
    k = _clamp_min("k", k, 1)
    p = _clamp_prob("p", p)
    rng = random.Random(seed)
    if distinct_colors:
        k = max(k, n)
        color = tuple(_shuffled(rng, range(1, n + 1)))
    else:
        color = tuple(1 + _below(rng, k) for _ in range(n))
    edges = frozenset((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p)
    return ColoredGraph(n, edges, k, color)
