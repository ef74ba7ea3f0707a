"""Interval models, and the two-way translation between colored layouts and
properly colored interval supergraphs.

Endpoints are stored in doubled units: the pair ``(a2, b2)`` is the closed
interval ``[a2/2, b2/2]``.  Half-integer endpoints are therefore exact and
every overlap test is integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graph import ColoredGraph, Edge, Layout, check_layout, is_colored_layout, normalize_edge
from .layout import solve_cvs


class ModelError(ValueError):
    """An interval model violating its invariants."""


class PreconditionError(ValueError):
    pass


def model_problems(n: int, intervals: Sequence[tuple[int, int]]) -> list[str]:
    out = []
    if len(intervals) != n:
        out.append(f"expected {n} intervals, got {len(intervals)}")
    lefts: dict[int, int] = {}
    for v, (a2, b2) in enumerate(intervals):
        if a2 >= b2:
            out.append(f"vertex {v}: left endpoint {a2} not below right endpoint {b2}")
        if a2 in lefts:
            out.append(f"vertices {lefts[a2]} and {v} share left endpoint {a2}")
        lefts.setdefault(a2, v)
    return out


@dataclass(frozen=True)
class IntervalModel:
    """One closed interval per vertex, ``intervals[v] == (a2, b2)``.

    Left endpoints must be pairwise distinct.  Models with tied left
    endpoints are rejected rather than perturbed, since moving an endpoint can
    change which intervals overlap; shift one endpoint into a free gap by hand
    if you need to load such a model.
    """

    n: int
    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        bad = model_problems(self.n, self.intervals)
        if bad:
            raise ModelError("; ".join(bad))

    def interval(self, v: int) -> tuple[float, float]:
        """Endpoints of ``v`` in natural units."""
        a2, b2 = self.intervals[v]
        return a2 / 2, b2 / 2


@dataclass(frozen=True)
class IcgCertificate:
    added_edges: frozenset[Edge]
    model: IntervalModel


@dataclass(frozen=True)
class VerificationReport:
    covers_edges: bool
    exact_edge_set: bool
    properly_colored: bool
    model_ok: bool
    details: tuple[str, ...] = field(default=(), compare=False)

    @property
    def valid(self) -> bool:
        return self.covers_edges and self.exact_edge_set and self.properly_colored and self.model_ok

    def lines(self) -> list[str]:
        def word(flag):
            return "ok" if flag else "FAIL"
        return [
            f"covers_edges {word(self.covers_edges)}",
            f"exact_edge_set {word(self.exact_edge_set)}",
            f"properly_colored {word(self.properly_colored)}",
            f"model_ok {word(self.model_ok)}",
            f"valid {'yes' if self.valid else 'no'}",
        ]


def layout_to_intervals(g: ColoredGraph, layout: Sequence[int]) -> IntervalModel:
    """Interval model of a colored layout.

    The vertex at 1-based position ``i`` gets ``[i, m + 0.5]`` where ``m`` is
    the last position holding ``i`` itself or one of its neighbors; in doubled
    units ``(2i, 2m + 1)``.  The overlap graph of the result contains ``g``
    and joins only differently colored vertices.
    """
    layout = check_layout(g, layout)
    if not is_colored_layout(g, layout):
        raise PreconditionError(f"{list(layout)} is not a colored layout")
    pos = {v: i + 1 for i, v in enumerate(layout)}
    last = dict(pos)
    for u, v in g.edges:
        last[u] = max(last[u], pos[v])
        last[v] = max(last[v], pos[u])
    return IntervalModel(g.n, tuple((2 * pos[v], 2 * last[v] + 1) for v in range(g.n)))


def model_to_graph(m: IntervalModel) -> frozenset[Edge]:
    """Edges between vertices whose closed intervals intersect."""
    order = sorted(range(m.n), key=lambda v: m.intervals[v][0])
    edges = set()
    for i, u in enumerate(order):
        bu = m.intervals[u][1]
        for v in order[i + 1:]:
            if m.intervals[v][0] > bu:
                break
            edges.add(normalize_edge(u, v))
    return frozenset(edges)


def intervals_to_layout(m: IntervalModel) -> Layout:
    """Vertices listed by increasing left endpoint."""
    lefts = [a2 for a2, _ in m.intervals]
    if len(set(lefts)) != len(lefts):
        raise ModelError("duplicate left endpoints")
    return tuple(sorted(range(m.n), key=lefts.__getitem__))


def verify_certificate(g: ColoredGraph, cert: IcgCertificate) -> VerificationReport:
    """Check a certificate against ``g`` clause by clause.

    The four checks are independent: the overlap graph contains ``g``; it
    equals ``g`` plus the claimed added edges; it joins only differently
    colored vertices; the model satisfies its own invariants.
    """
    m = cert.model
    if m.n != g.n:
        raise ValueError(f"model has {m.n} vertices, graph has {g.n}")
    details = []
    model_bad = model_problems(m.n, m.intervals)
    details += model_bad
    overlap = model_to_graph(m)
    missing = g.edges - overlap
    for e in sorted(missing):
        details.append(f"edge {e} not realized by the model")
    claimed = g.edges | {normalize_edge(u, v) for u, v in cert.added_edges}
    exact = overlap == claimed
    if not exact:
        for e in sorted(overlap - claimed):
            details.append(f"overlap {e} not declared")
        for e in sorted(claimed - overlap):
            details.append(f"declared edge {e} not realized")
    mono = sorted(e for e in overlap if g.color[e[0]] == g.color[e[1]])
    for e in mono:
        details.append(f"edge {e} joins two vertices of color {g.color[e[0]]}")
    return VerificationReport(not missing, exact, not mono, not model_bad, tuple(details))


def certificate_from_layout(g: ColoredGraph, layout: Sequence[int]) -> IcgCertificate:
    model = layout_to_intervals(g, layout)
    return IcgCertificate(model_to_graph(model) - g.edges, model)


def certificate_from_model(g: ColoredGraph, m: IntervalModel) -> IcgCertificate:
    """Certificate declaring every non-input overlap edge as added."""
    return IcgCertificate(model_to_graph(m) - g.edges, m)


def solve_icg(g: ColoredGraph) -> Optional[IcgCertificate]:
    """A properly colored interval supergraph of ``g``, or None if none exists."""
    res = solve_cvs(g)
    if not res.answer:
        return None
    cert = certificate_from_layout(g, res.witness)
    report = verify_certificate(g, cert)
    if not report.valid:
        raise RuntimeError("generated certificate failed verification: " + "; ".join(report.details))
    return cert
