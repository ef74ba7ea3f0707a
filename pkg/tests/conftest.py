import networkx as nx
import pytest

from glis import ColoredGraph

ACCEPTANCE_LINES = []


def graph(n, edges, colors=None, k=None):
    return ColoredGraph.build(n, edges, colors, k)


def path(n):
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n):
    return graph(n, [(0, i) for i in range(1, n)])


def atlas(max_n):
    """Every graph on 1..max_n vertices up to isomorphism, as edge lists."""
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 1 <= n <= max_n:
            out.append((n, sorted(tuple(sorted(e)) for e in h.edges())))
    return out


def colorings(n, k, edges):
    """Proper colorings with at most k colors, one per class of color renamings.

    Restricted growth strings: vertex v takes a color at most one above the
    largest color used by vertices 0..v-1.
    """
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    out = []

    def grow(prefix, top):
        v = len(prefix)
        if v == n:
            out.append(tuple(prefix))
            return
        for c in range(1, min(top + 1, k) + 1):
            if all(prefix[u] != c for u in adj[v] if u < v):
                grow(prefix + [c], max(top, c))

    grow([], 0)
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def p3():
    return graph(3, [(0, 1), (1, 2)], [1, 2, 1], k=2)
