import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glis import (
    ColoredGraph,
    GraphError,
    LayoutError,
    active_set,
    active_sets,
    is_colored_layout,
    is_properly_colored,
    vs_of_layout,
)
from glis.graph import members, to_mask

from conftest import complete, graph


@st.composite
def colored_graphs(draw, max_n=7, max_k=4):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    colors = draw(st.lists(st.integers(1, k), min_size=n, max_size=n))
    return ColoredGraph.build(n, edges, colors, k)


class TestColoredGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            graph(2, [(1, 1)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(GraphError):
            graph(2, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            graph(2, [(0, 2)])

    def test_rejects_color_outside_palette(self):
        with pytest.raises(GraphError):
            graph(2, [], [1, 3], k=2)
        with pytest.raises(GraphError):
            graph(2, [], [0, 1], k=2)

    def test_unused_palette_colors_allowed(self):
        g = graph(2, [(0, 1)], [1, 2], k=5)
        assert g.k == 5

    def test_empty_graph(self):
        g = ColoredGraph(0, frozenset(), 1, ())
        assert g.full_mask == 0

    def test_adjacency(self, p3):
        assert p3.adjacency == (0b010, 0b101, 0b010)
        assert p3.neighbors(1) == {0, 2}


def test_mask_helpers():
    assert members(0b10110) == [1, 2, 4]
    assert to_mask([1, 2, 4]) == 0b10110


@pytest.mark.parametrize("colors, expected", [
    ((1, 2), True),
    ((1, 1), False),
])
def test_properly_colored_edge(colors, expected):
    assert is_properly_colored(graph(2, [(0, 1)], colors)) is expected


def test_properly_colored_triangle():
    assert is_properly_colored(graph(3, [(0, 1), (1, 2), (0, 2)], [1, 2, 3]))


class TestActiveSet:
    def test_path_prefixes(self, p3):
        assert active_set(p3, {0}) == {0}
        assert active_set(p3, {0, 1}) == {1}
        assert active_set(p3, {0, 1, 2}) == frozenset()

    def test_out_of_range(self, p3):
        with pytest.raises(GraphError):
            active_set(p3, {3})

    def test_members_have_outside_neighbor(self, p3):
        for placed in [{1}, {0, 2}, {2}]:
            act = active_set(p3, placed)
            assert act <= placed
            for v in act:
                assert p3.neighbors(v) - placed

    @settings(max_examples=60, deadline=None)
    @given(colored_graphs(), st.data())
    def test_order_independent(self, g, data):
        order = data.draw(st.permutations(range(g.n)))
        cut = data.draw(st.integers(0, g.n))
        prefix = list(order[:cut])
        shuffled = data.draw(st.permutations(prefix)) if prefix else []
        assert active_set(g, prefix) == active_set(g, shuffled)


class TestVsOfLayout:
    def test_single_vertex(self):
        assert vs_of_layout(graph(1, []), (0,)) == 0

    def test_path(self, p3):
        assert vs_of_layout(p3, (0, 1, 2)) == 1

    def test_triangle_every_layout(self):
        # all 6 layouts of K3 have separation 2 (checked by enumeration)
        k3 = complete(3)
        assert {vs_of_layout(k3, p) for p in itertools.permutations(range(3))} == {2}

    def test_edgeless(self):
        assert vs_of_layout(graph(4, []), (3, 1, 0, 2)) == 0

    def test_not_a_permutation(self, p3):
        for bad in [(0, 1), (0, 1, 1), (0, 1, 3)]:
            with pytest.raises(LayoutError):
                vs_of_layout(p3, bad)

    @settings(max_examples=80, deadline=None)
    @given(colored_graphs(), st.data())
    def test_incremental_matches_from_scratch(self, g, data):
        layout = data.draw(st.permutations(range(g.n)))
        scratch = max((len(a) for a in active_sets(g, layout)), default=0)
        assert vs_of_layout(g, layout) == scratch


class TestColoredLayout:
    def test_path_alternating(self, p3):
        assert is_colored_layout(p3, (0, 1, 2))

    def test_monochromatic_edge(self):
        assert not is_colored_layout(graph(2, [(0, 1)], [1, 1]), (0, 1))

    def test_triangle_in_color_order(self):
        assert is_colored_layout(graph(3, [(0, 1), (1, 2), (0, 2)], [1, 2, 3]), (0, 1, 2))

    def test_vacuous(self):
        assert is_colored_layout(graph(1, [], [1]), (0,))

    def test_edgeless_graph_every_layout(self):
        g = graph(3, [], [1, 1, 1])
        assert all(is_colored_layout(g, p) for p in itertools.permutations(range(3)))

    @settings(max_examples=150, deadline=None)
    @given(colored_graphs(), st.data())
    def test_colored_implies_proper_and_bounded(self, g, data):
        layout = data.draw(st.permutations(range(g.n)))
        if is_colored_layout(g, layout):
            assert is_properly_colored(g)
            for act in active_sets(g, layout):
                colors = [g.color[v] for v in act]
                assert len(colors) == len(set(colors))
            assert vs_of_layout(g, layout) <= g.k - 1
