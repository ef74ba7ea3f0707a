import random

import pytest

from glis import (
    gen_random,
    gen_yes_instance,
    intervals_to_layout,
    is_colored_layout,
    is_properly_colored,
    model_to_graph,
    serialize_graph,
    solve_icg,
    verify_certificate,
    vs_of_layout,
)
from glis.generate import greedy_interval_coloring, planted_model
from glis.intervals import certificate_from_model


def max_depth(m):
    return max(sum(1 for a, b in m.intervals if a <= a2 <= b) for a2, _ in m.intervals)


def test_planted_model_depth():
    for seed in range(200):
        n, k = 1 + seed % 15, 1 + seed % 5
        m = planted_model(n, k, random.Random(seed))
        assert max_depth(m) <= k
        assert max(greedy_interval_coloring(m)) <= k


def test_gen_yes_single_vertex():
    g = gen_yes_instance(1, 3, 0.5, seed=9)
    assert g.n == 1 and not g.edges and 1 <= g.color[0] <= 3


def test_gen_yes_deterministic():
    a = serialize_graph(gen_yes_instance(10, 3, 0.7, seed=42))
    assert a == serialize_graph(gen_yes_instance(10, 3, 0.7, seed=42))
    assert a != serialize_graph(gen_yes_instance(10, 3, 0.7, seed=43))


def test_gen_yes_full_keep_is_interval_graph():
    for seed in range(30):
        g = gen_yes_instance(9, 3, 1.0, seed)
        assert g.edges == model_to_graph(planted_model(9, 3, random.Random(seed)))
        cert = solve_icg(g)
        assert verify_certificate(g, cert).valid


@pytest.mark.parametrize("keep", [0.3, 0.7, 1.0])
def test_planted_model_is_certificate(keep):
    # the pre-deletion model certifies the output; reading it back by left
    # endpoints must give a colored layout of bounded separation
    for seed in range(40):
        n, k = 2 + seed % 10, 1 + seed % 4
        g = gen_yes_instance(n, k, keep, seed)
        m = planted_model(n, k, random.Random(seed))
        assert g.color == greedy_interval_coloring(m)
        assert verify_certificate(g, certificate_from_model(g, m)).valid
        layout = intervals_to_layout(m)
        assert is_colored_layout(g.with_edges(model_to_graph(m)), layout)
        assert is_colored_layout(g, layout)
        assert vs_of_layout(g, layout) <= k - 1


def test_gen_yes_clamps_with_warning():
    with pytest.warns(UserWarning):
        g = gen_yes_instance(4, 2, 1.5, seed=0)
    assert g.n == 4
    with pytest.warns(UserWarning):
        assert gen_yes_instance(0, 2, 0.5, seed=0).n == 1


def test_gen_random_p_zero():
    assert not gen_random(8, 3, 0.0, seed=1).edges


def test_gen_random_complete_distinct():
    g = gen_random(6, 6, 1.0, seed=4, distinct_colors=True)
    assert len(g.edges) == 15
    assert sorted(g.color) == list(range(1, 7))
    assert is_properly_colored(g)


def test_gen_random_deterministic_and_in_palette():
    a = gen_random(12, 4, 0.3, seed=7)
    assert a == gen_random(12, 4, 0.3, seed=7)
    assert all(1 <= c <= 4 for c in a.color)


def test_gen_random_frozen_output():
    # pins the stream against accidental changes to the sampling code
    assert serialize_graph(gen_random(4, 2, 0.5, seed=1)) == FROZEN_RANDOM


FROZEN_RANDOM = "p cvs 4 4 2\nv 0 1\nv 1 2\nv 2 2\nv 3 1\ne 0 1\ne 0 2\ne 1 3\ne 2 3\n"
