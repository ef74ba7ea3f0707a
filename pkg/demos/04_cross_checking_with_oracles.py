"""The fast solvers against brute force.

The oracles enumerate layouts, orderings and edge subsets directly.  They are
only usable on tiny graphs, which is exactly where every answer can be
checked.
"""
import itertools

from glis import ColoredGraph, brute_icg, brute_vs, exact_vs, solve_cvs

disagreements = 0
checked = 0
edges_k4 = list(itertools.combinations(range(4), 2))
for mask in range(1 << len(edges_k4)):
    edges = [e for i, e in enumerate(edges_k4) if mask >> i & 1]
    plain = ColoredGraph.build(4, edges)
    assert brute_vs(plain) == exact_vs(plain)[0]
    for colors in itertools.product((1, 2, 3), repeat=4):
        g = ColoredGraph.build(4, edges, colors, k=3)
        checked += 1
        if solve_cvs(g).answer != brute_icg(g):
            disagreements += 1

print(f"{checked} colored labelled graphs on 4 vertices, {disagreements} disagreements")
