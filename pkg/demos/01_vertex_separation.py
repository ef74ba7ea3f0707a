"""Vertex separation, path decompositions and the layout costs derived from them.

Run with ``python demos/01_vertex_separation.py``.
"""
from glis import ColoredGraph, active_sets, derived_metrics, exact_vs, layout_to_path_decomposition, vs_of_layout

# A 6-cycle with one chord.  Colors do not matter for plain vertex separation.
g = ColoredGraph.build(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])

# Any ordering of the vertices is a layout.  After each prefix, the active set
# is the placed vertices that still wait for a neighbor further right.
layout = (0, 1, 2, 3, 4, 5)
for i, act in enumerate(active_sets(g, layout), 1):
    print(f"after {layout[:i]}: active {sorted(act)}")
print("separation of this layout:", vs_of_layout(g, layout))

# The exact solver minimizes over all 720 layouts.
vs, best = exact_vs(g)
print("vertex separation:", vs, "attained by", best)

# Turning the optimal layout into bags gives a path decomposition of the
# same width, so the value above is also the pathwidth.
pd = layout_to_path_decomposition(g, best)
for bag in pd.bags:
    print("  bag", sorted(bag))
print("width", pd.width)

m = derived_metrics(vs)
print(f"pathwidth {m.pathwidth}, node search number {m.node_search_number}, "
      f"gate matrix layout cost {m.gate_matrix_cost}")
