"""Colored layouts and interval models describe the same thing.

A colored layout never places a vertex whose color is still held by the
active set.  Such a layout turns into intervals that only overlap across
different colors, and sorting those intervals by left endpoint gives the
layout back.
"""
from glis import (
    ColoredGraph,
    intervals_to_layout,
    is_colored_layout,
    layout_to_intervals,
    model_to_graph,
    solve_cvs,
)

# 4-cycle colored 1,2,3,2.
g = ColoredGraph.build(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [1, 2, 3, 2], k=3)

print("(0, 2, 1, 3) colored?", is_colored_layout(g, (0, 2, 1, 3)))
res = solve_cvs(g)
print("solver answer:", res.answer, "witness", res.witness)

model = layout_to_intervals(g, res.witness)
for v in range(g.n):
    a, b = model.interval(v)
    print(f"vertex {v} color {g.color[v]}: [{a}, {b}]")

overlaps = model_to_graph(model)
print("overlap edges:", sorted(overlaps))
print("edges added to the input:", sorted(overlaps - g.edges))
print("back to a layout:", intervals_to_layout(model))

# Alternating two colors on the same cycle leaves no room: every chord would
# join two vertices of one color.
h = ColoredGraph.build(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [1, 2, 1, 2], k=2)
print("alternating 4-cycle:", solve_cvs(h))
