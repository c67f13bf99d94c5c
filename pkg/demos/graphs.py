"""Intersection graphs, their shapes and the induced-subgraph oracles."""

from idealgraph import (
    build_intersection_graph,
    compute_properties,
    export_dot,
    find_induced_claw,
    find_induced_cycle,
)
from idealgraph.graph import observed_shape

g = build_intersection_graph("Z12")
print(export_dot(g, labels="ideal"))

rec = compute_properties(g)
print(rec.to_json())

for text in ("GF(7)", "Z9", "Z27", "GF(2) x GF(3)", "vs(3,2)", "Z16", "Z8 x Z8"):
    h = build_intersection_graph(text)
    print(f"{text:>14}: {h.order:>2} vertices, {h.edge_count:>3} edges, shape {observed_shape(h)}")

# four fields: an induced square from pairwise sums of the axes, and a 3-claw
# centred on the sum of three axes
four = build_intersection_graph("GF(2) x GF(3) x GF(5) x GF(7)")
square = find_induced_cycle(four, 4)
print("C4:", [four.label(v) for v in square])
center, leaves = find_induced_claw(four, 3)
print("claw:", four.label(center), "->", [four.label(v) for v in leaves])

adj = four.adjacency_matrix()
print("degree sequence", adj.sum(axis=1))
