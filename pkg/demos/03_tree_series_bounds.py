"""
Counting rooted trees and the bounding chain
============================================

The number of Penrose trees through a fixed vertex is controlled by a
branching process: each vertex offers at most d = delta - 1 child slots and
at most m independent pairs inside its neighborhood. The counting series of
that process has a closed form, and a chain of comparisons links the graph
quantity to a degree-free envelope.

"""

# %%
# The recurrence u_n = d u_{n-1} + m sum u_j u_{n-1-j} starts at 1. With
# d = 2, m = 1 it produces the Catalan numbers.

from chromadisk import BranchingParams, tree_count_table, tree_series

params = BranchingParams(d=2, m=1)
table = tree_count_table(params, 8)
print("counts:", [table.count(n) for n in range(1, 9)])
print("radius:", params.radius)

# %%
# The closed form 2 / (1 - dy + sqrt((1 - dy)^2 - 4my^2)) sums the series
# inside its radius. Partial sums converge to it geometrically.

y = 0.1
w = tree_series(params, y)
partial = sum(table.count(n) * y ** (n - 1) for n in range(1, 9))
print(f"w({y}) = {w:.10f}, partial sum through n=8: {partial:.10f}")

# %%
# Three bounds, forming a chain. degree_tree_bound(delta, .) dominates the
# closed form at the worst admissible (d, m); envelope_bound removes the
# degree dependence after rescaling y = x / delta.

from chromadisk import degree_tree_bound, envelope_bound

delta = 4
d = delta - 1
worst = BranchingParams(d, d * d // 4)
print(" y        w(y)     g_delta(y)")
for j in range(5):
    y = j / (2.0 * d) / 5.0
    print(f"{y:.4f}  {tree_series(worst, y):8.5f}  {degree_tree_bound(delta, y):8.5f}")
print("envelope at x=1/2:", envelope_bound(0.5))

# %%
# The graph side: enumerate Penrose trees through a vertex whose degree
# dropped below delta (here: delete a neighbor first), and compare the
# resulting polynomial against the bound at y = 1/(2(delta-1)).

from chromadisk import VertexOrdering, penrose_tree_series
from chromadisk.corpus import octahedron

g = octahedron()
delta = g.max_degree()
rest = g.without_vertex(5)
counts = penrose_tree_series(rest, VertexOrdering.natural(rest.n), 0)
y = 1.0 / (2.0 * (delta - 1))
total = sum(c * y**k for k, c in enumerate(counts))
print(f"tree counts through v=0: {counts}")
print(f"T(y) = {total:.5f} <= g_delta(y) = {degree_tree_bound(delta, y):.5f}")
