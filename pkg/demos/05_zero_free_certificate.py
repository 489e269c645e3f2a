"""
A zero-free disk for chromatic roots
====================================

Putting the pieces together: classify the graph, measure kappa, minimize
the constant, and check every chromatic root against the disk |q| < C *
delta. The disk is far from tight, which is exactly what makes the check a
good regression: any correctness bug shows up as a root escaping by miles.

"""

# %%

from chromadisk import (
    chromatic_deletion_contraction,
    classify,
    kappa_for_bounds,
    minimize_c,
    neighborhood_stats,
    polynomial_roots,
)
from chromadisk.corpus import icosahedron, prism_graph

for name, g in [("prism", prism_graph()), ("icosahedron", icosahedron())]:
    cls = classify(g)
    stats = neighborhood_stats(g)
    res = minimize_c(cls.class_index, kappa_for_bounds(stats.kappa))
    radius = res.disk_radius(stats.delta)
    roots = polynomial_roots(chromatic_deletion_contraction(g))
    biggest = max(abs(r.value) for r in roots)
    print(f"{name}: kappa={stats.kappa}, C={res.c_star:.6f}, radius={radius:.4f}")
    print(f"  {len(roots)} roots, largest |q| = {biggest:.4f}, margin {radius - biggest:.4f}")

# %%
# Behind the disk sits a ratio inequality: removing one vertex changes the
# forest sum F by a factor 1 + R with |R| <= a* everywhere on the circle
# |z| = z*. Sample it.

import cmath
import math

from chromadisk import ratio_R

g = prism_graph()
stats = neighborhood_stats(g)
res = minimize_c(classify(g).class_index, kappa_for_bounds(stats.kappa))
z_star = res.z_star(stats.delta)
worst = max(
    abs(ratio_R(g, u, z_star * cmath.exp(2j * math.pi * k / 12)))
    for u in range(g.n)
    for k in range(12)
)
print(f"prism: max |R| on the circle = {worst:.6f} <= a* = {res.a_star:.6f}")
