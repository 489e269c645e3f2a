"""
Claw-free graphs and the pair independence ratio
================================================

A claw is an induced star on three leaves. Graphs without one have
neighborhoods that are close to cliques, and the quantity that measures
"how close" is the pair independence ratio kappa: the largest number of
missing edges inside any neighborhood, divided by the most a triangle-free
graph on that many vertices could miss.

"""

# %%
# Three small graphs decide everything here: the claw itself, the square
# (an induced 4-cycle) and the diamond (K4 minus an edge).

from chromadisk import classify, neighborhood_stats
from chromadisk.corpus import (
    claw_graph,
    complete_graph,
    cycle_graph,
    diamond_graph,
    line_graph,
    octahedron,
    prism_graph,
    random_connected_graph,
)

for name, g in [
    ("claw", claw_graph()),
    ("diamond", diamond_graph()),
    ("C5", cycle_graph(5)),
    ("K4", complete_graph(4)),
    ("prism", prism_graph()),
    ("octahedron", octahedron()),
]:
    c = classify(g)
    print(
        f"{name:10s} claw_free={c.claw_free!s:5s} square_free={c.square_free!s:5s} "
        f"diamond_free={c.diamond_free!s:5s} class={c.class_index}"
    )

# %%
# Class 1 (square- and diamond-free on top of claw-free) earns the smaller
# disk constant later on. The cycle qualifies; the prism does not, because
# its squares survive.

# %%
# kappa is computed exactly, as a fraction. For a complete graph every
# neighborhood is a clique, so kappa is 0; for the prism the cross neighbor
# of each vertex misses both of its triangle mates, which is already the
# Mantel maximum floor(9/4) = 2, so kappa is 1.

for name, g in [("K5", complete_graph(5)), ("prism", prism_graph()), ("C6", cycle_graph(6))]:
    s = neighborhood_stats(g)
    print(f"{name:6s} delta={s.delta} i_v={s.i_v} kappa={s.kappa}")

# %%
# Line graphs are the classical source of claw-free examples: edges of any
# graph, joined when they touch. A random connected graph gives a random
# claw-free one.

h = random_connected_graph(6, 3, seed=9)
lg = line_graph(h)
print("line graph on", lg.n, "vertices:", classify(lg))
