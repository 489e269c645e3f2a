"""
Minimizing the disk constant
============================

For each class i and ratio kappa the disk constant is C(a) = 1/((1-a) x(a))
where x(a) is the largest threshold keeping the removal-ratio bound below
a; minimizing over a gives the constant. The endpoint kappa = 0 is solvable
by hand and gives C = 3 at a = 1/3.

"""

# %%

from fractions import Fraction

from chromadisk import constants_table, minimize_c

res = minimize_c(0, Fraction(0))
print(f"kappa=0: C = {res.c_star:.6f} at a* = {res.a_star:.6f}, x* = {res.x_star:.6f}")

# %%
# The full table on a coarse grid. Class 1 never does worse than class 0,
# and both constants grow with kappa.

print("kappa   C (class 0)   C (class 1)")
for row in constants_table(0.25):
    print(f"{row.kappa:5.2f}   {row.c_class0:11.6f}   {row.c_class1:11.6f}")

# %%
# What the constant buys: a graph with max degree delta gets the root-free
# disk |q| < C * delta, i.e. complex roots live within radius z* = 1/(C
# delta) for the rescaled forest sum.

res = minimize_c(1, Fraction(1))
for delta in (3, 4, 5):
    print(
        f"delta={delta}: radius {res.disk_radius(delta):9.6f}, "
        f"z* = {res.z_star(delta):.6f}"
    )
