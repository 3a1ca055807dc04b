# %% [markdown]
# Demagnetizing factors of a few ellipsoids, closed form against quadrature.

# %%
import numpy as np

from magswitch.demag import EllipsoidGeometry, canonicalize, demag_closed_form, demag_quadrature

shapes = {
    "sphere": (1, 1, 1),
    "cigar": (4, 1, 1),
    "disc": (1, 1, 0.1),
    "flat strip": (2, 1, 0.5),
    "needle-ish": (10, 0.3, 0.2),
}

print(f"{'shape':<12} {'g1':>10} {'g2':>10} {'g3':>10} {'|cf - quad|':>12}")
for name, axes in shapes.items():
    geom = EllipsoidGeometry(*axes)
    cf = demag_closed_form(geom).gammas
    q = demag_quadrature(geom).gammas
    print(f"{name:<12} {cf[0]:10.6f} {cf[1]:10.6f} {cf[2]:10.6f} {np.abs(cf - q).max():12.1e}")

# %% [markdown]
# The control analysis wants the factors ascending.  The permutation
# says which body axis becomes the easy axis e1.

# %%
sorted_t, perm = canonicalize(demag_closed_form(EllipsoidGeometry(0.5, 2, 1)))
print("sorted", sorted_t.gammas, "from body axes", perm)
