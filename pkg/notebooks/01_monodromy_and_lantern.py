# %% [markdown]
# # Monodromy factorizations and the lantern relation
#
# The page F_k is a disk with 2k+1 holes c_0..c_{2k}. Its fundamental group is
# free on x_0..x_{2k}, and each curve is stored with a free-group word whose
# exponent sums pick out the enclosed holes.

# %%
from planar_fillings import (
    Page, boundary_factorization, canonical_monodromy, equal, hurwitz_move,
    realize, twist,
)

f = canonical_monodromy(1)
for curve in f.curves:
    print(curve.holes, curve.word)

# %% [markdown]
# A twist acts on the generators. Here is the twist along the curve around
# holes 0 and 1.

# %%
t = twist(f.curves[0], 1)
for i, image in enumerate(t.images):
    print(f"x{i} -> {image}")
print("framing", t.framing)

# %% [markdown]
# Three twists on the 4-holed sphere agree with the four boundary twists.

# %%
lantern = boundary_factorization(Page(1))
print([c.holes for c in lantern.curves])
print("equal:", equal(realize(f), realize(lantern)))

# %% [markdown]
# Hurwitz moves replace two adjacent curves and keep the product fixed.
# The new curve words are no longer short, but the mapping class is the same.

# %%
g = canonical_monodromy(2)
moved = hurwitz_move(hurwitz_move(g, 0), 2)
for curve in moved.curves:
    print(curve.holes, curve.word)
print("equal:", equal(realize(g), realize(moved)))
