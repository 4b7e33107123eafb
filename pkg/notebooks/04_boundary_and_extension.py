# %% [markdown]
# # Boundary homology and the extension argument
#
# The boundary is the unit cotangent bundle of a nonorientable surface. Its
# presentation abelianizes to a group that depends on the parity of k.

# %%
from planar_fillings import canonical_monodromy
from planar_fillings.homology import (
    abelianization, extension_h2, lhs_e2_terms, open_book_boundary_homology,
    solve_extension, st_star_presentation,
)

for k in range(1, 7):
    p = st_star_presentation(k)
    print(k, abelianization(p), open_book_boundary_homology(canonical_monodromy(k)))
print(st_star_presentation(2))

# %% [markdown]
# A Z/m extension with vanishing H_2 is only possible for m = 1. The E^2 page
# below uses untwisted coefficients H_q(Z/m).

# %%
for (p, q), group in sorted(lhs_e2_terms(3, 4).items()):
    print(f"E2[{p},{q}] = {group}")
for m in (0, 1, 2, 3):
    print(m, extension_h2(3, m))
print("m with H2 = 0:", solve_extension(3, 100))
