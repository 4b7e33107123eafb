# %% [markdown]
# # Homology of the Lefschetz fibration
#
# The total space is built from D^2 x F_k with one 2-handle per curve. The
# boundary map sends a handle to the hole classes it encloses, so H_1 is its
# cokernel and H_2 its kernel.

# %%
from planar_fillings import canonical_monodromy, reference_table
from planar_fillings.homology import (
    fibration_boundary_matrix, fibration_homology, smith_normal_form,
)
from planar_fillings.search import enumerate_configurations

m = fibration_boundary_matrix(canonical_monodromy(2))
print(m.tolist())
d, U, V = smith_normal_form(m)
print("invariant factors", d)

# %%
for k in range(1, 6):
    for c in enumerate_configurations(reference_table(k)):
        h1, h2 = fibration_homology(c)
        print(f"k={k} {c}  H1 = {h1}, H2 = {h2}")

# %% [markdown]
# At k = 1 the two configurations give different H_2, so the fillings differ.
