# %% [markdown]
# # Multiplicities and the configuration search
#
# M_j counts curves enclosing hole j and J_ij counts curves enclosing both.
# The search lists every multiset of hole sets with a given table.

# %%
from planar_fillings import canonical_monodromy, invariant_table, reference_table
from planar_fillings.search import classify, enumerate_configurations

print(invariant_table(canonical_monodromy(3)).format_text())
print(invariant_table(canonical_monodromy(3)) == reference_table(3))

# %% [markdown]
# For small k the table does not pin the configuration down.

# %%
for k in range(1, 7):
    found = enumerate_configurations(reference_table(k))
    print(k, len(found), [str(c) for c in found])

# %% [markdown]
# The classification report adds homology and a realizability status to each
# configuration.

# %%
print(classify(2).format_text())
