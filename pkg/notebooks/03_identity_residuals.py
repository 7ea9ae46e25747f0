# %% [markdown]
# # Residuals of the mixed recurrence identities
#
# Each catalogued identity is evaluated at seeded random draws. The
# worst relative residual shows how close the implementation is to
# exact arithmetic.

# %%
from jacobi_interlace.identities import IDENTITIES, IDENTITY_IDS, worst_residual

# %%
for ident in IDENTITY_IDS:
    r = worst_residual(ident, 500, seed=7)
    print(f"{ident:<6} {r.rel_residual:.2e}  {IDENTITIES[ident].description}")

# %% [markdown]
# Near the edge of the parameter regime the residuals stay small.

# %%
edge = worst_residual("I2.12", 500, seed=7, box={"alpha": (-0.999, -0.99), "beta": (30, 40)})
print(edge.rel_residual, edge.n, edge.params, edge.x)
