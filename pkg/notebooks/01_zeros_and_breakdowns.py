# %% [markdown]
# # Zeros, critical points and breakdown intervals
#
# Compute the zeros of a Jacobi pair, place the linear critical point
# among them, and see where full interlacing fails.

# %%
import numpy as np

from jacobi_interlace import PolySpec, compute_zeros
from jacobi_interlace.interlace import check_theorem_2_1, check_theorem_4_1, critical_k

# %%
x = compute_zeros(PolySpec.jacobi(7, 6, 2)).zeros
w = compute_zeros(PolySpec.jacobi(8, 6, 3)).zeros
print("P_7^(6,2):", np.round(x, 4))
print("P_8^(6,3):", np.round(w, 4))

# %% [markdown]
# The checker counts what lies in each gap of the degree-8 zeros.
# Exactly one gap holds the critical point l_n instead of a zero.

# %%
v = check_theorem_2_1(7, 6, 2)
print("l_n =", round(v.critical.l_n, 5))
for iv in v.placements:
    print(f"({iv.lo:+.4f}, {iv.hi:+.4f})  zeros={iv.zeros_inside}  critical={iv.critical_inside}")
print("breakdown:", [(round(iv.lo, 3), round(iv.hi, 3)) for iv in v.breakdown_intervals])

# %% [markdown]
# Raising beta pushes l_n towards -1, below the smallest zero, and the
# pair interlaces fully.

# %%
for beta in (2, 10, 30, 100):
    v = check_theorem_2_1(7, 6, beta)
    print(f"beta={beta:>3}  l_n={v.critical.l_n:+.5f}  w_1={v.zeros_b[0]:+.5f}  full={v.full}")

# %% [markdown]
# The ultraspherical analogue uses +-k_n. For a large lambda the zeros
# crowd towards the origin, far inside +-k_n.

# %%
for lam in (3, 10, 100, 4000):
    v = check_theorem_4_1(9, lam)
    print(f"lambda={lam:>4}  k_n={critical_k(9, lam).k_n:.6f}  "
          f"largest zero={v.zeros_b[-1]:.6f}  full={v.full}")
