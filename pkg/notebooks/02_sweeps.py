# %% [markdown]
# # How often is interlacing full?
#
# Sweep the degree at fixed parameters and watch the full-interlacing
# fraction. Breakdown becomes the rule as n grows.

# %%
import numpy as np

from jacobi_interlace.sweep import parse_range, run_sweep

# %%
records, summary = run_sweep("thm2.1", range(2, 61), [1.0], [1.0])
print(summary.line("thm2.1"))
print("full at n =", [r.n for r in records if r.full])

# %% [markdown]
# Over a beta grid the fraction still decays with n.

# %%
betas = parse_range("0.1:5:0.1")
records, _ = run_sweep("thm2.1", range(2, 31), [1.0], betas, workers=2)
by_n = {}
for r in records:
    by_n.setdefault(r.n, []).append(bool(r.full))
for n in (2, 4, 8, 16, 30):
    print(f"n={n:>2}  full fraction {np.mean(by_n[n]):.2f}")

# %% [markdown]
# The limit points: l_n drifts to -1/2 and the roots of q to +-1/sqrt(2).

# %%
for n in (10, 50, 200, 1000):
    r = run_sweep("thm2.2", [n], [1.0], [1.0])[0][0]
    print(f"n={n:>4}  q_-={r.q_minus:+.5f}  q_+={r.q_plus:+.5f}")
