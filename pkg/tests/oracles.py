"""Independent reference implementations used only by the tests.

The evaluators use explicit finite sums instead of the three-term
recurrence, and the zero oracle is a plain sign-change scan followed by
bisection, sharing no code with the eigenvalue path.
"""
from __future__ import annotations

import math

import numpy as np


def gbinom(r: float, k: int) -> float:
    """Generalised binomial coefficient for real ``r``."""
    out = 1.0
    for i in range(k):
        out *= (r - i) / (i + 1)
    return out


def jacobi_sum(n: int, a: float, b: float, x):
    """P_n^(a,b)(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)."""
    x = np.asarray(x, dtype=float)
    if n < 0:
        return np.zeros_like(x)
    u, v = (x - 1) / 2, (x + 1) / 2
    return sum(gbinom(n + a, n - s) * gbinom(n + b, s) * u**s * v**(n - s)
               for s in range(n + 1)) + 0 * x


def gegenbauer_sum(n: int, lam: float, x):
    """C_n^(lam)(x) = sum_k (-1)^k (lam)_{n-k} / (k! (n-2k)!) (2x)^(n-2k)."""
    x = np.asarray(x, dtype=float)
    if n < 0:
        return np.zeros_like(x)
    total = 0 * x
    for k in range(n // 2 + 1):
        poch = math.prod(lam + i for i in range(n - k))
        total = total + (-1) ** k * poch / (math.factorial(k) * math.factorial(n - 2 * k)) \
            * (2 * x) ** (n - 2 * k)
    return total


def grid_bisection_zeros(f, n_expected: int, lo: float = -1.0, hi: float = 1.0,
                         npts: int = 2**16) -> np.ndarray:
    """Zeros of ``f`` on ``[lo, hi]`` by a sign-change scan and plain bisection."""
    grid = np.linspace(lo, hi, npts + 1)
    vals = f(grid)
    idx = np.flatnonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)
    a, b = grid[idx], grid[idx + 1]
    fa = vals[idx]
    for _ in range(60):
        m = 0.5 * (a + b)
        fm = f(m)
        left = np.sign(fm) == np.sign(fa)
        a = np.where(left, m, a)
        fa = np.where(left, fm, fa)
        b = np.where(left, b, m)
    z = 0.5 * (a + b)
    exact = grid[vals == 0]
    z = np.sort(np.concatenate([z, exact]))
    assert z.size == n_expected, f"oracle found {z.size} zeros, expected {n_expected}"
    return z
