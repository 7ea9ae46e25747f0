"""Eigenvalues of a real symmetric tridiagonal matrix by Sturm bisection.

The matrix is given by its diagonal ``d`` (length n) and the *squares* of
its off-diagonal ``e2`` (length n-1).  Working with squares avoids square
roots in the Jacobi-matrix construction and is exactly what the Sturm
count needs.
"""
from __future__ import annotations

import numpy as np

_EPS = np.finfo(float).eps
_TINY = np.finfo(float).tiny


def sturm_count(d, e2, x):
    """Number of eigenvalues strictly less than each entry of ``x``.

    Counts negative pivots of the LDL^T factorisation of ``T - x I``.
    Zero pivots are nudged to ``-pivmin`` as in LAPACK's ``dstebz``.
    """
    d = np.asarray(d, dtype=float)
    e2 = np.asarray(e2, dtype=float)
    x = np.asarray(x, dtype=float)
    pivmin = _TINY * max(1.0, float(e2.max(initial=0.0)))
    q = d[0] - x
    q = np.where(np.abs(q) < pivmin, -pivmin, q)
    count = (q < 0).astype(int)
    for i in range(1, d.size):
        q = d[i] - x - e2[i - 1] / q
        q = np.where(np.abs(q) < pivmin, -pivmin, q)
        count += q < 0
    return count


def gershgorin_bounds(d, e2) -> tuple[float, float]:
    d = np.asarray(d, dtype=float)
    e = np.sqrt(np.asarray(e2, dtype=float))
    r = np.zeros_like(d)
    r[:-1] += e
    r[1:] += e
    return float((d - r).min()), float((d + r).max())


def eigvalsh_tridiagonal(d, e2, lo: float | None = None, hi: float | None = None,
                         atol: float = 0.0, maxiter: int = 200) -> np.ndarray:
    """All eigenvalues in increasing order.

    Every eigenvalue is bisected simultaneously; the ``k``-th one is the
    point where the Sturm count first exceeds ``k``.  Iteration stops when
    each bracket is narrower than ``atol`` or down to a few ulps.
    """
    d = np.asarray(d, dtype=float)
    n = d.size
    if n == 0:
        return np.empty(0)
    glo, ghi = gershgorin_bounds(d, e2)
    lo = glo if lo is None else lo
    hi = ghi if hi is None else hi
    width = max(hi - lo, _TINY)
    a = np.full(n, lo - 2 * _EPS * width)
    b = np.full(n, hi + 2 * _EPS * width)
    k = np.arange(n)
    for _ in range(maxiter):
        mid = 0.5 * (a + b)
        below = sturm_count(d, e2, mid) > k
        b = np.where(below, mid, b)
        a = np.where(below, a, mid)
        if np.all(b - a <= 4 * _EPS * np.maximum(np.abs(a), np.abs(b)) + 4 * _TINY + atol):
            break
    return 0.5 * (a + b)
