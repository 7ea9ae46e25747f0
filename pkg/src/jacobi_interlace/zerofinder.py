"""Real zeros of Jacobi and ultraspherical polynomials.

Orthogonal regime: Golub-Welsch (eigenvalues of the Jacobi matrix, found
with :mod:`jacobi_interlace.tridiag`) followed by a safeguarded Newton
polish on the polynomial itself.

Quasi-orthogonal regime (``alpha > -1``, ``-2 < beta < -1``): sign-change
bracketing on a refined grid over ``[-1, 1]`` plus a doubling search for the
single zero left of ``-1``.
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .config import get_settings
from .errors import BracketFailure, NoRootInBracket, RegimeError, WrongRegime
from .polyeval import (
    Family,
    PolySpec,
    eval_jacobi,
    eval_jacobi_derivative,
    evaluate,
    evaluate_derivative,
)
from .tridiag import eigvalsh_tridiagonal

__all__ = [
    "Method",
    "ZeroSet",
    "jacobi_matrix",
    "compute_zeros",
    "compute_zeros_quasi",
    "zeros",
    "refine_zero",
]


class Method(str, enum.Enum):
    EIGEN = "eigen"
    QUASI_BRACKET = "quasi-bracket"


@dataclass(frozen=True)
class ZeroSet:
    spec: PolySpec
    zeros: np.ndarray
    max_abs_residual: float
    method: Method
    # quasi path only: y_1 < -1 and the rest alternate with the zeros of
    # P_{n-1}^{(alpha, beta+1)}
    crosscheck: Optional[bool] = None
    notes: tuple = field(default=())

    def __len__(self):
        return len(self.zeros)

    def __iter__(self):
        return iter(self.zeros)

    @property
    def positive(self) -> np.ndarray:
        return self.zeros[self.zeros > 0]


def jacobi_matrix(n: int, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and squared off-diagonal of the monic Jacobi-weight recurrence.

    ``p_{k+1}(x) = (x - a_k) p_k(x) - b_k p_{k-1}(x)`` with the textbook
    coefficients.  The 0/0 forms at ``k = 0`` (``alpha + beta = 0``) and
    ``k = 1`` (``alpha + beta = -1``) are replaced by their limits.
    """
    a, b = float(alpha), float(beta)
    k = np.arange(n, dtype=float)
    s = 2 * k + a + b
    diag = np.empty(n)
    if n:
        diag[0] = (b - a) / (a + b + 2)
        diag[1:] = (b * b - a * a) / (s[1:] * (s[1:] + 2))
    off = np.empty(max(n - 1, 0))
    if n > 1:
        off[0] = 4 * (1 + a) * (1 + b) / ((2 + a + b) ** 2 * (3 + a + b))
        kk = k[2:]
        ss = s[2:]
        off[1:] = (4 * kk * (kk + a) * (kk + b) * (kk + a + b)
                   / (ss * ss * (ss + 1) * (ss - 1)))
    return diag, off


def _jacobi_ab(spec: PolySpec) -> tuple[float, float]:
    if spec.family is Family.JACOBI:
        return spec.params.alpha, spec.params.beta
    lam = spec.params.lam
    return lam - 0.5, lam - 0.5


def _evaluators(spec: PolySpec):
    if spec.family is Family.ULTRASPHERICAL:
        # C_n^(lam) is a multiple of P_n^(lam-1/2, lam-1/2); the Jacobi form has
        # the same zeros without the factor lam, so it neither vanishes at
        # lam = 0 nor underflows for tiny lam
        n, a = spec.degree, spec.params.lam - 0.5
        return (lambda x: eval_jacobi(n, (a, a), x),
                lambda x: eval_jacobi_derivative(n, (a, a), x))
    return (lambda x: evaluate(spec, x), lambda x: evaluate_derivative(spec, x))


def _local_residual(f, z: np.ndarray) -> float:
    """max |f(z_i)| relative to |f| at the midpoints to the neighbouring zeros."""
    if z.size == 0:
        return 0.0
    if z.size == 1:
        left, right = z - 0.5, z + 0.5
    else:
        padded = np.concatenate([[2 * z[0] - z[1]], z, [2 * z[-1] - z[-2]]])
        left = 0.5 * (padded[:-2] + z)
        right = 0.5 * (padded[2:] + z)
    scale = np.maximum(np.abs(f(left)), np.abs(f(right)))
    scale = np.where(scale > 0, scale, 1.0)
    return float(np.max(np.abs(f(z)) / scale))


def _newton_polish(f, df, z: np.ndarray, lo: np.ndarray, hi: np.ndarray,
                   tol: float, maxiter: int) -> np.ndarray:
    z = z.copy()
    active = np.ones(z.size, dtype=bool)
    for _ in range(maxiter):
        if not active.any():
            break
        za = z[active]
        fz, dfz = f(za), df(za)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(dfz != 0, fz / dfz, 0.0)
        new = za - step
        ok = np.isfinite(new) & (new > lo[active]) & (new < hi[active])
        new = np.where(ok, new, za)
        z[active] = new
        done = ~ok | (np.abs(step) < tol)
        idx = np.flatnonzero(active)
        active[idx[done]] = False
    return z


def _check_strictly_increasing(z: np.ndarray, what: str):
    if z.size > 1 and not np.all(np.diff(z) > 1e-13):
        raise BracketFailure(f"{what}: zeros not separated by more than 1e-13")


def compute_zeros(spec: PolySpec) -> ZeroSet:
    """Zeros of an orthogonal-regime polynomial, sorted, Newton polished."""
    if not spec.orthogonal:
        raise WrongRegime(
            f"{spec.label()} is not in the orthogonal regime; use compute_zeros_quasi")
    return _compute_zeros(spec, get_settings())


@functools.lru_cache(maxsize=8192)
def _compute_zeros(spec: PolySpec, settings) -> ZeroSet:
    n = spec.degree
    if n == 0:
        return ZeroSet(spec, np.empty(0), 0.0, Method.EIGEN)
    a, b = _jacobi_ab(spec)
    d, e2 = jacobi_matrix(n, a, b)
    # coarse bisection is enough: Newton on the polynomial finishes the job
    z = eigvalsh_tridiagonal(d, e2, -1.0, 1.0, atol=1e-9)

    f, df = _evaluators(spec)
    edges = np.concatenate([[-1.0], 0.5 * (z[1:] + z[:-1]), [1.0]])
    z = _newton_polish(f, df, z, edges[:-1], edges[1:],
                       settings.newton_tol, settings.newton_maxiter)
    if spec.family is Family.ULTRASPHERICAL or a == b:
        z = 0.5 * (z - z[::-1])
        if n % 2:
            z[n // 2] = 0.0
    _check_strictly_increasing(z, spec.label())
    if z[0] <= -1 or z[-1] >= 1:
        raise BracketFailure(f"{spec.label()}: zero outside (-1, 1)")
    z.setflags(write=False)
    return ZeroSet(spec, z, _local_residual(f, z), Method.EIGEN)


def refine_zero(spec: PolySpec, seed: float, bracket: tuple[float, float]) -> float:
    """Safeguarded Newton on ``bracket``; bisects whenever Newton leaves it."""
    settings = get_settings()
    f, df = _evaluators(spec)
    lo, hi = sorted(map(float, bracket))
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise NoRootInBracket(f"{spec.label()} has no sign change on [{lo}, {hi}]")
    z = float(seed) if lo < seed < hi else 0.5 * (lo + hi)
    for _ in range(4 * settings.newton_maxiter):
        fz = f(z)
        if fz == 0:
            return z
        if np.sign(fz) == np.sign(flo):
            lo, flo = z, fz
        else:
            hi = z
        dfz = df(z)
        new = z - fz / dfz if dfz != 0 else np.nan
        if not (lo < new < hi):
            new = 0.5 * (lo + hi)
        step = abs(new - z)
        z = new
        if step < settings.newton_tol or hi - lo <= 4 * np.spacing(max(abs(lo), abs(hi))):
            break
    return z


def _refine_brackets(f, df, lo: np.ndarray, hi: np.ndarray, tol: float,
                     maxiter: int) -> np.ndarray:
    """Vectorised form of :func:`refine_zero` over many sign-change brackets."""
    lo, hi = lo.copy(), hi.copy()
    flo = f(lo)
    z = 0.5 * (lo + hi)
    active = np.ones(z.size, dtype=bool)
    for _ in range(maxiter):
        if not active.any():
            break
        idx = np.flatnonzero(active)
        zi = z[idx]
        fz, dfz = f(zi), df(zi)
        same = np.sign(fz) == np.sign(flo[idx])
        lo[idx] = np.where(same, zi, lo[idx])
        flo[idx] = np.where(same, fz, flo[idx])
        hi[idx] = np.where(same, hi[idx], zi)
        with np.errstate(divide="ignore", invalid="ignore"):
            new = zi - fz / dfz
        inside = np.isfinite(new) & (new > lo[idx]) & (new < hi[idx])
        new = np.where(inside, new, 0.5 * (lo[idx] + hi[idx]))
        new = np.where(fz == 0, zi, new)
        step = np.abs(new - zi)
        z[idx] = new
        tiny = hi[idx] - lo[idx] <= 4 * np.spacing(np.maximum(np.abs(lo[idx]), np.abs(hi[idx])))
        active[idx[(step < tol) | tiny | (fz == 0)]] = False
    return z


def _sign_change_brackets(f, lo: float, hi: float, npts: int):
    grid = np.linspace(lo, hi, npts + 1)
    vals = f(grid)
    exact = grid[vals == 0.0]
    s = np.sign(vals)
    i = np.flatnonzero(s[:-1] * s[1:] < 0)
    return [(grid[j], grid[j + 1]) for j in i], list(exact)


def _exterior_bracket(f, edge: float):
    """Bracket a sign change beyond ``edge`` (= +-1) by doubling the distance."""
    direction = 1.0 if edge > 0 else -1.0
    f_edge = f(edge)
    t = 1.0
    while np.sign(f(edge + direction * t)) == np.sign(f_edge):
        t *= 2.0
        if t > 2.0**60:
            return None
    near = edge + direction * (t / 2 if t > 1.0 else 0.0)
    return tuple(sorted((near, edge + direction * t)))


def compute_zeros_quasi(spec: PolySpec) -> ZeroSet:
    """Zeros of ``P_n^{(alpha, beta)}`` with ``alpha > -1``, ``-2 < beta < -1``.

    Exactly one zero lies outside ``[-1, 1]``, below ``-1`` except for
    ``n = 1`` with ``alpha + beta < -2``; the other ``n - 1`` are in
    ``(-1, 1)`` and are bracketed by sign changes on a grid that is doubled
    until the count is right (``BracketFailure`` past the configured cap).
    """
    if spec.family is not Family.JACOBI or not spec.params.quasi:
        raise RegimeError("quasi zero finder needs a Jacobi polynomial with -2 < beta < -1")
    n = spec.degree
    if n < 1:
        raise RegimeError("degree must be at least 1")
    a, b = spec.params.alpha, spec.params.beta
    if abs(a + b + 2) < 1e-12:
        # leading coefficient (or a recurrence denominator) vanishes
        raise RegimeError(f"{spec.label()}: alpha + beta = -2 is excluded in the quasi regime")
    settings = get_settings()
    f, df = _evaluators(spec)

    npts = settings.quasi_grid_start
    while True:
        brackets, exact = _sign_change_brackets(f, -1.0, 1.0, npts)
        if len(brackets) + len(exact) == n - 1:
            break
        npts *= 2
        if npts > settings.quasi_grid_max:
            raise BracketFailure(
                f"{spec.label()}: found {len(brackets) + len(exact)} interior sign "
                f"changes, expected {n - 1}")

    outer = _exterior_bracket(f, -1.0) or _exterior_bracket(f, 1.0)
    if outer is None:
        raise BracketFailure(f"{spec.label()}: no zero found outside [-1, 1]")
    roots = [refine_zero(spec, 0.5 * sum(outer), outer)]
    if brackets:
        lo, hi = np.asarray(brackets, dtype=float).T
        roots += list(_refine_brackets(f, df, lo, hi, settings.newton_tol,
                                       4 * settings.newton_maxiter))
    roots += exact
    z = np.sort(np.asarray(roots, dtype=float))
    if z.size != n:
        raise BracketFailure(f"{spec.label()}: {z.size} zeros bracketed, expected {n}")
    _check_strictly_increasing(z, spec.label())

    crosscheck = None
    if n >= 2:
        partner = compute_zeros(PolySpec.jacobi(n - 1, a, b + 1.0)).zeros
        merged = np.empty(2 * n - 1)
        merged[0::2] = z
        merged[1::2] = partner
        crosscheck = bool(z[0] < -1 < partner[0] and np.all(np.diff(merged) > 0)
                          and z[-1] < 1)
    elif n == 1:
        crosscheck = bool(abs(z[0]) > 1)
    z.setflags(write=False)
    return ZeroSet(spec, z, _local_residual(f, z), Method.QUASI_BRACKET, crosscheck)


def zeros(spec: PolySpec) -> ZeroSet:
    """Dispatch to the orthogonal or the quasi-orthogonal zero finder."""
    if spec.orthogonal:
        return compute_zeros(spec)
    return compute_zeros_quasi(spec)
