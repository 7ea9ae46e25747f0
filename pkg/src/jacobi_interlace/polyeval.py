"""Jacobi and ultraspherical polynomials by upward three-term recurrence.

Normalisation is the classical one: ``P_0 = 1``,
``P_1(x) = ((a + b + 2) x + (a - b)) / 2`` for Jacobi and ``C_0 = 1``,
``C_1(x) = 2 lam x`` for Gegenbauer.  Every mixed identity in
:mod:`jacobi_interlace.identities` holds in this normalisation without
rescaling.

All evaluators accept a scalar or an array for ``x`` and return the same
shape (a Python ``float`` for scalar input).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DegenerateRecurrence, RegimeError

__all__ = [
    "Family",
    "JacobiParams",
    "UltrasphericalParams",
    "PolySpec",
    "pochhammer",
    "eval_jacobi",
    "eval_ultraspherical",
    "eval_jacobi_derivative",
    "eval_ultraspherical_derivative",
    "evaluate",
    "evaluate_derivative",
]


class Family(str, enum.Enum):
    JACOBI = "jacobi"
    ULTRASPHERICAL = "ultraspherical"


@dataclass(frozen=True)
class JacobiParams:
    """Jacobi parameters ``(alpha, beta)``.

    Accepted ranges are the orthogonal one (``alpha, beta > -1``) and the
    quasi-orthogonal extension ``alpha > -1, -2 < beta < -1``.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        a, b = float(self.alpha), float(self.beta)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise RegimeError(f"non-finite Jacobi parameters ({a}, {b})")
        if a <= -1:
            raise RegimeError(f"alpha = {a} must exceed -1")
        if b <= -2 or b == -1:
            raise RegimeError(f"beta = {b} must lie in (-2, -1) or exceed -1")

    @property
    def orthogonal(self) -> bool:
        return self.alpha > -1 and self.beta > -1

    @property
    def quasi(self) -> bool:
        return -2 < self.beta < -1


@dataclass(frozen=True)
class UltrasphericalParams:
    lam: float

    def __post_init__(self):
        lam = float(self.lam)
        object.__setattr__(self, "lam", lam)
        if not (math.isfinite(lam) and lam > -0.5):
            raise RegimeError(f"lambda = {lam} must exceed -1/2")

    @property
    def orthogonal(self) -> bool:
        return True

    def as_jacobi(self) -> JacobiParams:
        return JacobiParams(self.lam - 0.5, self.lam - 0.5)


Params = Union[JacobiParams, UltrasphericalParams]


@dataclass(frozen=True)
class PolySpec:
    family: Family
    degree: int
    params: Params

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        if int(self.degree) != self.degree or self.degree < 0:
            raise RegimeError(f"degree must be a nonnegative integer, got {self.degree}")
        object.__setattr__(self, "degree", int(self.degree))
        expected = JacobiParams if family is Family.JACOBI else UltrasphericalParams
        if not isinstance(self.params, expected):
            raise TypeError(f"{family.value} polynomial needs {expected.__name__}")

    @classmethod
    def jacobi(cls, n: int, alpha: float, beta: float) -> "PolySpec":
        return cls(Family.JACOBI, n, JacobiParams(alpha, beta))

    @classmethod
    def ultraspherical(cls, n: int, lam: float) -> "PolySpec":
        return cls(Family.ULTRASPHERICAL, n, UltrasphericalParams(lam))

    @property
    def orthogonal(self) -> bool:
        return self.params.orthogonal

    def label(self) -> str:
        if self.family is Family.JACOBI:
            p = self.params
            return f"P_{self.degree}^({p.alpha:g},{p.beta:g})"
        return f"C_{self.degree}^({self.params.lam:g})"

    def to_dict(self) -> dict:
        d = {"family": self.family.value, "n": self.degree,
             "alpha": None, "beta": None, "lambda": None}
        if self.family is Family.JACOBI:
            d["alpha"], d["beta"] = self.params.alpha, self.params.beta
        else:
            d["lambda"] = self.params.lam
        return d


def pochhammer(r: float, k: int) -> float:
    """Rising factorial ``r (r+1) ... (r+k-1)``; equals 1 for ``k = 0``."""
    if k < 0 or int(k) != k:
        raise ValueError(f"k must be a nonnegative integer, got {k}")
    out = 1.0
    for i in range(int(k)):
        out *= r + i
    return out


def _ab(params) -> tuple[float, float]:
    if isinstance(params, JacobiParams):
        return params.alpha, params.beta
    if isinstance(params, UltrasphericalParams):
        raise TypeError("expected Jacobi parameters")
    a, b = params
    p = JacobiParams(a, b)
    return p.alpha, p.beta


def _lam(params) -> float:
    if isinstance(params, UltrasphericalParams):
        return params.lam
    return UltrasphericalParams(params).lam


def _out(x, value):
    return float(value) if np.ndim(x) == 0 else value


def eval_jacobi(n: int, params, x):
    """Value of ``P_n^{(alpha, beta)}(x)``.

    ``params`` is a :class:`JacobiParams` or an ``(alpha, beta)`` pair.
    Negative ``n`` evaluates to zero, which is the convention the mixed
    identities need at their lowest degree.
    """
    a, b = _ab(params)
    xa = np.asarray(x, dtype=float)
    if n < 0:
        return _out(x, np.zeros_like(xa))
    p0 = np.ones_like(xa)
    if n == 0:
        return _out(x, p0)
    p1 = 0.5 * ((a + b + 2.0) * xa + (a - b))
    ab2 = a * a - b * b
    for k in range(1, n):
        s = 2.0 * k + a + b
        den = 2.0 * (k + 1) * (k + a + b + 1.0) * s
        if abs(den) < 1e-12 * (k + 1) ** 3:
            raise DegenerateRecurrence(
                f"recurrence denominator vanishes at degree {k + 1} "
                f"for (alpha, beta) = ({a}, {b})")
        c_lin = (s + 1.0) * ab2
        c_x = (s + 1.0) * (s + 2.0) * s
        c_prev = 2.0 * (k + a) * (k + b) * (s + 2.0)
        p0, p1 = p1, ((c_lin + c_x * xa) * p1 - c_prev * p0) / den
    return _out(x, p1)


def eval_ultraspherical(n: int, params, x):
    """Value of the Gegenbauer polynomial ``C_n^{(lam)}(x)``."""
    lam = _lam(params)
    xa = np.asarray(x, dtype=float)
    if n < 0:
        return _out(x, np.zeros_like(xa))
    c0 = np.ones_like(xa)
    if n == 0:
        return _out(x, c0)
    c1 = 2.0 * lam * xa
    for k in range(1, n):
        c0, c1 = c1, (2.0 * (k + lam) * xa * c1 - (k + 2.0 * lam - 1.0) * c0) / (k + 1)
    return _out(x, c1)


def eval_jacobi_derivative(n: int, params, x):
    """``d/dx P_n^{(a,b)}(x) = (n + a + b + 1)/2 * P_{n-1}^{(a+1,b+1)}(x)``."""
    a, b = _ab(params)
    if n <= 0:
        return _out(x, np.zeros_like(np.asarray(x, dtype=float)))
    return 0.5 * (n + a + b + 1.0) * eval_jacobi(n - 1, (a + 1.0, b + 1.0), x)


def eval_ultraspherical_derivative(n: int, params, x):
    lam = _lam(params)
    if n <= 0:
        return _out(x, np.zeros_like(np.asarray(x, dtype=float)))
    return 2.0 * lam * eval_ultraspherical(n - 1, lam + 1.0, x)


def evaluate(spec: PolySpec, x):
    if spec.family is Family.JACOBI:
        return eval_jacobi(spec.degree, spec.params, x)
    return eval_ultraspherical(spec.degree, spec.params, x)


def evaluate_derivative(spec: PolySpec, x):
    if spec.family is Family.JACOBI:
        return eval_jacobi_derivative(spec.degree, spec.params, x)
    return eval_ultraspherical_derivative(spec.degree, spec.params, x)
