"""Mixed recurrence identities for Jacobi and Gegenbauer polynomials.

Each catalogued identity is stored as a pair of evaluators ``lhs`` and
``rhs``; :func:`verify_identity` evaluates both and reports the relative
residual ``|lhs - rhs| / max(|lhs|, |rhs|, 1)``.  The coefficient functions
used by the interlacing checks live here too, so the interlace module and
the residual checks share one transcription.

Identity ids (``"I2.1"`` ... ``"I4.12"``) are fixed catalogue labels.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .errors import RegimeError
from .polyeval import eval_jacobi as _P, eval_ultraspherical as _C, pochhammer

__all__ = [
    "IdentityDef",
    "IdentityResidual",
    "IDENTITIES",
    "IDENTITY_IDS",
    "verify_identity",
    "verify_symmetry",
    "residual_sweep",
    "worst_residual",
    "q_coefficients",
]


# ---------------------------------------------------------------------------
# coefficient functions
#
# P_n^{(a,b)} vs P_{n+1}^{(a,b+1)}: beta_step_*
# P_n^{(a,b+1)} vs the quasi-orthogonal P_n^{(a,b-1)}: quasi_*
# P_n^{(a,b)} vs P_{n+1}^{(a+1,b+1)}: lift_*
# P_n^{(a,b)} vs P_n^{(a+1,b+1)}: equal_*
# Gegenbauer shifts lam -> lam+1, lam+3: gegen_*
# ---------------------------------------------------------------------------

def beta_step_a(n, a, b, x):
    return (a + b + 2 * n + 2) * (a + b + 2 * n + 3) * (1 + x) - 2 * (n + 1) * (a + n + 1)


def beta_step_b(n, a, b, x):
    return (a + 3 * b + 2 * n + 3) + (a + b + 2 * n + 3) * x


def beta_step_k(n, a):
    """Proof constant ``a + n + 1`` (unrelated to the Gegenbauer ``k_n``)."""
    return a + n + 1


def quasi_h(n, a, b):
    return pochhammer(a + b + n, 2)


def quasi_A(n, a, b, x):
    return pochhammer(a + b + 2 * n, 2) * (1 + x) - 2 * n * (a + n)


def quasi_B(n, a, b, x):
    return (a + b + 2 * n + 1) * x + (a + 3 * b + 2 * n + 1)


def lift_u(n, a, b, x):
    return (1 - x * x) * (a + b + n + 3) / 2


def lift_v(n, a, b):
    return 2 * (a + n + 2) * (b + n + 2) / (2 * n + a + b + 4)


def lift_c(n, a, b, x):
    return x - (a - b) / (2 * n + a + b + 4)


def lift_d(n, a, b):
    return 2 * (a + b + n + 2) * (a + b + 2 * n + 2)


def lift_e(n, a, b):
    return a + b + 2 * n + 3


def lift_f(n, a, b):
    e = lift_e(n, a, b)
    return e * e - 1


def lift_g(n, a, b):
    return 2 * (a + n + 1) * (b + n + 1) * (lift_e(n, a, b) + 1)


def q_coefficients(n, a, b) -> tuple[float, float, float]:
    """Coefficients ``(A, B, C)`` of the quadratic ``q(x) = A x^2 + B x + C``.

    ``q(x) = e c(x) (a^2 - b^2 + (e^2 - 1) x) - v d``, expanded.  The
    constant term is ``-v d - e (a - b)(a^2 - b^2)/(e + 1)``; the printed
    expansion has ``-b d`` there, which does not match the unexpanded form.
    """
    e = lift_e(n, a, b)
    ab2 = a * a - b * b
    A = e * (e * e - 1)
    B = e * ab2 - e * (a - b) * (e - 1)
    C = -lift_v(n, a, b) * lift_d(n, a, b) - e * (a - b) * ab2 / (e + 1)
    return A, B, C


def q_value(n, a, b, x):
    A, B, C = q_coefficients(n, a, b)
    return (A * x + B) * x + C


def equal_J(n, a, b, x):
    return (1 - x * x) * (a + b + n + 2) / 2


def equal_H(n):
    return n + 1


def equal_M(n, a, b, x):
    return x - (a - b) / (a + b + 2 * n + 2)


def gegen_A(n, lam, x):
    return (n + 2 * lam) / (2 * lam * (1 - x * x)) * ((2 * lam + n + 2) - (n + 1) * x * x)


def gegen_B(n, lam, x):
    return -(n + 1) * x * gegen_d2(n, lam, x) / (2 * lam * (1 - x * x))


def gegen_d2(n, lam, x):
    return (2 * n + 4 * lam + 3) - 2 * (n + lam + 1) * x * x


def gegen_h(n, lam):
    return (n + 2 * lam) * (n + 2 * lam + 1) / (2 * lam)


def gegen_H4(n, lam, x):
    return (gegen_d2(n, lam + 1, x) * gegen_d2(n, lam, x)
            - 2 * (lam + 1) * (1 - x * x) * gegen_h(n, lam + 1))


# ---------------------------------------------------------------------------
# catalogue
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityDef:
    id: str
    family: str  # "jacobi" | "ultraspherical"
    lhs: Callable
    rhs: Callable
    description: str
    n_min: int = 0
    # extra constraints beyond the family's basic parameter range
    lam_nonzero: bool = False
    beta_nonzero: bool = False
    x_interior: bool = False
    box: Mapping = field(default_factory=dict)


@dataclass(frozen=True)
class IdentityResidual:
    id: str
    n: int
    params: dict
    x: float
    lhs: float
    rhs: float
    rel_residual: float


def _j(lhs, rhs, ident, desc, **kw):
    box = {"alpha": (-1.0, 5.0), "beta": (-1.0, 5.0)}
    box.update(kw.pop("box", {}))
    return IdentityDef(ident, "jacobi", lhs, rhs, desc, box=box, **kw)


def _g(lhs, rhs, ident, desc, **kw):
    box = {"lambda": (-0.45, 5.0)}
    box.update(kw.pop("box", {}))
    return IdentityDef(ident, "ultraspherical", lhs, rhs, desc, box=box, **kw)


_CATALOGUE = [
    _j(lambda n, a, b, x: pochhammer(a + b + n + 1, 2) * (1 + x) * _P(n, (a, b + 2), x),
       lambda n, a, b, x: ((pochhammer(a + b + 2 * n + 1, 2) * (1 + x) - 2 * n * (a + n))
                           * _P(n, (a, b), x)
                           - (a + n) * ((a + 3 * b + 2 * n + 4) + (a + b + 2 * n + 2) * x)
                           * _P(n - 1, (a, b + 1), x)),
       "I2.1", "beta+2 in terms of (beta) and degree n-1 at beta+1"),
    _j(lambda n, a, b, x: pochhammer(a + b + n + 1, 2) * (1 + x) * _P(n + 1, (a, b + 1), x),
       lambda n, a, b, x: (beta_step_a(n, a, b, x) * _P(n + 1, (a, b - 1), x)
                           - beta_step_k(n, a) * beta_step_b(n, a, b, x) * _P(n, (a, b), x)),
       "I2.2", "I2.1 with n -> n+1, beta -> beta-1", beta_nonzero=True),
    _j(lambda n, a, b, x: quasi_h(n, a, b) * (1 + x) * _P(n, (a, b + 1), x),
       lambda n, a, b, x: (quasi_A(n, a, b, x) * _P(n, (a, b - 1), x)
                           - quasi_B(n, a, b, x) * (a + n) * _P(n - 1, (a, b), x)),
       "I2.5", "I2.1 with beta -> beta-1", beta_nonzero=True),
    _j(lambda n, a, b, x: lift_u(n, a, b, x) * _P(n + 1, (a + 1, b + 1), x),
       lambda n, a, b, x: (lift_v(n, a, b) * _P(n + 1, (a, b), x)
                           - (n + 2) * lift_c(n, a, b, x) * _P(n + 2, (a, b), x)),
       "I2.6", "(1-x^2) P_{n+1}^{(a+1,b+1)} via P_{n+1}, P_{n+2}"),
    _j(lambda n, a, b, x: (2 * (n + 2) * (n + a + b + 2) * (2 * n + a + b + 2)
                           * _P(n + 2, (a, b), x)),
       lambda n, a, b, x: ((a + b + 2 * n + 3)
                           * ((a * a - b * b) + x * (a + b + 2 * n + 4) * (a + b + 2 * n + 2))
                           * _P(n + 1, (a, b), x)
                           - 2 * (a + n + 1) * (b + n + 1) * (a + b + 2 * n + 4)
                           * _P(n, (a, b), x)),
       "I2.7", "three-term recurrence"),
    _j(lambda n, a, b, x: (lift_d(n, a, b) * lift_u(n, a, b, x)
                           * _P(n + 1, (a + 1, b + 1), x)),
       lambda n, a, b, x: (-q_value(n, a, b, x) * _P(n + 1, (a, b), x)
                           + lift_g(n, a, b) * lift_c(n, a, b, x) * _P(n, (a, b), x)),
       "I2.12", "combination defining the quadratic q"),
    _j(lambda n, a, b, x: equal_J(n, a, b, x) * _P(n, (a + 1, b + 1), x),
       lambda n, a, b, x: (2 * (a + n + 1) * (b + n + 1) / (a + b + 2 * n + 2)
                           * _P(n, (a, b), x)
                           - equal_H(n) * equal_M(n, a, b, x) * _P(n + 1, (a, b), x)),
       "I3.1", "equal-degree (a+1,b+1) shift"),
    _g(lambda n, lam, x: (n + lam + 1) * _C(n + 1, lam, x),
       lambda n, lam, x: lam * (_C(n + 1, lam + 1, x) - _C(n - 1, lam + 1, x)),
       "I4.1", "lambda -> lambda+1 difference"),
    _g(lambda n, lam, x: 2 * lam * (1 - x * x) * _C(n - 1, lam + 1, x),
       lambda n, lam, x: (2 * lam + n) * x * _C(n, lam, x) - (n + 1) * _C(n + 1, lam, x),
       "I4.2", "derivative relation", n_min=1),
    _g(lambda n, lam, x: (2 * (1 - x * x) * (n + lam + 1) - (n + 1)) * _C(n + 1, lam, x),
       lambda n, lam, x: (2 * lam * (1 - x * x) * _C(n + 1, lam + 1, x)
                          - (2 * lam + n) * x * _C(n, lam, x)),
       "I4.3", "I4.1 combined with I4.2", n_min=1),
    _g(lambda n, lam, x: 2 * (lam + 2) * (1 - x * x) * _C(n, lam + 3, x),
       lambda n, lam, x: (gegen_A(n, lam + 1, x) * _C(n, lam + 1, x)
                          + gegen_B(n, lam + 1, x) * _C(n + 1, lam + 1, x)),
       "I4.4", "lambda+3 via lambda+1 at degrees n, n+1", x_interior=True),
    _g(lambda n, lam, x: 2 * (lam + 2) * (1 - x * x) * _C(n, lam + 3, x),
       lambda n, lam, x: (gegen_A(n, lam + 1, x) * _C(n, lam + 1, x)
                          - gegen_d2(n, lam + 1, x) / (2 * (lam + 1) * (1 - x * x))
                          * ((n + 1) * x * _C(n + 1, lam + 1, x))),
       "I4.7", "I4.4 with the B coefficient expanded", x_interior=True),
    _g(lambda n, lam, x: (n + 1) * x * _C(n + 1, lam + 1, x),
       lambda n, lam, x: ((2 * lam + n + 2) * _C(n, lam + 1, x)
                          - 2 * (lam + 1) * (1 - x * x) * _C(n, lam + 2, x)),
       "I4.8", "degree n+1 at lambda+1 via degree n"),
    _g(lambda n, lam, x: 2 * (lam + 2) * (1 - x * x) * _C(n, lam + 3, x),
       lambda n, lam, x: (gegen_d2(n, lam + 1, x) * _C(n, lam + 2, x)
                          - gegen_h(n, lam + 1) * _C(n, lam + 1, x)),
       "I4.9", "three-term relation in lambda (shifted)"),
    _g(lambda n, lam, x: 2 * (lam + 1) * (1 - x * x) * _C(n, lam + 2, x),
       lambda n, lam, x: (gegen_d2(n, lam, x) * _C(n, lam + 1, x)
                          - gegen_h(n, lam) * _C(n, lam, x)),
       "I4.11", "three-term relation in lambda", lam_nonzero=True),
    _g(lambda n, lam, x: 4 * (lam + 1) * (lam + 2) * (1 - x * x) ** 2 * _C(n, lam + 3, x),
       lambda n, lam, x: (gegen_H4(n, lam, x) * _C(n, lam + 1, x)
                          - gegen_h(n, lam) * gegen_d2(n, lam + 1, x) * _C(n, lam, x)),
       "I4.12", "lambda+3 via lambda+1 and lambda with the quartic H_4", lam_nonzero=True),
]

IDENTITIES: dict[str, IdentityDef] = {d.id: d for d in _CATALOGUE}
IDENTITY_IDS = tuple(IDENTITIES)


def _unpack(ident: IdentityDef, params) -> dict:
    if isinstance(params, Mapping):
        p = dict(params)
    elif ident.family == "jacobi":
        if hasattr(params, "alpha"):
            p = {"alpha": params.alpha, "beta": params.beta}
        else:
            a, b = params
            p = {"alpha": a, "beta": b}
    else:
        p = {"lambda": getattr(params, "lam", params)}
    return {k: float(v) for k, v in p.items()}


def _check_regime(ident: IdentityDef, n: int, p: dict, x: float):
    if n < ident.n_min:
        raise RegimeError(f"{ident.id}: needs n >= {ident.n_min}")
    if ident.family == "jacobi":
        a, b = p["alpha"], p["beta"]
        if not (a > -1 and b > -1):
            raise RegimeError(f"{ident.id}: needs alpha > -1 and beta > -1")
        if ident.beta_nonzero and b == 0:
            raise RegimeError(f"{ident.id}: beta - 1 = -1 is excluded")
    else:
        lam = p["lambda"]
        if not lam > -0.5:
            raise RegimeError(f"{ident.id}: needs lambda > -1/2")
        if ident.lam_nonzero and lam == 0:
            raise RegimeError(f"{ident.id}: divides by 2 lambda, lambda = 0 excluded")
    if ident.x_interior and abs(x) == 1:
        raise RegimeError(f"{ident.id}: divides by 1 - x^2, x = +-1 excluded")


def _residual(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0)


def verify_identity(ident: str, n: int, params, x: float) -> IdentityResidual:
    """Evaluate both sides of identity ``ident`` at one point."""
    try:
        d = IDENTITIES[ident]
    except KeyError:
        raise KeyError(f"unknown identity {ident!r}; known: {', '.join(IDENTITY_IDS)}") from None
    p = _unpack(d, params)
    x = float(x)
    _check_regime(d, n, p, x)
    args = (p["alpha"], p["beta"]) if d.family == "jacobi" else (p["lambda"],)
    lhs = float(d.lhs(n, *args, x))
    rhs = float(d.rhs(n, *args, x))
    return IdentityResidual(ident, n, p, x, lhs, rhs, _residual(lhs, rhs))


def verify_symmetry(n: int, alpha: float, beta: float, x: float) -> IdentityResidual:
    """Residual of ``P_n^{(a,b)}(x) = (-1)^n P_n^{(b,a)}(-x)``."""
    lhs = float(_P(n, (alpha, beta), x))
    rhs = float((-1) ** n * _P(n, (beta, alpha), -x))
    return IdentityResidual("symmetry", n, {"alpha": float(alpha), "beta": float(beta)},
                            float(x), lhs, rhs, _residual(lhs, rhs))


def _draw(rng, spec):
    """One value from ``spec``: a fixed number or a half-open ``(lo, hi]`` box."""
    if np.isscalar(spec):
        return float(spec)
    lo, hi = spec
    return float(hi - rng.uniform(0.0, hi - lo))


def worst_residual(ident: str, trials: int, seed: int, box: Mapping | None = None,
                   n_max: int = 12) -> IdentityResidual:
    """Largest residual over ``trials`` seeded uniform draws.

    ``box`` maps parameter names (and optionally ``"n"`` and ``"x"``) to a
    fixed value or a ``(lo, hi)`` range; missing keys use the identity's
    default regime box, ``n`` uniform on ``[n_min, n_max]`` and ``x`` on
    ``[-1, 1]``.
    """
    d = IDENTITIES[ident]
    if trials < 1:
        raise ValueError("trials must be >= 1")
    spec = dict(d.box)
    spec.update(box or {})
    names = [k for k in ("alpha", "beta", "lambda") if k in d.box]
    n_spec = spec.get("n", (d.n_min, n_max))
    x_spec = spec.get("x", (-1.0, 1.0))
    rng = np.random.default_rng(seed)
    worst = None
    for _ in range(trials):
        if np.isscalar(n_spec):
            n = int(n_spec)
        else:
            n = int(rng.integers(n_spec[0], n_spec[1] + 1))
        p = {k: _draw(rng, spec[k]) for k in names}
        if np.isscalar(x_spec):
            x = float(x_spec)
        else:
            x = float(rng.uniform(*x_spec))
        r = verify_identity(ident, n, p, x)
        if worst is None or r.rel_residual > worst.rel_residual:
            worst = r
    return worst


def residual_sweep(ident: str, trials: int, seed: int, box: Mapping | None = None,
                   n_max: int = 12) -> float:
    """Maximum relative residual of ``ident`` over seeded random draws."""
    return worst_residual(ident, trials, seed, box, n_max).rel_residual
