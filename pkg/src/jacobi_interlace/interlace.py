"""Critical points and interlacing verdicts for pairs of Jacobi/Gegenbauer polynomials.

Pairs covered (``scenario`` codes):

``thm2.1``  P_n^{(a,b)}   vs P_{n+1}^{(a,b+1)},     point l_n
``cor2.1``  P_n^{(a,b)}   vs P_{n+1}^{(a+1,b)},     point r_n (mirror of thm2.1)
``rem2.1``  P_n^{(a,b+1)} vs P_n^{(a,b-1)},         -1 < b < 0, quasi-orthogonal partner
``thm2.2``  P_n^{(a,b)}   vs P_{n+1}^{(a+1,b+1)},   roots of a quadratic q
``thm3.1``  P_n^{(a,b)}   vs P_n^{(a+1,b+1)},       point gamma
``thm4.1``  C_n^{(lam)}   vs C_{n+1}^{(lam+1)},     points +-k_n
``thm4.2``  C_n^{(lam+3)} vs C_n^{(lam)},           roots of an even quartic H_4

Every ``check_*`` function verifies the proven statement for its pair and
raises :class:`~jacobi_interlace.errors.TheoremViolation` when the numbers
disagree.  When a critical point or a zero of the partner polynomial sits
within ``coincidence_tol`` of a zero the verdict is marked degenerate and
makes no full/partial claim.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

from . import identities as ids
from .config import get_settings
from .errors import RegimeError, TheoremViolation
from .polyeval import PolySpec, eval_jacobi
from .zerofinder import ZeroSet, compute_zeros, compute_zeros_quasi

__all__ = [
    "Scenario",
    "QuadraticQ",
    "CriticalPointSet",
    "Interval",
    "InterlacingVerdict",
    "classify_pair",
    "critical_linear",
    "quadratic_q",
    "critical_k",
    "quartic_h",
    "check_theorem_2_1",
    "check_corollary_2_1",
    "check_remark_2_1",
    "check_theorem_2_2",
    "check_theorem_3_1",
    "check_theorem_4_1",
    "check_theorem_4_2",
    "run_scenario",
]


class Scenario(str, enum.Enum):
    THM2_1 = "thm2.1"
    COR2_1 = "cor2.1"
    REM2_1 = "rem2.1"
    THM2_2 = "thm2.2"
    THM3_1 = "thm3.1"
    THM4_1 = "thm4.1"
    THM4_2 = "thm4.2"

    @property
    def family(self) -> str:
        return "ultraspherical" if self in (Scenario.THM4_1, Scenario.THM4_2) else "jacobi"


@dataclass(frozen=True)
class QuadraticQ:
    A: float
    B: float
    C: float
    discriminant: float
    q_minus: float
    q_plus: float
    x0: float
    y0: float

    def __call__(self, x):
        return (self.A * x + self.B) * x + self.C

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in
                ("A", "B", "C", "discriminant", "q_minus", "q_plus", "x0", "y0")}


@dataclass(frozen=True)
class CriticalPointSet:
    scenario: Scenario
    l_n: Optional[float] = None
    r_n: Optional[float] = None
    gamma: Optional[float] = None
    k_n: Optional[float] = None
    q: Optional[QuadraticQ] = None
    # ascending coefficients c0..c4 of H_4; odd ones are exactly zero
    h4_coeffs: Optional[tuple] = None
    h4_roots: tuple = ()
    b_root: Optional[float] = None
    extras: dict = field(default_factory=dict)

    def points(self) -> dict[str, float]:
        """Named point locations used to annotate intervals."""
        pts = {}
        for name in ("l_n", "r_n", "gamma", "b_root"):
            v = getattr(self, name)
            if v is not None:
                pts[name] = v
        if self.k_n is not None:
            pts["-k_n"] = -self.k_n
            pts["+k_n"] = self.k_n
        if self.q is not None:
            pts["q_minus"] = self.q.q_minus
            pts["q_plus"] = self.q.q_plus
        for i, r in enumerate(self.h4_roots, 1):
            pts[f"-h4_root{i}"] = -r
            pts[f"+h4_root{i}"] = r
        return pts

    def to_dict(self) -> dict:
        d = {"scenario": self.scenario.value, "l_n": self.l_n, "r_n": self.r_n,
             "gamma": self.gamma, "k_n": self.k_n, "b_root": self.b_root,
             "q": self.q.to_dict() if self.q else None,
             "h4_coeffs": list(self.h4_coeffs) if self.h4_coeffs else None,
             "h4_roots": list(self.h4_roots)}
        d.update(self.extras)
        return d


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float
    zeros_inside: int
    critical_inside: tuple = ()

    def contains(self, x: float) -> bool:
        return self.lo < x < self.hi

    def to_dict(self) -> dict:
        return {"lo": _finite_or_none(self.lo), "hi": _finite_or_none(self.hi),
                "zeros_inside": self.zeros_inside,
                "critical_inside": list(self.critical_inside)}


def _finite_or_none(v):
    return float(v) if math.isfinite(v) else None


@dataclass
class InterlacingVerdict:
    """Outcome of comparing the zeros of two polynomials.

    ``breakdown_intervals`` lists the intervals between consecutive zeros of
    the reference polynomial that do not hold exactly one zero of the other.
    ``placements`` is the occupancy ledger in the frame the proof works in
    (it can differ from the breakdown frame; see ``stats["frame"]``).
    """

    scenario: Optional[Scenario]
    pair: tuple
    zeros_a: np.ndarray
    zeros_b: np.ndarray
    full: Optional[bool]
    breakdown_intervals: list
    placements: list = field(default_factory=list)
    classification: Optional[str] = None
    cases: tuple = ()
    degenerate: bool = False
    critical: Optional[CriticalPointSet] = None
    stats: dict = field(default_factory=dict)

    @property
    def partial(self) -> Optional[bool]:
        return None if self.full is None else not self.full

    def to_dict(self) -> dict:
        def spec_dict(s):
            return s.to_dict() if isinstance(s, PolySpec) else None
        return {
            "scenario": self.scenario.value if self.scenario else None,
            "spec_a": spec_dict(self.pair[0]),
            "spec_b": spec_dict(self.pair[1]),
            "zeros_a": [float(z) for z in self.zeros_a],
            "zeros_b": [float(z) for z in self.zeros_b],
            "critical": self.critical.to_dict() if self.critical else {},
            "full": self.full,
            "breakdown": [iv.to_dict() for iv in self.breakdown_intervals],
            "degenerate": self.degenerate,
            "placements": [iv.to_dict() for iv in self.placements],
            "classification": self.classification,
            "cases": list(self.cases),
            "stats": self.stats,
        }


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _zeros_of(z) -> tuple[np.ndarray, Optional[PolySpec]]:
    if isinstance(z, ZeroSet):
        return np.asarray(z.zeros, dtype=float), z.spec
    return np.sort(np.asarray(z, dtype=float)), None


def occupancy(edges: Sequence[float], points: np.ndarray,
              critical: Mapping[str, float] | None = None) -> list[Interval]:
    """Count ``points`` strictly inside each ``(edges[i], edges[i+1])``."""
    edges = np.asarray(edges, dtype=float)
    points = np.asarray(points, dtype=float)
    critical = critical or {}
    out = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        k = int(np.count_nonzero((points > lo) & (points < hi)))
        crit = tuple(name for name, v in critical.items() if lo < v < hi)
        out.append(Interval(float(lo), float(hi), k, crit))
    return out


def _near(a: np.ndarray, b, tol: float) -> bool:
    a = np.asarray(a, dtype=float)
    b = np.atleast_1d(np.asarray(b, dtype=float))
    if a.size == 0 or b.size == 0:
        return False
    return bool(np.min(np.abs(a[:, None] - b[None, :])) < tol)


def classify_pair(zs_a, zs_b, critical: Mapping[str, float] | None = None,
                  tol: float | None = None) -> InterlacingVerdict:
    """Interlacing classification of two zero sets.

    Consecutive degrees: the larger set is the reference; each interval
    between its consecutive zeros must hold exactly one zero of the other.
    Equal degrees: ``zs_a`` is the reference and the same one-per-interval
    rule is applied to its interior intervals, which is equivalent to strict
    alternation in one of the two possible orders.
    """
    tol = get_settings().coincidence_tol if tol is None else tol
    a, spec_a = _zeros_of(zs_a)
    b, spec_b = _zeros_of(zs_b)
    if b.size == a.size + 1:
        frame, other = b, a
    elif a.size == b.size + 1 or a.size == b.size:
        frame, other = a, b
    else:
        raise ValueError(f"degrees {a.size} and {b.size} are neither equal nor consecutive")
    degenerate = _near(frame, other, tol)
    interior = occupancy(frame, other, critical)
    placements = occupancy(np.concatenate([[-np.inf], frame, [np.inf]]), other, critical)
    if degenerate:
        full, breakdown = None, []
    else:
        breakdown = [iv for iv in interior if iv.zeros_inside != 1]
        full = not breakdown
    return InterlacingVerdict(None, (spec_a, spec_b), a, b, full, breakdown,
                              placements=placements, degenerate=degenerate,
                              stats={"frame": "a" if frame is a else "b"})


# ---------------------------------------------------------------------------
# critical points
# ---------------------------------------------------------------------------

def _require(cond: bool, msg: str):
    if not cond:
        raise RegimeError(msg)


def critical_linear(scenario, n: int, alpha: float, beta: float) -> CriticalPointSet:
    """Linear-coefficient critical point for the Jacobi scenarios."""
    sc = Scenario(scenario)
    a, b = float(alpha), float(beta)
    _require(n >= 1, "n must be at least 1")
    if sc is Scenario.THM2_1:
        _require(a > -1 and b > 0, f"thm2.1 needs alpha > -1, beta > 0 (got {a}, {b})")
        l_n = -1 + 2 * (n + 1) * (a + n + 1) / ((a + b + 2 * n + 2) * (a + b + 2 * n + 3))
        return CriticalPointSet(sc, l_n=l_n)
    if sc is Scenario.COR2_1:
        _require(a > 0 and b > 0, f"cor2.1 needs alpha > 0, beta > 0 (got {a}, {b})")
        r_n = 1 - 2 * (n + 1) * (b + n + 1) / ((a + b + 2 * n + 2) * (a + b + 2 * n + 3))
        return CriticalPointSet(sc, r_n=r_n)
    if sc is Scenario.REM2_1:
        _require(a > -1 and -1 < b < 0, f"rem2.1 needs alpha > -1, -1 < beta < 0 (got {a}, {b})")
        return CriticalPointSet(sc, b_root=-1 - 2 * b / (a + b + 2 * n + 1))
    if sc is Scenario.THM3_1:
        _require(a > -1 and b > -1, f"thm3.1 needs alpha, beta > -1 (got {a}, {b})")
        return CriticalPointSet(sc, gamma=(a - b) / (a + b + 2 * n + 2))
    raise ValueError(f"{sc.value} has no linear critical point")


def quadratic_q(n: int, alpha: float, beta: float) -> QuadraticQ:
    """The quadratic whose sign changes can host extra zeros (P_n vs P_{n+1}^{(a+1,b+1)})."""
    a, b = float(alpha), float(beta)
    _require(a > -1 and b > -1, f"needs alpha, beta > -1 (got {a}, {b})")
    A, B, C = ids.q_coefficients(n, a, b)
    disc = B * B - 4 * A * C
    root = math.sqrt(disc) if disc > 0 else 0.0
    t = -0.5 * (B + math.copysign(root, B) if B != 0 else root)
    r1 = t / A
    r2 = C / t if t != 0 else -r1
    q_minus, q_plus = sorted((r1, r2))
    return QuadraticQ(A, B, C, disc, q_minus, q_plus, -B / (2 * A), C - B * B / (4 * A))


def critical_k(n: int, lam: float) -> CriticalPointSet:
    lam = float(lam)
    _require(lam > -0.5, f"lambda must exceed -1/2 (got {lam})")
    _require(n >= 0, "n must be nonnegative")
    return CriticalPointSet(Scenario.THM4_1,
                            k_n=math.sqrt((n + 2 * lam + 1) / (2 * n + 2 * lam + 2)))


def quartic_h(n: int, lam: float) -> CriticalPointSet:
    """Even quartic ``H_4`` comparing C_n^{(lam)} with C_n^{(lam+3)}.

    Also reports the two ``d_2`` quadratics (as ``(constant, x^2)``
    coefficient pairs), both ``h_n`` values and the roots of ``H_4`` in
    ``(0, 1)``.
    """
    lam = float(lam)
    _require(lam > -0.5, f"lambda must exceed -1/2 (got {lam})")
    _require(lam != 0, "lambda = 0 excluded (division by 2 lambda)")
    p0, p2 = 2 * n + 4 * lam + 3, 2 * (n + lam + 1)          # d_2^{(n,lam)}
    s0, s2 = 2 * n + 4 * lam + 7, 2 * (n + lam + 2)          # d_2^{(n,lam+1)}
    K = 2 * (lam + 1) * ids.gegen_h(n, lam + 1)
    c0 = p0 * s0 - K
    c2 = K - (p0 * s2 + p2 * s0)
    c4 = p2 * s2
    # roots in t = x^2
    roots = []
    disc = c2 * c2 - 4 * c4 * c0
    if disc >= 0:
        sq = math.sqrt(disc)
        for t in ((-c2 - sq) / (2 * c4), (-c2 + sq) / (2 * c4)):
            if 0 < t < 1:
                roots.append(math.sqrt(t))
    extras = {"d2_lambda": (p0, -p2), "d2_lambda_plus_1": (s0, -s2),
              "h_n_lambda": ids.gegen_h(n, lam), "h_n_lambda_plus_1": ids.gegen_h(n, lam + 1)}
    return CriticalPointSet(Scenario.THM4_2, h4_coeffs=(c0, 0.0, c2, 0.0, c4),
                            h4_roots=tuple(sorted(roots)), extras=extras)


# ---------------------------------------------------------------------------
# theorem checkers
# ---------------------------------------------------------------------------

def _violation(sc: Scenario, msg: str):
    raise TheoremViolation(f"{sc.value}: {msg}")


def _trichotomy(sc: Scenario, intervals: list[Interval]):
    for iv in intervals:
        k = iv.zeros_inside + len(iv.critical_inside)
        if k != 1:
            _violation(sc, f"interval ({iv.lo:.6g}, {iv.hi:.6g}) holds {iv.zeros_inside} "
                           f"zeros and {list(iv.critical_inside)}")


def _annotate(verdict: InterlacingVerdict, sc: Scenario, crit: CriticalPointSet,
              placements, pair, **stats) -> InterlacingVerdict:
    verdict.scenario = sc
    verdict.critical = crit
    verdict.placements = placements
    verdict.pair = tuple(z.spec for z in pair)
    verdict.stats["max_residual"] = max(z.max_abs_residual for z in pair)
    verdict.stats.update(stats)
    return verdict


def check_theorem_2_1(n: int, alpha: float, beta: float) -> InterlacingVerdict:
    """P_n^{(a,b)} against P_{n+1}^{(a,b+1)}: one zero or l_n per interval."""
    sc = Scenario.THM2_1
    crit = critical_linear(sc, n, alpha, beta)
    tol = get_settings().coincidence_tol
    zx = compute_zeros(PolySpec.jacobi(n, alpha, beta))
    zw = compute_zeros(PolySpec.jacobi(n + 1, alpha, beta + 1))
    x, w = zx.zeros, zw.zeros
    pts = crit.points()
    degenerate = _near(w, x, tol) or _near(w, crit.l_n, tol) or _near(x, crit.l_n, tol)
    placements = occupancy(np.concatenate([[-1.0], w, [1.0]]), x, pts)
    verdict = classify_pair(zx, zw, pts, tol)
    if not degenerate:
        _trichotomy(sc, placements[:-1])
        if placements[-1].zeros_inside or placements[-1].critical_inside:
            _violation(sc, "zeros beyond the largest zero of P_{n+1}^{(a,b+1)}")
        predicted = bool(w[0] > crit.l_n)
        if verdict.full != predicted:
            _violation(sc, f"full={verdict.full} but w_1 > l_n is {predicted}")
    else:
        verdict.full, verdict.breakdown_intervals, verdict.degenerate = None, [], True
    return _annotate(verdict, sc, crit, placements, (zx, zw), frame="b")


def check_corollary_2_1(n: int, alpha: float, beta: float) -> InterlacingVerdict:
    """P_n^{(a,b)} against P_{n+1}^{(a+1,b)}: one zero or r_n per interval."""
    sc = Scenario.COR2_1
    crit = critical_linear(sc, n, alpha, beta)
    tol = get_settings().coincidence_tol
    zx = compute_zeros(PolySpec.jacobi(n, alpha, beta))
    zw = compute_zeros(PolySpec.jacobi(n + 1, alpha + 1, beta))
    x, w = zx.zeros, zw.zeros
    pts = crit.points()
    degenerate = _near(w, x, tol) or _near(w, crit.r_n, tol) or _near(x, crit.r_n, tol)
    placements = occupancy(np.concatenate([[-1.0], w, [1.0]]), x, pts)
    verdict = classify_pair(zx, zw, pts, tol)
    if not degenerate:
        _trichotomy(sc, placements[1:])
        if placements[0].zeros_inside or placements[0].critical_inside:
            _violation(sc, "zeros below the smallest zero of P_{n+1}^{(a+1,b)}")
        predicted = bool(w[-1] < crit.r_n)
        if verdict.full != predicted:
            _violation(sc, f"full={verdict.full} but w_(n+1) < r_n is {predicted}")
    else:
        verdict.full, verdict.breakdown_intervals, verdict.degenerate = None, [], True
    return _annotate(verdict, sc, crit, placements, (zx, zw), frame="b")


def check_remark_2_1(n: int, alpha: float, beta: float) -> InterlacingVerdict:
    """P_n^{(a,b+1)} against the quasi-orthogonal P_n^{(a,b-1)}, -1 < b < 0."""
    sc = Scenario.REM2_1
    crit = critical_linear(sc, n, alpha, beta)
    tol = get_settings().coincidence_tol
    zX = compute_zeros(PolySpec.jacobi(n, alpha, beta + 1))
    zy = compute_zeros_quasi(PolySpec.jacobi(n, alpha, beta - 1))
    X, y = zX.zeros, zy.zeros
    pts = {"-1": -1.0, **crit.points()}
    degenerate = _near(X, y, tol) or _near(X, crit.b_root, tol) or _near(y, crit.b_root, tol)
    verdict = classify_pair(zX, zy, crit.points(), tol)
    placements = occupancy(np.concatenate([[-np.inf], y, [np.inf]]), X, pts)
    if zy.crosscheck is False:
        _violation(sc, "quasi-orthogonal zeros do not interlace with P_{n-1}^{(a,b)}")
    if not degenerate:
        # at successive y's: parity flips once for each of (1+x), B(x) that changes sign
        for iv in placements[1:-1]:
            flips = len(iv.critical_inside)
            if iv.zeros_inside % 2 != (1 if flips % 2 == 0 else 0):
                _violation(sc, f"parity fails on ({iv.lo:.6g}, {iv.hi:.6g})")
    else:
        verdict.full, verdict.breakdown_intervals, verdict.degenerate = None, [], True
    b_in_breakdown = any(iv.contains(crit.b_root) for iv in verdict.breakdown_intervals)
    return _annotate(verdict, sc, crit, placements, (zX, zy),
                     frame="a", b_root_in_breakdown=b_in_breakdown)


def _check_q_invariants(sc: Scenario, q: QuadraticQ, n: int, a: float, b: float):
    q1 = 4 * (n + 1) * (b + n + 1) * (b + n + 2)
    qm1 = 4 * (n + 1) * (a + n + 1) * (a + n + 2)
    problems = []
    if not q.A > 0:
        problems.append("A <= 0")
    if not q.discriminant > 0:
        problems.append("discriminant <= 0")
    if abs(q(1.0) - q1) > 1e-10 * abs(q1) or abs(q(-1.0) - qm1) > 1e-10 * abs(qm1):
        problems.append("q(+-1) closed forms")
    if not (-1 < q.q_minus < q.q_plus < 1):
        problems.append("roots outside (-1, 1)")
    if not (-1 < q.x0 < 1 and q.y0 < 0):
        problems.append("vertex")
    if problems:
        _violation(sc, "quadratic invariants failed: " + ", ".join(problems))


def check_theorem_2_2(n: int, alpha: float, beta: float) -> InterlacingVerdict:
    """P_n^{(a,b)} against P_{n+1}^{(a+1,b+1)}: at least n-3 intervals occupied."""
    sc = Scenario.THM2_2
    _require(n >= 4, "thm2.2 needs n >= 4")
    q = quadratic_q(n, alpha, beta)
    crit = CriticalPointSet(sc, q=q)
    _check_q_invariants(sc, q, n, float(alpha), float(beta))
    tol = get_settings().coincidence_tol
    zx = compute_zeros(PolySpec.jacobi(n, alpha, beta))
    zX = compute_zeros(PolySpec.jacobi(n + 1, alpha + 1, beta + 1))
    x, X = zx.zeros, zX.zeros
    pts = crit.points()
    degenerate = _near(x, X, tol) or _near(x, [q.q_minus, q.q_plus], tol)
    placements = occupancy(np.concatenate([[-1.0], x, [1.0]]), X, pts)
    verdict = classify_pair(zx, zX, pts, tol)
    interior = placements[1:-1]
    odd = sum(iv.zeros_inside % 2 for iv in interior)
    stats = {"frame": "b", "odd_intervals": odd, "sign_relation_intervals": 0}
    cases = []
    if not degenerate:
        plus = eval_jacobi(n + 1, (alpha + 1, beta + 1), x)
        qx = q(x)
        for k, iv in enumerate(interior):
            if qx[k] * qx[k + 1] < 0:
                stats["sign_relation_intervals"] += 1
                if np.sign(plus[k]) != np.sign(plus[k + 1]) or iv.zeros_inside % 2:
                    _violation(sc, f"sign relation fails on ({iv.lo:.6g}, {iv.hi:.6g})")
            elif iv.zeros_inside % 2 == 0:
                _violation(sc, f"even count without a root of q on ({iv.lo:.6g}, {iv.hi:.6g})")
        if odd < n - 3:
            _violation(sc, f"only {odd} of {n - 1} intervals hold an odd number of zeros")
        left, right = placements[0], placements[-1]
        if all(iv.zeros_inside >= 1 for iv in interior):
            cases.append("a")
        if left.critical_inside and left.zeros_inside == 1:
            cases.append("b")
        if right.critical_inside and right.zeros_inside == 1:
            cases.append("c")
        if any(iv.critical_inside and iv.zeros_inside == 2 for iv in interior):
            cases.append("d")
        if (left.zeros_inside and not left.critical_inside) or \
                (right.zeros_inside and not right.critical_inside):
            cases.append("e")
    else:
        verdict.full, verdict.breakdown_intervals, verdict.degenerate = None, [], True
    verdict = _annotate(verdict, sc, crit, placements, (zx, zX), **stats)
    verdict.cases = tuple(cases)
    verdict.classification = next((c for c in ("d", "a", "b", "c", "e") if c in cases), None)
    return verdict


def check_theorem_3_1(n: int, alpha: float, beta: float) -> InterlacingVerdict:
    """P_n^{(a,b)} against P_n^{(a+1,b+1)}: at least n-2 interior placements."""
    sc = Scenario.THM3_1
    crit = critical_linear(sc, n, alpha, beta)
    tol = get_settings().coincidence_tol
    zx = compute_zeros(PolySpec.jacobi(n, alpha, beta))
    zX = compute_zeros(PolySpec.jacobi(n, alpha + 1, beta + 1))
    x, X = zx.zeros, zX.zeros
    pts = crit.points()
    degenerate = _near(x, X, tol) or _near(x, crit.gamma, tol)
    placements = occupancy(np.concatenate([[-1.0], x, [1.0]]), X, pts)
    verdict = classify_pair(zx, zX, pts, tol)
    interior = placements[1:-1]
    inside = sum(iv.zeros_inside for iv in interior)
    left, right = placements[0].zeros_inside, placements[-1].zeros_inside
    stats = {"frame": "a", "interior_placements": inside,
             "outer_placements": (left, right)}
    if not degenerate:
        for iv in interior:
            expect_even = "gamma" in iv.critical_inside
            if (iv.zeros_inside % 2 == 0) != expect_even:
                _violation(sc, f"parity fails on ({iv.lo:.6g}, {iv.hi:.6g})")
        if inside < n - 2:
            _violation(sc, f"only {inside} interior placements, need {n - 2}")
        host = [iv for iv in interior if "gamma" in iv.critical_inside]
        if host:
            k = host[0].zeros_inside
            if not ((k == 2 and (left, right) == (0, 0)) or (k == 0 and (left, right) == (1, 1))):
                _violation(sc, f"remaining two zeros misplaced: {k} in the gamma interval, "
                               f"outer ({left}, {right})")
            stats["remaining_two"] = "same-interval" if k == 2 else "outer"
        else:
            if any(iv.zeros_inside != 1 for iv in interior) or left + right != 1:
                _violation(sc, "gamma outside (x_1, x_n) but interlacing is not full")
            stats["remaining_two"] = "none"
    else:
        verdict.full, verdict.breakdown_intervals, verdict.degenerate = None, [], True
    return _annotate(verdict, sc, crit, placements, (zx, zX), **stats)


def check_theorem_4_1(n: int, lam: float) -> InterlacingVerdict:
    """C_n^{(lam)} against C_{n+1}^{(lam+1)}: one zero or +-k_n per interval."""
    sc = Scenario.THM4_1
    _require(n >= 1, "n must be at least 1")
    crit = critical_k(n, lam)
    tol = get_settings().coincidence_tol
    zx = compute_zeros(PolySpec.ultraspherical(n, lam))
    zw = compute_zeros(PolySpec.ultraspherical(n + 1, lam + 1))
    x, w = zx.zeros, zw.zeros
    pts = crit.points()
    ks = [-crit.k_n, crit.k_n]
    degenerate = _near(w, x, tol) or _near(w, ks, tol) or _near(x, ks, tol)
    placements = occupancy(np.concatenate([[-1.0], w, [1.0]]), x, pts)
    verdict = classify_pair(zx, zw, pts, tol)
    if not degenerate:
        _trichotomy(sc, placements)
        predicted = bool(w[-1] < crit.k_n)
        if verdict.full != predicted:
            _violation(sc, f"full={verdict.full} but w_(n+1) < k_n is {predicted}")
    else:
        verdict.full, verdict.breakdown_intervals, verdict.degenerate = None, [], True
    return _annotate(verdict, sc, crit, placements, (zx, zw), frame="b")


def check_theorem_4_2(n: int, lam: float) -> InterlacingVerdict:
    """C_n^{(lam+3)} against C_n^{(lam)} on the positive (and mirrored negative) zeros.

    ``breakdown_intervals`` are taken between successive zeros of
    ``C_n^{(lam+3)}``; the bound of at most two breakdowns per side and the
    parity rule are checked between successive positive zeros of
    ``C_n^{(lam)}``, annotated with the positive roots of ``H_4``.
    """
    sc = Scenario.THM4_2
    _require(n >= 2, "n must be at least 2")
    crit = quartic_h(n, lam)
    tol = get_settings().coincidence_tol
    zX = compute_zeros(PolySpec.ultraspherical(n, lam + 3))
    zx = compute_zeros(PolySpec.ultraspherical(n, lam))
    Xp, xp = zX.positive, zx.positive
    h4 = crit.h4_coeffs
    pos_pts = {f"h4_root{i}": r for i, r in enumerate(crit.h4_roots, 1)}
    degenerate = _near(Xp, xp, tol) or _near(xp, crit.h4_roots, tol)

    half = classify_pair(Xp, xp, pos_pts, tol)
    mirrored = [Interval(-iv.hi, -iv.lo, iv.zeros_inside,
                         tuple("-" + c for c in iv.critical_inside))
                for iv in reversed(half.breakdown_intervals)]
    positive = [Interval(iv.lo, iv.hi, iv.zeros_inside,
                         tuple("+" + c for c in iv.critical_inside))
                for iv in half.breakdown_intervals]
    placements = occupancy(np.concatenate([[0.0], xp, [1.0]]), Xp, pos_pts)
    interior = placements[1:-1]
    stats = {"frame": "a", "positive_breakdowns": sum(iv.zeros_inside != 1 for iv in interior),
             "h4_sign_changes": 0,
             "h_n_sign": math.copysign(1.0, crit.extras["h_n_lambda"]),
             "max_residual": max(zX.max_abs_residual, zx.max_abs_residual)}
    if not degenerate:
        hx = h4[0] + h4[2] * xp**2 + h4[4] * xp**4
        for k, iv in enumerate(interior):
            flip = hx[k] * hx[k + 1] < 0
            stats["h4_sign_changes"] += int(flip)
            if (iv.zeros_inside % 2 == 0) != flip:
                _violation(sc, f"parity fails on ({iv.lo:.6g}, {iv.hi:.6g})")
        if stats["positive_breakdowns"] > 2:
            _violation(sc, f"{stats['positive_breakdowns']} positive-side breakdowns")
        full = half.full
        breakdown = mirrored + positive
    else:
        full, breakdown = None, []
    verdict = InterlacingVerdict(sc, (zX.spec, zx.spec), zX.zeros, zx.zeros, full, breakdown,
                                 placements=placements, degenerate=degenerate,
                                 critical=crit, stats=stats)
    return verdict


_CHECKERS = {
    Scenario.THM2_1: check_theorem_2_1,
    Scenario.COR2_1: check_corollary_2_1,
    Scenario.REM2_1: check_remark_2_1,
    Scenario.THM2_2: check_theorem_2_2,
    Scenario.THM3_1: check_theorem_3_1,
    Scenario.THM4_1: check_theorem_4_1,
    Scenario.THM4_2: check_theorem_4_2,
}


def run_scenario(scenario, n: int, alpha: float | None = None, beta: float | None = None,
                 lam: float | None = None) -> InterlacingVerdict:
    """Dispatch to the checker for ``scenario`` with the matching parameters."""
    sc = Scenario(scenario)
    if sc.family == "ultraspherical":
        if lam is None:
            raise RegimeError(f"{sc.value} needs lambda")
        return _CHECKERS[sc](n, lam)
    if alpha is None or beta is None:
        raise RegimeError(f"{sc.value} needs alpha and beta")
    return _CHECKERS[sc](n, alpha, beta)
