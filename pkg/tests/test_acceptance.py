"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` or ``python3 tests/test_acceptance.py``.
Tolerances and draw counts are fixed; any relaxation would defeat the point.
"""
from __future__ import annotations

import math
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import grid_bisection_zeros, jacobi_sum  # noqa: E402

from jacobi_interlace.errors import TheoremViolation  # noqa: E402
from jacobi_interlace.identities import IDENTITY_IDS, residual_sweep  # noqa: E402
from jacobi_interlace.interlace import (  # noqa: E402
    check_corollary_2_1,
    check_theorem_2_1,
    check_theorem_2_2,
    check_theorem_3_1,
    check_theorem_4_1,
    check_theorem_4_2,
    critical_k,
    critical_linear,
    quadratic_q,
)
from jacobi_interlace.polyeval import PolySpec  # noqa: E402
from jacobi_interlace.sweep import run_sweep  # noqa: E402
from jacobi_interlace.tables import TableId, run_table  # noqa: E402
from jacobi_interlace.zerofinder import compute_zeros  # noqa: E402

SEED = 20240611
INV_SQRT2 = 1 / math.sqrt(2)


def report(capsys, number: int, title: str, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    assert ok, line


def _open_box(rng, lo, hi, size):
    """Uniform draws on the half-open box (lo, hi]."""
    return hi - rng.uniform(0.0, hi - lo, size)


# -- 1 ------------------------------------------------------------------------

def test_criterion_1_table_reproduction(capsys):
    t0 = time.perf_counter()
    reports = [run_table(t) for t in TableId]
    elapsed = time.perf_counter() - t0
    cells = [c for r in reports for c in r.cells]
    flagged = [c for c in cells if c.status == "paper-discrepancy"]
    verdicts_ok = all(v.ok for r in reports for v in r.verdicts)
    cells_ok = all(c.status == "match" for c in cells if c not in flagged)
    flagged_ok = len(flagged) == 2 and all(
        abs(abs(c.computed) - INV_SQRT2) <= 1e-10 for c in flagged)
    worst = max(abs(c.computed - c.printed) for c in cells if c not in flagged)
    ok = verdicts_ok and cells_ok and flagged_ok and elapsed < 5.0
    report(capsys, 1, "tables T1-T11 reproduced", ok,
           f"{len(cells)} cells, worst |diff| {worst:.2e}, {len(flagged)} exempt cells at "
           f"+-1/sqrt2, {elapsed:.2f} s")


# -- 2 ------------------------------------------------------------------------

def test_criterion_2_critical_values(capsys):
    l12 = critical_linear("thm2.1", 12, 0.5, 1).l_n
    q1 = quadratic_q(8, -0.9, 40)
    q2 = quadratic_q(6, 27, 29)
    ok = (abs(l12 + 0.552) <= 5e-4
          and abs(q1.q_minus + 0.9924) <= 1e-4 and abs(q1.q_plus - 0.7742) <= 1e-4
          and abs(q2.q_minus + 0.9522) <= 1e-4 and abs(q2.q_plus - 0.9466) <= 1e-4)
    report(capsys, 2, "critical values", ok,
           f"l_12 = {l12:.6f}, q(8,-0.9,40) = ({q1.q_minus:.6f}, {q1.q_plus:.6f}), "
           f"q(6,27,29) = ({q2.q_minus:.6f}, {q2.q_plus:.6f})")


# -- 3 ------------------------------------------------------------------------

def test_criterion_3_identity_suite(capsys):
    t0 = time.perf_counter()
    worst = {i: residual_sweep(i, 1000, SEED) for i in IDENTITY_IDS}
    elapsed = time.perf_counter() - t0
    top = max(worst, key=worst.get)
    ok = len(worst) == 16 and max(worst.values()) <= 1e-9 and elapsed < 10.0
    report(capsys, 3, "identity residuals", ok,
           f"{len(worst)} identities x 1000 draws, max {worst[top]:.2e} ({top}), "
           f"{elapsed:.2f} s")


# -- 4 ------------------------------------------------------------------------

def _run_draws(check, draws):
    """(failures, degenerate, verdicts) over ``draws``; a TheoremViolation is a failure."""
    failures, degenerate, verdicts = [], 0, []
    for args in draws:
        try:
            v = check(*args)
        except TheoremViolation as exc:
            failures.append((args, str(exc)))
            continue
        if v.degenerate:
            degenerate += 1
            continue
        verdicts.append((args, v))
    return failures, degenerate, verdicts


def _jacobi_draws(rng, count, n_range, a_box, b_box):
    ns = rng.integers(n_range[0], n_range[1] + 1, count)
    return list(zip(ns.tolist(), _open_box(rng, *a_box, count).tolist(),
                    _open_box(rng, *b_box, count).tolist()))


def _property_failures():
    rng = np.random.default_rng(SEED)
    out = {}

    draws = _jacobi_draws(rng, 1000, (2, 30), (-1, 5), (0, 5))
    fails, deg, vs = _run_draws(check_theorem_2_1, draws)
    for args, v in vs:
        if v.full != bool(v.zeros_b[0] > v.critical.l_n):
            fails.append((args, "iff condition"))
        if any(iv.zeros_inside + len(iv.critical_inside) != 1 for iv in v.placements[:-1]):
            fails.append((args, "trichotomy"))
    out["thm2.1"] = (len(draws), deg, fails)

    draws = _jacobi_draws(rng, 1000, (2, 30), (0, 5), (0, 5))
    fails, deg, vs = _run_draws(check_corollary_2_1, draws)
    for args, v in vs:
        if v.full != bool(v.zeros_b[-1] < v.critical.r_n):
            fails.append((args, "iff condition"))
        if any(iv.zeros_inside + len(iv.critical_inside) != 1 for iv in v.placements[1:]):
            fails.append((args, "trichotomy"))
    out["cor2.1"] = (len(draws), deg, fails)

    draws = _jacobi_draws(rng, 1000, (4, 30), (-1, 5), (-1, 5))
    fails, deg, vs = _run_draws(check_theorem_2_2, draws)
    for (n, a, b), v in vs:
        q = v.critical.q
        q1 = 4 * (n + 1) * (b + n + 1) * (b + n + 2)
        qm1 = 4 * (n + 1) * (a + n + 1) * (a + n + 2)
        if abs(q(1.0) - q1) > 1e-10 * q1 or abs(q(-1.0) - qm1) > 1e-10 * qm1:
            fails.append(((n, a, b), "q(+-1) closed forms"))
        if not (q.discriminant > 0 and -1 < q.q_minus < q.q_plus < 1
                and -1 < q.x0 < 1 and q.y0 < 0):
            fails.append(((n, a, b), "q invariants"))
        if sum(iv.zeros_inside >= 1 for iv in v.placements[1:-1]) < n - 3:
            fails.append(((n, a, b), "n-3 bound"))
    out["thm2.2"] = (len(draws), deg, fails)

    draws = _jacobi_draws(rng, 1000, (2, 30), (-1, 5), (-1, 5))
    fails, deg, vs = _run_draws(check_theorem_3_1, draws)
    for (n, a, b), v in vs:
        if v.stats["interior_placements"] < n - 2:
            fails.append(((n, a, b), "n-2 bound"))
        if v.stats.get("remaining_two") not in ("same-interval", "outer", "none"):
            fails.append(((n, a, b), "remaining-two dichotomy"))
    out["thm3.1"] = (len(draws), deg, fails)

    ns = rng.integers(2, 31, 500).tolist()
    lams = _open_box(rng, -0.45, 5, 500).tolist()
    draws = list(zip(ns, lams))
    fails, deg, vs = _run_draws(check_theorem_4_1, draws)
    for args, v in vs:
        if v.full != bool(v.zeros_b[-1] < v.critical.k_n):
            fails.append((args, "iff condition"))
        if any(iv.zeros_inside + len(iv.critical_inside) != 1 for iv in v.placements):
            fails.append((args, "trichotomy"))
    out["thm4.1"] = (len(draws), deg, fails)

    draws = []
    while len(draws) < 500:
        lam = float(_open_box(rng, -0.45, 5, 1)[0])
        n = int(rng.integers(4, 31))
        if not -0.05 <= lam <= 0.05:
            draws.append((n, lam))
    fails, deg, vs = _run_draws(check_theorem_4_2, draws)
    for args, v in vs:
        if v.stats["positive_breakdowns"] > 2:
            fails.append((args, "more than two positive-side breakdowns"))
    out["thm4.2"] = (len(draws), deg, fails)
    return out


def test_criterion_4_theorem_properties(capsys):
    out = _property_failures()
    ok = all(not fails for _, _, fails in out.values())
    detail = ", ".join(f"{k}: {len(f)}/{d} failed, {g} degenerate" for k, (d, g, f) in out.items())
    report(capsys, 4, "theorem property suites", ok, detail)


# -- 5 ------------------------------------------------------------------------

def test_criterion_5_zero_oracle(capsys):
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(1, 16))
        a, b = _open_box(rng, -1, 5, 2).tolist()
        got = compute_zeros(PolySpec.jacobi(n, a, b)).zeros
        ref = grid_bisection_zeros(lambda x: jacobi_sum(n, a, b, x), n)
        worst = max(worst, float(np.max(np.abs(got - ref))))
    report(capsys, 5, "zero finder against grid-bisection oracle", worst <= 1e-10,
           f"200 draws, n <= 15, worst pointwise error {worst:.2e}")


# -- 6 ------------------------------------------------------------------------

def test_criterion_6_degree_four_example(capsys):
    expected = {
        (1.26, 1.85): [-0.67979, -0.201233, 0.326414, 0.764756],
        (1.46, 2.05): [-0.667543, -0.197421, 0.317377, 0.750436],
    }
    diffs = {}
    for (a, b), ref in expected.items():
        z = compute_zeros(PolySpec.jacobi(4, a, b)).zeros
        diffs[(a, b)] = float(np.max(np.abs(z - np.array(ref))))
    ok = all(d <= 1e-5 for d in diffs.values())
    report(capsys, 6, "degree-4 example zeros", ok,
           ", ".join(f"P_4^({a},{b}) max |diff| {d:.2e}" for (a, b), d in diffs.items()))


# -- 7 ------------------------------------------------------------------------

def test_criterion_7_limits(capsys):
    l200 = critical_linear("thm2.1", 200, 1, 1).l_n
    k200 = critical_k(200, 1).k_n
    q = quadratic_q(200, 1, 1)
    ok = (abs(l200 + 0.5) < 0.05 and abs(k200 - 0.70711) < 0.01
          and abs(q.q_minus + 0.70711) < 0.02 and abs(q.q_plus - 0.70711) < 0.02)
    report(capsys, 7, "large-n limits", ok,
           f"l_200 = {l200:.5f}, k_200 = {k200:.5f}, q_+- = ({q.q_minus:.5f}, {q.q_plus:.5f})")


# -- 8 ------------------------------------------------------------------------

def test_criterion_8_sweeps(capsys):
    records, summary = run_sweep("thm2.1", range(2, 61), [1.0], [1.0])
    full_ns = [r.n for r in records if r.full]
    last_full = max(full_ns, default=1)
    # "eventually 0": every n in the upper half of the range breaks down
    eventually_zero = summary.evaluated == 59 and last_full < 31
    big, _ = run_sweep("thm4.1", [9], lams=[4000])
    ok = eventually_zero and big[0].full is True
    report(capsys, 8, "sweep claims", ok,
           f"thm2.1 (1,1) n=2..60 full at n = {full_ns}, overall fraction "
           f"{summary.full_fraction:.4f}; thm4.1 n=9 lambda=4000 full = {big[0].full}")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn(None)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
