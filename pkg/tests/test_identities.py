import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobi_interlace import errors
from jacobi_interlace import identities as ids
from jacobi_interlace.identities import (
    IDENTITIES,
    IDENTITY_IDS,
    q_coefficients,
    q_value,
    residual_sweep,
    verify_identity,
    verify_symmetry,
    worst_residual,
)
from oracles import gegenbauer_sum, jacobi_sum


def test_catalogue_has_sixteen_entries():
    assert len(IDENTITY_IDS) == 16
    assert {IDENTITIES[i].family for i in IDENTITY_IDS} == {"jacobi", "ultraspherical"}


@pytest.mark.parametrize("ident", IDENTITY_IDS)
def test_each_identity_holds_on_random_draws(ident):
    assert residual_sweep(ident, trials=200, seed=7) <= 1e-9


@pytest.mark.parametrize("ident", IDENTITY_IDS)
def test_identities_hold_with_explicit_sum_evaluators(ident, monkeypatch):
    # swap the recurrence for the explicit sums: catches errors that a shared
    # evaluator would hide on both sides
    monkeypatch.setattr(ids, "_P", lambda n, p, x: jacobi_sum(n, p[0], p[1], x))
    monkeypatch.setattr(ids, "_C", lambda n, lam, x: gegenbauer_sum(n, lam, x))
    assert residual_sweep(ident, trials=100, seed=3, n_max=10) <= 1e-8


def test_sweep_is_seeded():
    a = worst_residual("I2.1", 50, seed=11)
    b = worst_residual("I2.1", 50, seed=11)
    assert (a.n, a.x, a.params) == (b.n, b.x, b.params)


def test_box_can_fix_values():
    r = worst_residual("I2.7", 5, seed=0, box={"n": 4, "x": 0.25, "alpha": 1.0, "beta": 2.0})
    assert (r.n, r.x, r.params) == (4, 0.25, {"alpha": 1.0, "beta": 2.0})


def test_single_point_reference():
    # P_5^(10, 0.9) vanishes near -0.9287 so the identity residual is still small there
    r = verify_identity("I2.1", 5, (10, 0.9), -0.9287)
    assert r.rel_residual < 1e-12


def test_symmetry_residual():
    assert verify_symmetry(7, 1.5, 0.25, 0.3).rel_residual < 1e-14


def test_unknown_identity():
    with pytest.raises(KeyError):
        verify_identity("I9.9", 3, (1, 1), 0.1)


@pytest.mark.parametrize("ident,n,params,x", [
    ("I2.2", 3, (1.0, 0.0), 0.2),
    ("I2.5", 3, (1.0, 0.0), 0.2),
    ("I4.11", 3, 0.0, 0.2),
    ("I4.12", 3, 0.0, 0.2),
    ("I4.4", 3, 1.0, 1.0),
    ("I4.7", 3, 1.0, -1.0),
    ("I4.2", 0, 1.0, 0.1),
    ("I2.1", 3, (-1.5, 1.0), 0.1),
    ("I4.1", 3, -0.6, 0.1),
])
def test_out_of_regime_points_raise(ident, n, params, x):
    with pytest.raises(errors.RegimeError):
        verify_identity(ident, n, params, x)


@given(st.integers(1, 40), st.floats(-0.99, 5.0), st.floats(-0.99, 5.0))
def test_q_endpoint_closed_forms(n, a, b):
    q1 = 4 * (n + 1) * (b + n + 1) * (b + n + 2)
    qm1 = 4 * (n + 1) * (a + n + 1) * (a + n + 2)
    assert q_value(n, a, b, 1.0) == pytest.approx(q1, rel=1e-10)
    assert q_value(n, a, b, -1.0) == pytest.approx(qm1, rel=1e-10)


def test_q_matches_unexpanded_form():
    # q(x) = e c(x) (a^2 - b^2 + (e^2 - 1) x) - v d
    n, a, b = 5, 1.3, -0.4
    x = np.linspace(-1, 1, 7)
    e = ids.lift_e(n, a, b)
    ref = (e * ids.lift_c(n, a, b, x) * (a * a - b * b + (e * e - 1) * x)
           - ids.lift_v(n, a, b) * ids.lift_d(n, a, b))
    np.testing.assert_allclose(q_value(n, a, b, x), ref, rtol=1e-13)
    A, B, C = q_coefficients(n, a, b)
    assert A == pytest.approx(e * (e * e - 1))


def test_quartic_is_even():
    x = np.linspace(-1, 1, 9)
    np.testing.assert_allclose(ids.gegen_H4(7, 0.8, x), ids.gegen_H4(7, 0.8, -x), rtol=1e-14)


def test_h_negative_for_negative_lambda():
    assert ids.gegen_h(5, -0.25) < 0 < ids.gegen_h(5, 0.25)
