import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import special

from jacobi_interlace import errors
from jacobi_interlace.polyeval import PolySpec, eval_jacobi
from jacobi_interlace.zerofinder import (
    Method,
    compute_zeros,
    compute_zeros_quasi,
    jacobi_matrix,
    refine_zero,
    zeros,
)
from oracles import gegenbauer_sum, grid_bisection_zeros, jacobi_sum

params = st.floats(-0.99, 5.0)


@given(st.integers(1, 15), params, params)
def test_matches_grid_bisection_oracle(n, a, b):
    z = compute_zeros(PolySpec.jacobi(n, a, b)).zeros
    ref = grid_bisection_zeros(lambda x: jacobi_sum(n, a, b, x), n)
    np.testing.assert_allclose(z, ref, atol=1e-10, rtol=0)


@given(st.integers(1, 40), st.floats(-0.99, 50.0), st.floats(-0.99, 50.0))
def test_matches_scipy_gauss_jacobi_nodes(n, a, b):
    z = compute_zeros(PolySpec.jacobi(n, a, b)).zeros
    ref = np.sort(special.roots_jacobi(n, a, b)[0])
    np.testing.assert_allclose(z, ref, atol=1e-12)


# scipy's Gegenbauer nodes are unreliable for |lam| below about 1e-3
@given(st.integers(1, 20), st.floats(-0.45, 50.0).filter(lambda v: abs(v) > 1e-3))
def test_gegenbauer_zeros(n, lam):
    zs = compute_zeros(PolySpec.ultraspherical(n, lam))
    z = zs.zeros
    np.testing.assert_allclose(z, -z[::-1], atol=0)
    if n % 2:
        assert z[n // 2] == 0.0
    ref = np.sort(special.roots_gegenbauer(n, lam)[0])
    np.testing.assert_allclose(z, ref, atol=1e-12)


@pytest.mark.parametrize("lam", [0.0, 1e-301, -1e-12, 1e-12])
def test_chebyshev_closed_form_near_lambda_zero(lam):
    n = 9
    z = compute_zeros(PolySpec.ultraspherical(n, lam)).zeros
    ref = np.sort(np.cos((2 * np.arange(1, n + 1) - 1) * np.pi / (2 * n)))
    np.testing.assert_allclose(z, ref, atol=1e-11)


@given(st.integers(2, 25), params, params)
def test_consecutive_degrees_interlace(n, a, b):
    lo = compute_zeros(PolySpec.jacobi(n - 1, a, b)).zeros
    hi = compute_zeros(PolySpec.jacobi(n, a, b)).zeros
    merged = np.empty(2 * n - 1)
    merged[0::2], merged[1::2] = hi, lo
    assert np.all(np.diff(merged) > 0)


def test_zero_set_metadata():
    zs = compute_zeros(PolySpec.jacobi(6, 0.5, 1.5))
    assert zs.method is Method.EIGEN and len(zs) == 6
    assert zs.max_abs_residual < 1e-12
    assert not zs.zeros.flags.writeable
    assert compute_zeros(PolySpec.jacobi(0, 1, 1)).zeros.size == 0


def test_jacobi_matrix_legendre():
    d, e2 = jacobi_matrix(4, 0.0, 0.0)
    k = np.arange(1, 4)
    np.testing.assert_allclose(d, 0, atol=1e-15)
    np.testing.assert_allclose(e2, k**2 / (4 * k**2 - 1))


def test_orthogonal_finder_rejects_quasi():
    with pytest.raises(errors.WrongRegime):
        compute_zeros(PolySpec.jacobi(5, 10, -1.1))


def test_quasi_zeros_reference_values():
    zs = compute_zeros_quasi(PolySpec.jacobi(5, 10, -1.1))
    np.testing.assert_allclose(zs.zeros, [-1.0026, -0.9112, -0.6943, -0.3704, 0.0420], atol=1.5e-4)
    assert zs.crosscheck is True and zs.method is Method.QUASI_BRACKET
    z11 = compute_zeros_quasi(PolySpec.jacobi(11, 1, -1.5)).zeros
    assert z11[0] == pytest.approx(-1.005, abs=1.5e-3)


@given(st.integers(1, 14), st.floats(-0.99, 5.0), st.floats(-1.99, -1.01))
def test_quasi_zeros_are_roots_and_alternate(n, a, b):
    if abs(a + b + 2) < 1e-12:
        with pytest.raises(errors.RegimeError):
            compute_zeros_quasi(PolySpec.jacobi(n, a, b))
        return
    zs = compute_zeros_quasi(PolySpec.jacobi(n, a, b))
    z = zs.zeros
    if n == 1:
        assert z.size == 1 and abs(z[0]) > 1
    else:
        assert z.size == n and z[0] < -1 and np.all(z[1:] > -1) and z[-1] < 1
    assert zs.crosscheck is True
    # every zero is a sign change of an independent evaluator
    h = 1e-7 * np.maximum(1, np.abs(z))
    assert np.all(np.sign(jacobi_sum(n, a, b, z - h)) != np.sign(jacobi_sum(n, a, b, z + h)))


def test_quasi_degree_one():
    # P_1^(1,-1.5)(x) = (1.5 x + 2.5)/2 has its zero at -5/3
    z = compute_zeros_quasi(PolySpec.jacobi(1, 1, -1.5)).zeros
    assert z[0] == pytest.approx(-5 / 3, abs=1e-14)


def test_quasi_degree_one_zero_right_of_one():
    # alpha + beta < -2 flips the sign of the leading coefficient of P_1
    z = compute_zeros_quasi(PolySpec.jacobi(1, -0.5, -1.75)).zeros
    assert z[0] == pytest.approx(5.0, abs=1e-13)


def test_quasi_finder_rejects_orthogonal():
    with pytest.raises(errors.RegimeError):
        compute_zeros_quasi(PolySpec.jacobi(4, 1, 1))


def test_dispatch():
    assert zeros(PolySpec.jacobi(4, 1, 1)).method is Method.EIGEN
    assert zeros(PolySpec.jacobi(4, 1, -1.5)).method is Method.QUASI_BRACKET


def test_refine_zero_example():
    z = refine_zero(PolySpec.jacobi(7, 6, 2), -0.9, (-0.95, -0.85))
    assert z == pytest.approx(-0.895, abs=1e-3)
    assert abs(eval_jacobi(7, (6, 2), z)) < 1e-12


def test_refine_zero_without_sign_change():
    with pytest.raises(errors.NoRootInBracket):
        refine_zero(PolySpec.jacobi(7, 6, 2), 0.0, (0.9, 0.95))


def test_refine_zero_bad_seed_falls_back_to_bisection():
    spec = PolySpec.jacobi(7, 6, 2)
    ref = compute_zeros(spec).zeros[0]
    assert refine_zero(spec, 5.0, (-0.95, -0.85)) == pytest.approx(ref, abs=1e-13)


def test_large_lambda_table_zeros():
    z = compute_zeros(PolySpec.ultraspherical(10, 4001)).positive
    np.testing.assert_allclose(z, [0.0054, 0.0164, 0.0278, 0.0400, 0.0543], atol=1.5e-4)
    assert grid_bisection_zeros(lambda t: gegenbauer_sum(10, 4001.0, t), 5, 0.001, 0.06).size == 5


@pytest.mark.parametrize("a,b,ref", [
    (1.266, 1.85, [-0.67979, -0.201233, 0.326414, 0.764756]),
    (1.466, 2.05, [-0.667543, -0.197421, 0.317377, 0.750436]),
])
def test_degree_four_zero_lists(a, b, ref):
    # the six-digit lists match these alpha values, not the rounded 1.26 / 1.46
    z = compute_zeros(PolySpec.jacobi(4, a, b)).zeros
    np.testing.assert_allclose(z, ref, atol=1e-5)
