import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import lambertw as scipy_lambertw

from ergm_extremal.lambertw import Branch, lambert_w, w0_negexp, w_minus1_negexp

INV_E = math.exp(-1.0)


def test_fixed_points():
    assert lambert_w(Branch.PRINCIPAL, 0.0) == 0.0
    assert lambert_w(Branch.PRINCIPAL, math.e) == pytest.approx(1.0, abs=1e-14)
    assert lambert_w(Branch.MINUS_ONE, -INV_E) == -1.0
    assert lambert_w(Branch.PRINCIPAL, -INV_E) == -1.0
    assert lambert_w(Branch.MINUS_ONE, -2.0 * math.exp(-2.0)) == pytest.approx(-2.0, abs=1e-13)


def test_domain_errors():
    with pytest.raises(ValueError):
        lambert_w(Branch.PRINCIPAL, -0.5)
    with pytest.raises(ValueError):
        lambert_w(Branch.MINUS_ONE, -0.5)
    with pytest.raises(ValueError):
        lambert_w(Branch.MINUS_ONE, 0.0)
    with pytest.raises(ValueError):
        lambert_w(Branch.MINUS_ONE, 0.1)


def test_round_trip_grid():
    for w in np.linspace(-20.0, 20.0, 2001):
        x = w * math.exp(w)
        branch = Branch.PRINCIPAL if w >= -1.0 else Branch.MINUS_ONE
        back = lambert_w(branch, x)
        assert back == pytest.approx(w, rel=1e-11, abs=1e-11)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=-18.0, max_value=18.0, allow_nan=False))
def test_round_trip_hypothesis(w):
    x = w * math.exp(w)
    branch = Branch.PRINCIPAL if w >= -1.0 else Branch.MINUS_ONE
    assert lambert_w(branch, x) == pytest.approx(w, rel=1e-10, abs=1e-10)


def test_residual_contract():
    for w in np.linspace(-1.0, 20.0, 500):
        x = w * math.exp(w)
        got = lambert_w(Branch.PRINCIPAL, x)
        assert abs(got * math.exp(got) - x) <= 1e-13 * max(1.0, abs(x))
    for w in np.linspace(-20.0, -1.0, 500):
        x = w * math.exp(w)
        got = lambert_w(Branch.MINUS_ONE, x)
        assert abs(got * math.exp(got) - x) <= 1e-13 * max(1.0, abs(x))


def test_branch_ordering_and_monotonicity():
    xs = -np.geomspace(INV_E * 0.999, 1e-6, 60)
    upper = [lambert_w(Branch.PRINCIPAL, x) for x in xs]
    lower = [lambert_w(Branch.MINUS_ONE, x) for x in xs]
    for x, w0, wm in zip(xs, upper, lower):
        assert wm < -1.0 < w0 < 0.0, x
    # xs increases toward 0: principal increases, minus-one decreases
    assert all(b > a for a, b in zip(upper, upper[1:]))
    assert all(b < a for a, b in zip(lower, lower[1:]))


def test_against_scipy_oracle():
    for x in [-0.3678, -0.36, -0.2, -0.05, -1e-3, -1e-8, 0.0, 0.5, 2.0, 1e3, 1e9]:
        ours = lambert_w(Branch.PRINCIPAL, x)
        ref = float(scipy_lambertw(x, 0).real)
        assert ours == pytest.approx(ref, rel=1e-12, abs=1e-12)
    for x in [-0.3678, -0.36, -0.2, -0.05, -1e-3, -1e-8, -1e-100]:
        ours = lambert_w(Branch.MINUS_ONE, x)
        ref = float(scipy_lambertw(x, -1).real)
        assert ours == pytest.approx(ref, rel=1e-12)


def test_negexp_helpers_match_direct_form():
    for u in [1e-6, 1e-3, 0.1, 1.0, 5.0, 50.0, 500.0]:
        x = -math.exp(-u - 1.0)
        assert w_minus1_negexp(u) == pytest.approx(float(scipy_lambertw(x, -1).real), rel=1e-12)
        assert w0_negexp(u) == pytest.approx(float(scipy_lambertw(x, 0).real), rel=1e-9, abs=1e-12)
    assert w_minus1_negexp(0.0) == -1.0
    assert w0_negexp(0.0) == -1.0
    with pytest.raises(ValueError):
        w_minus1_negexp(-1.0)


def test_envelope_bounds():
    # W_{-1}(-e^(-u-1)) lies strictly between -1-sqrt(2u)-u and -1-sqrt(2u)-2u/3
    for u in np.geomspace(1e-8, 1e3, 400):
        w = w_minus1_negexp(u)
        root = math.sqrt(2.0 * u)
        assert -1.0 - root - u < w < -1.0 - root - 2.0 * u / 3.0, u
        # The direct route is checked only where the bound margin O(u^1.5)
        # exceeds what rounding the argument itself destroys (~2e-16/sqrt(2u)),
        # and where -exp(-u-1) is representable at all.
        if 1e-4 <= u <= 700.0:
            direct = lambert_w(Branch.MINUS_ONE, -math.exp(-u - 1.0))
            assert -1.0 - root - u < direct < -1.0 - root - 2.0 * u / 3.0, u
