import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from qbm_ohmic import P1, ParameterError, SimParams, decoherence_time, fluctuation_moments, green_function, thermal_wavelength
from qbm_ohmic.core import one_minus_exp

# Independent quadrature of 2 m gamma kT int_0^1 G^2 and friends, frozen.
X2_T1 = 1.680912407245783
XXD_T1 = 3.995764008937831
XD2_T1 = 4.323323583816936


def test_green_at_zero():
    g = green_function(0.0, P1)
    assert (g.g, g.gdot, g.gddot) == (0.0, 1.0, -1.0)


def test_green_at_one():
    g = green_function(1.0, P1)
    assert g.g == pytest.approx(0.632121, abs=5e-7)
    assert g.gdot == pytest.approx(0.367879, abs=5e-7)
    assert g.gddot == pytest.approx(-0.367879, abs=5e-7)


def test_green_asymptote():
    g = green_function(60.0, P1)
    assert g.g == pytest.approx(1.0, abs=1e-15)
    assert abs(g.gdot) < 1e-20 and abs(g.gddot) < 1e-20


@pytest.mark.parametrize("u", [1e-12, 1e-9, 1e-6, 1e-3])
def test_one_minus_exp_small(u):
    exact = u - u**2 / 2 + u**3 / 6 - u**4 / 24
    assert abs(one_minus_exp(u) / exact - 1.0) < 1e-12


@given(st.floats(0.0, 20.0), st.floats(0.1, 10.0), st.floats(0.1, 10.0))
def test_green_identity(t, m, gamma):
    p = SimParams(m=m, gamma=gamma, kT=1.0, hbar=1.0)
    g = green_function(t, p)
    assert abs(m * gamma * g.g + m * g.gdot - 1.0) < 1e-12


def test_rejects_negative_time():
    with pytest.raises(ParameterError):
        green_function(-1e-3, P1)
    with pytest.raises(ParameterError):
        fluctuation_moments(-1.0, P1)


@pytest.mark.parametrize("field", ["m", "gamma", "kT", "hbar"])
def test_rejects_bad_params(field):
    kw = dict(m=1.0, gamma=1.0, kT=1.0, hbar=1.0)
    kw[field] = 0.0
    with pytest.raises(ParameterError):
        SimParams(**kw)


def test_moments_at_zero():
    f = fluctuation_moments(0.0, P1)
    assert (f.x2, f.xxd, f.xd2) == (0.0, 0.0, 0.0)


def test_moments_at_one():
    f = fluctuation_moments(1.0, P1)
    assert f.x2 == pytest.approx(X2_T1, rel=1e-12)
    assert f.xxd == pytest.approx(XXD_T1, rel=1e-12)
    assert f.xd2 == pytest.approx(XD2_T1, rel=1e-12)


def test_moments_frozen_values_are_quadrature():
    scale = 2.0 * P1.m * P1.gamma * P1.kT
    x2 = scale * quad(lambda s: (1 - math.exp(-s)) ** 2, 0, 1, epsabs=0, epsrel=1e-13)[0]
    xd2 = scale * quad(lambda s: math.exp(-2 * s), 0, 1, epsabs=0, epsrel=1e-13)[0]
    assert x2 == pytest.approx(X2_T1, rel=1e-12)
    assert xd2 == pytest.approx(XD2_T1, rel=1e-12)


@pytest.mark.parametrize("t", np.linspace(0.01, 10.0, 9))
def test_moments_match_quadrature(t):
    p = P1
    f = fluctuation_moments(t, p)
    scale = 2.0 * p.m * p.gamma * p.kT
    x2 = scale * quad(lambda s: (-math.expm1(-s)) ** 2, 0, t, epsabs=0, epsrel=1e-13)[0]
    xd2 = scale * quad(lambda s: math.exp(-2 * s), 0, t, epsabs=0, epsrel=1e-13)[0]
    assert f.x2 == pytest.approx(x2, rel=1e-9)
    assert f.xd2 == pytest.approx(xd2, rel=1e-9)


@pytest.mark.parametrize("t", [1e-8, 1e-4, 0.3, 0.49, 0.51, 2.0])
def test_xxd_is_derivative_of_x2(t):
    h = min(1e-4, t * 1e-3)
    fd = (fluctuation_moments(t + h, P1).x2 - fluctuation_moments(t - h, P1).x2) / (2 * h)
    assert fluctuation_moments(t, P1).xxd == pytest.approx(fd, rel=1e-6, abs=1e-12)


def test_moments_monotone_and_nonnegative():
    ts = np.linspace(0.0, 10.0, 2001)
    x2 = np.array([fluctuation_moments(t, P1).x2 for t in ts])
    assert np.all(x2 >= 0) and np.all(np.diff(x2) >= 0)


def test_equipartition():
    assert fluctuation_moments(40.0, P1).xd2 == pytest.approx(P1.kT / P1.m, abs=1e-9)


def test_thermal_wavelength():
    assert thermal_wavelength(P1) == pytest.approx(0.447214, abs=5e-7)
    assert thermal_wavelength(SimParams(1, 1, 1, 1)) == 1.0
    hot = SimParams(1, 1, 20, 1)
    assert thermal_wavelength(hot) == pytest.approx(P1.lambda_th / 2, rel=1e-15)


def test_decoherence_time():
    lam = P1.lambda_th
    assert decoherence_time(P1, 10 * lam) == pytest.approx(0.01, rel=1e-14)
    assert decoherence_time(P1, lam) == pytest.approx(1.0, rel=1e-14)
    assert decoherence_time(P1, 1.0) == pytest.approx(0.2, rel=1e-14)
    with pytest.raises(ParameterError):
        decoherence_time(P1, 0.0)
