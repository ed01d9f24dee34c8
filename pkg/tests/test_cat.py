import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import trapezoid

from qbm_ohmic import (
    P1,
    CatInit,
    GaussianInit,
    ParameterError,
    Prep,
    attenuation,
    attenuation_shorttime,
    char_function_cat,
    char_function_gaussian,
    decoherence_time,
    interference_measure,
    interference_shorttime,
    mixing_time,
    probability_distribution,
    rho_element_cat,
    second_moments,
    wigner_cat,
    wigner_gaussian,
)
from qbm_ohmic.cat import initial_cat_state, overlap_factor, wigner_cat_terms
from qbm_ohmic.validation import interference_area, phase_grid

LAM = P1.lambda_th
SIGMA = LAM / 4
D = 10 * LAM
PREPS = list(Prep)


def cat(prep=Prep.ZERO, d=D, sigma=SIGMA):
    return CatInit(d=d, sigma=sigma, prep=prep)


def test_norm_bounds():
    assert CatInit(0.0, 1.0).norm == 0.5
    assert 0.5 < CatInit(1.0, 1.0).norm < 1.0
    with pytest.raises(ParameterError):
        CatInit(-1.0, 1.0)
    with pytest.raises(ParameterError):
        CatInit(1.0, 0.0)


@pytest.mark.parametrize("prep", PREPS)
def test_char_origin(prep):
    for t in (0.0, 0.01, 1.0, 5.0):
        assert char_function_cat(0.0, 0.0, t, P1, cat(prep)) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("prep", PREPS)
def test_char_d0_is_gaussian(prep):
    rng = np.random.default_rng(2)
    Q, P = rng.normal(size=(2, 200))
    for t in (0.0, 0.3, 2.0):
        np.testing.assert_allclose(
            char_function_cat(Q, P, t, P1, CatInit(0.0, 0.3, prep)),
            char_function_gaussian(Q, P, t, P1, GaussianInit(0.0, 0.3, prep)),
            rtol=1e-13,
            atol=1e-15,
        )


def test_char_real():
    rng = np.random.default_rng(3)
    Q, P = rng.normal(scale=3.0, size=(2, 100))
    assert np.isrealobj(char_function_cat(Q, P, 0.4, P1, cat()))


def test_peak_ratio_at_zero():
    init = cat()
    plus, minus, inter = wigner_cat_terms(0.0, 0.0, 0.0, P1, init)
    peak = wigner_cat_terms(D / 2, -P1.m * P1.gamma * D / 2, 0.0, P1, init)[0]
    assert inter / peak == pytest.approx(2.0, rel=1e-13)


@pytest.mark.parametrize("prep", PREPS)
@pytest.mark.parametrize("t", [0.0, 0.01, 1.0])
def test_wigner_normalized(prep, t):
    init = cat(prep)
    grid = phase_grid(t, P1, init, n=801, widths=10.0).sample(lambda q, p: wigner_cat(q, p, t, P1, init))
    assert grid.mass() == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("prep", PREPS)
@pytest.mark.parametrize("t", [0.0, 0.02, 1.5])
def test_direct_terms_are_shifted_packets(prep, t):
    init = cat(prep)
    q, p = np.meshgrid(np.linspace(-3, 3, 41), np.linspace(-25, 25, 43), indexing="ij")
    plus, minus, inter = wigner_cat_terms(q, p, t, P1, init)
    half = 0.5 * init.norm
    np.testing.assert_allclose(plus, half * wigner_gaussian(q, p, t, P1, GaussianInit(D / 2, SIGMA, prep)), rtol=1e-12, atol=1e-300)
    np.testing.assert_allclose(minus, half * wigner_gaussian(q, p, t, P1, GaussianInit(-D / 2, SIGMA, prep)), rtol=1e-12, atol=1e-300)
    np.testing.assert_allclose(plus + minus + inter, wigner_cat(q, p, t, P1, init), rtol=1e-12, atol=1e-14)


def test_measure_at_zero():
    mu = interference_measure(0.0, P1, cat())
    assert mu.a_of_t == 0.0
    assert mu.phi_q == pytest.approx(D * P1.m * P1.gamma / P1.hbar, rel=1e-12)
    assert mu.phi_p == pytest.approx(D / P1.hbar, rel=1e-12)


def test_bath_measure_at_zero():
    mu = interference_measure(0.0, P1, cat(Prep.BATH))
    assert mu.a_of_t * LAM**2 / D**2 == pytest.approx(0.4, abs=1e-12)


def test_short_time_slope():
    ts = np.linspace(0.0, 0.01, 51)
    a = np.array([interference_measure(t, P1, cat()).a_of_t for t in ts]) * LAM**2 / D**2
    slope = np.polyfit(P1.gamma * ts, a, 1)[0]
    assert slope == pytest.approx(1.0, rel=2e-2)


def test_shorttime_values():
    assert interference_shorttime(1e-3, P1, cat()) == pytest.approx(0.1, rel=1e-12)
    bath = cat(Prep.BATH)
    assert interference_shorttime(0.0, P1, bath) == interference_shorttime(2.0, P1, bath)


@pytest.mark.parametrize("prep", PREPS)
def test_shorttime_agreement(prep):
    init = cat(prep)
    full = interference_measure(1e-3, P1, init).a_of_t
    assert full == pytest.approx(interference_shorttime(1e-3, P1, init), rel=2e-2)


def test_thermal_suppresses_more():
    for t in np.linspace(0.0, 5.0, 101):
        a0 = interference_measure(t, P1, cat()).a_of_t
        at = interference_measure(t, P1, cat(Prep.BATH)).a_of_t
        assert at >= a0 >= 0.0


@given(st.floats(0.0, 10.0), st.floats(0.05, 1.0), st.floats(0.0, 5.0), st.sampled_from(PREPS))
def test_measure_nonnegative(t, sigma, d, prep):
    assert interference_measure(t, P1, CatInit(d, sigma, prep)).a_of_t >= 0.0


@pytest.mark.parametrize("prep", PREPS)
def test_initial_cat_state(prep):
    init = cat(prep)
    q, p = np.meshgrid(np.linspace(-3, 3, 31), np.linspace(-30, 30, 33), indexing="ij")
    np.testing.assert_allclose(initial_cat_state(q, p, P1, init), wigner_cat(q, p, 0.0, P1, init), rtol=1e-10, atol=1e-12)


@pytest.mark.parametrize("prep", PREPS)
def test_interference_area_constant(prep):
    init = cat(prep)
    expect = overlap_factor(D, SIGMA) / (1 + overlap_factor(D, SIGMA))
    tau = decoherence_time(P1, D)
    for t in (0.0, tau, 10 * tau):
        assert interference_area(t, P1, init) == pytest.approx(expect, abs=1e-6)


def _x_axis(t, init):
    half = D / 2 + 10 * math.sqrt(second_moments(t, P1, init).a11)
    return np.linspace(-half, half, 4001)


@pytest.mark.parametrize("prep", PREPS)
@pytest.mark.parametrize("t", [0.0, 0.01, 0.5])
def test_probability_normalized(prep, t):
    init = cat(prep)
    x = _x_axis(t, init)
    assert trapezoid(probability_distribution(x, t, P1, init), x) == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("prep", PREPS)
@pytest.mark.parametrize("t", [0.0, 0.01, 0.5])
def test_probability_is_marginal(prep, t):
    init = cat(prep)
    x = np.linspace(-3.0, 3.0, 61)
    grid = phase_grid(t, P1, init, n=1601, widths=10.0)
    X, Pm = np.meshgrid(x, grid.p, indexing="ij")
    marginal = trapezoid(wigner_cat(X, Pm, t, P1, init), grid.p, axis=1)
    np.testing.assert_allclose(probability_distribution(x, t, P1, init), marginal, atol=1e-7)


@pytest.mark.parametrize("prep", PREPS)
@pytest.mark.parametrize("t", [0.0, 0.01, 0.5])
def test_probability_is_diagonal(prep, t):
    init = cat(prep)
    x = np.linspace(-3.0, 3.0, 61)
    np.testing.assert_allclose(probability_distribution(x, t, P1, init), rho_element_cat(x, x, t, P1, init).real, atol=1e-10)


@pytest.mark.parametrize("prep", PREPS)
@pytest.mark.parametrize("t", [0.002, 0.01, 0.05])
def test_attenuation_is_fringe_amplitude(prep, t):
    """Recover a(t) from the phase-space marginal at the origin, without using the closed-form fringe term."""
    d = 2 * LAM
    init = CatInit(d, LAM / 2, prep)  # overlapping packets, so the fringe at the origin is resolvable
    sm = second_moments(t, P1, init)
    grid = phase_grid(t, P1, init, n=4001, widths=10.0)
    p0 = trapezoid(wigner_cat(np.zeros_like(grid.p), grid.p, t, P1, init), grid.p)
    direct = trapezoid(sum(wigner_cat_terms(0.0 * grid.p, grid.p, t, P1, init)[:2]), grid.p)
    shift = P1.m * math.exp(-P1.gamma * t) * d / 2
    single0 = 1 / math.sqrt(2 * math.pi * sm.a11)
    envelope = math.exp(-(shift**2) / (2 * sm.a11))
    a_fit = (p0 - direct) / (init.norm * envelope * single0)
    assert a_fit == pytest.approx(attenuation(t, P1, init), rel=1e-6)


@pytest.mark.parametrize("prep", PREPS)
def test_attenuation_range(prep):
    init = cat(prep)
    assert attenuation(0.0, P1, init) == 1.0
    for t in np.linspace(1e-4, 5.0, 50):
        assert 0.0 < attenuation(t, P1, init) <= 1.0


def test_attenuation_bath_short():
    init = cat(Prep.BATH)
    assert attenuation_shorttime(1e-3, P1, init) == pytest.approx(math.exp(-0.08), rel=1e-12)
    assert math.exp(-0.08) == pytest.approx(0.9231, abs=1e-4)
    assert attenuation(1e-3, P1, init) == pytest.approx(math.exp(-0.08), rel=1e-2)


@pytest.mark.parametrize("prep", PREPS)
def test_attenuation_shorttime_agreement(prep):
    init = cat(prep)
    assert attenuation(1e-3, P1, init) == pytest.approx(attenuation_shorttime(1e-3, P1, init), rel=2e-2)


def test_attenuation_shorttime_zero_limits():
    init = cat()
    tau = decoherence_time(P1, D)
    crossover = 2 * P1.m * SIGMA**2 / P1.hbar
    t = 1e-3 * crossover
    assert 1 - attenuation_shorttime(t, P1, init) == pytest.approx(t**3 / (3 * tau * crossover**2), rel=1e-5)
    t = 100 * crossover
    assert -math.log(attenuation_shorttime(t, P1, init)) * 3 * tau / t == pytest.approx(1.0, rel=2e-4)


def test_mixing_time():
    assert mixing_time(P1, SIGMA, D) == pytest.approx(5 * LAM**2, rel=1e-14)
    assert mixing_time(P1, SIGMA, D) == pytest.approx(1.0, rel=1e-14)
    assert mixing_time(P1, SIGMA, 2 * D) == 2 * mixing_time(P1, SIGMA, D)
    assert mixing_time(P1, SIGMA, D) > 10 * decoherence_time(P1, D)
    with pytest.raises(ParameterError):
        mixing_time(P1, 0.0, D)
    with pytest.raises(ParameterError):
        mixing_time(P1, SIGMA, -1.0)


@pytest.mark.parametrize("prep", PREPS)
def test_d0_wigner_is_gaussian(prep):
    q, p = np.meshgrid(np.linspace(-2, 2, 21), np.linspace(-20, 20, 21), indexing="ij")
    for t in (0.0, 0.1, 1.0):
        np.testing.assert_allclose(
            wigner_cat(q, p, t, P1, CatInit(0.0, SIGMA, prep)),
            wigner_gaussian(q, p, t, P1, GaussianInit(0.0, SIGMA, prep)),
            rtol=1e-12,
            atol=1e-12,
        )
