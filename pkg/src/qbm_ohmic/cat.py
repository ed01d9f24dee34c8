"""Two-packet "cat" superposition of Gaussians centred at +d/2 and -d/2.

The Wigner function splits into two direct Gaussians that drift independently
and an interference term at the origin whose peak is suppressed by ``exp(-A)``.
The area under the interference term never changes; only its peak height and
the fringe amplitude in the position distribution (the attenuation) decay.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Prep, SimParams, decoherence_time, fluctuation_moments, green_function, thermal_wavelength
from .errors import ParameterError
from .gaussian import SecondMoments, _assemble, _parts, gaussian_density, initial_area, initial_momentum_variance, second_moments

__all__ = [
    "CatInit",
    "InterferenceMeasure",
    "char_function_cat",
    "wigner_cat",
    "wigner_cat_terms",
    "initial_cat_state",
    "interference_measure",
    "interference_shorttime",
    "probability_distribution",
    "attenuation",
    "attenuation_shorttime",
    "mixing_time",
    "overlap_factor",
]


@dataclass(frozen=True)
class CatInit:
    d: float = 1.0
    sigma: float = 0.1
    prep: Prep = Prep.ZERO

    def __post_init__(self):
        object.__setattr__(self, "prep", Prep(self.prep))
        if not (math.isfinite(self.sigma) and self.sigma > 0.0):
            raise ParameterError(f"sigma must be positive, got {self.sigma!r}")
        if not (math.isfinite(self.d) and self.d >= 0.0):
            raise ParameterError(f"separation must be >= 0, got {self.d!r}")

    @property
    def norm(self) -> float:
        """1/(1 + exp(-d^2/8 sigma^2)), between 1/2 and 1."""
        return 1.0 / (1.0 + overlap_factor(self.d, self.sigma))


@dataclass(frozen=True)
class InterferenceMeasure:
    """Peak-suppression exponent and the linear phase ``phi_q*q + phi_p*p``."""

    a_of_t: float
    phi_q: float
    phi_p: float

    def phase(self, q, p):
        return self.phi_q * np.asarray(q) + self.phi_p * np.asarray(p)


def overlap_factor(d: float, sigma: float) -> float:
    return math.exp(-(d * d) / (8.0 * sigma * sigma))


@dataclass(frozen=True)
class _Geometry:
    moments: SecondMoments
    shift_q: float
    shift_p: float
    measure: InterferenceMeasure


def _geometry(M, det_m, bath, params: SimParams, init: CatInit) -> _Geometry:
    sigma, d, hbar = init.sigma, init.d, params.hbar
    s_pp = initial_momentum_variance(params, sigma, init.prep)
    area = initial_area(params, sigma, init.prep)
    a11, a12, a22, det = _assemble(M, det_m, sigma * sigma, s_pp, *bath, area=area)
    # same covariance with the ground-state momentum spread hbar^2/4sigma^2 removed
    excess = s_pp - hbar**2 / (4.0 * sigma**2)
    reduced = _assemble(M, det_m, sigma * sigma, excess, *bath, area=area - hbar**2 / 4.0)[3]
    mgd, g = M[0, 0], M[0, 1]
    scale = hbar * d / (4.0 * sigma * sigma)
    measure = InterferenceMeasure(
        a_of_t=max(reduced, 0.0) / det * d * d / (8.0 * sigma * sigma),
        phi_q=(g * a22 - mgd * a12) / det * scale,
        phi_p=(mgd * a11 - g * a12) / det * scale,
    )
    sm = SecondMoments(a11=a11, a12=a12, a22=a22, det=det, prep=init.prep)
    return _Geometry(sm, 0.5 * d * M[0, 0], 0.5 * d * M[1, 0], measure)


def _geometry_at(t: float, params: SimParams, init: CatInit) -> _Geometry:
    M, det_m, bath = _parts(t, params)
    return _geometry(M, det_m, bath, params, init)


def char_function_cat(Q, P, t: float, params: SimParams, init: CatInit):
    Q = np.asarray(Q, dtype=float)
    P = np.asarray(P, dtype=float)
    sm = second_moments(t, params, init)
    ge = green_function(t, params)
    m, hbar, d, sigma = params.m, params.hbar, init.d, init.sigma
    expo = -(sm.a11 * P**2 + 2.0 * sm.a12 * P * Q + sm.a22 * Q**2) / (2.0 * hbar**2)
    fringe = np.cos((m * m * ge.gddot * Q + m * ge.gdot * P) * d / (2.0 * hbar))
    # exp(-d^2/8 sigma^2) cosh(z), folded into the exponent so neither factor overflows
    z = (m * ge.gdot * Q + ge.g * P) * d / (4.0 * sigma**2)
    cut = d * d / (8.0 * sigma**2)
    value = np.exp(expo) * fringe + 0.5 * (np.exp(expo + z - cut) + np.exp(expo - z - cut))
    return init.norm * value


def _wigner_from(q, p, geo: _Geometry, init: CatInit, terms: bool = False):
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    pref = 0.5 * init.norm
    plus = pref * gaussian_density(q - geo.shift_q, p - geo.shift_p, geo.moments)
    minus = pref * gaussian_density(q + geo.shift_q, p + geo.shift_p, geo.moments)
    mu = geo.measure
    inter = pref * 2.0 * math.exp(-mu.a_of_t) * gaussian_density(q, p, geo.moments) * np.cos(mu.phase(q, p))
    if terms:
        return plus, minus, inter
    return plus + minus + inter


def wigner_cat(q, p, t: float, params: SimParams, init: CatInit):
    return _wigner_from(q, p, _geometry_at(t, params, init), init)


def wigner_cat_terms(q, p, t: float, params: SimParams, init: CatInit):
    """The two direct terms and the interference term, each with its normalisation."""
    return _wigner_from(q, p, _geometry_at(t, params, init), init, terms=True)


def initial_cat_state(q, p, params: SimParams, init: CatInit):
    """Cat Wigner function just after coupling: the uncoupled state sheared by ``p -> p + m gamma q``."""
    M = np.eye(2)
    geo = _geometry(M, 1.0, (0.0, 0.0, 0.0), params, init)
    q = np.asarray(q, dtype=float)
    return _wigner_from(q, np.asarray(p, dtype=float) + params.m * params.gamma * q, geo, init)


def interference_measure(t: float, params: SimParams, init: CatInit) -> InterferenceMeasure:
    return _geometry_at(t, params, init).measure


def interference_shorttime(t: float, params: SimParams, init: CatInit) -> float:
    """Leading short-time form of the interference exponent."""
    if not t >= 0.0:
        raise ParameterError(f"time must be >= 0, got {t!r}")
    lam = thermal_wavelength(params)
    d = init.d
    if init.prep is Prep.ZERO:
        return d * d / (lam * lam) * params.gamma * t
    return d * d / (2.0 * lam * lam + 8.0 * init.sigma**2)


def _attenuation_parts(t: float, params: SimParams, init: CatInit):
    sm = second_moments(t, params, init)
    spread = fluctuation_moments(t, params).x2
    if init.prep is Prep.BATH:
        spread += params.m * params.kT * green_function(t, params).g ** 2
    return sm, math.exp(-spread * init.d**2 / (8.0 * init.sigma**2 * sm.a11))


def attenuation(t: float, params: SimParams, init: CatInit) -> float:
    """Surviving fringe amplitude in the position distribution."""
    return _attenuation_parts(t, params, init)[1]


def attenuation_shorttime(t: float, params: SimParams, init: CatInit) -> float:
    if not t >= 0.0:
        raise ParameterError(f"time must be >= 0, got {t!r}")
    sigma, d, m = init.sigma, init.d, params.m
    if init.prep is Prep.ZERO:
        if t == 0.0:
            return 1.0
        crossover = 2.0 * m * sigma**2 / params.hbar
        tau_d = decoherence_time(params, d)
        return math.exp(-(t**3) / (3.0 * tau_d * (t * t + crossover**2)))
    return math.exp(-params.kT * d * d * t * t / (8.0 * m * sigma**4))


def probability_distribution(x, t: float, params: SimParams, init: CatInit):
    x = np.asarray(x, dtype=float)
    sm, att = _attenuation_parts(t, params, init)
    ge = green_function(t, params)
    m, hbar, d, sigma = params.m, params.hbar, init.d, init.sigma
    a11 = sm.a11

    def single(y):
        return np.exp(-(y * y) / (2.0 * a11)) / math.sqrt(2.0 * math.pi * a11)

    shift = m * ge.gdot * d / 2.0
    envelope = math.exp(-(m * ge.gdot * d) ** 2 / (8.0 * a11))
    fringe = 2.0 * att * envelope * single(x) * np.cos(hbar * ge.g * d * x / (4.0 * sigma**2 * a11))
    return 0.5 * init.norm * (single(x - shift) + single(x + shift) + fringe)


def mixing_time(params: SimParams, sigma: float, d: float) -> float:
    """Time for free spreading to make the two packets overlap."""
    if not (sigma > 0.0 and d > 0.0):
        raise ParameterError("sigma and d must be positive")
    return 2.0 * params.m * sigma * d / params.hbar
