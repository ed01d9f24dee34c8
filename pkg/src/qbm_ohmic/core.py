"""Bath and particle constants, the Ohmic Green function and the bath-induced moments.

Everything here is a pure function of immutable inputs. Times are measured from
the instant of coupling; ``t = 0`` always means the post-coupling limit ``0+``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

__all__ = [
    "Prep",
    "SimParams",
    "GreenEval",
    "FluctuationMoments",
    "P1",
    "green_function",
    "fluctuation_moments",
    "thermal_wavelength",
    "decoherence_time",
]

# Below this value of gamma*t the closed form for <X^2> is summed as a series.
_SERIES_SWITCH = 0.5


class Prep(str, enum.Enum):
    """Initial particle preparation: ground-state packet or thermalised at the bath temperature."""

    ZERO = "zero"
    BATH = "bath"


@dataclass(frozen=True)
class SimParams:
    m: float = 1.0
    gamma: float = 1.0
    kT: float = 5.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("m", "gamma", "kT", "hbar"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise ParameterError(f"{name} must be finite and positive, got {value!r}")

    @property
    def lambda_th(self) -> float:
        return thermal_wavelength(self)


#: Reference parameters: hbar = m = gamma = 1, kT = 5 hbar gamma, so lambda_th^2 = 1/5.
P1 = SimParams(m=1.0, gamma=1.0, kT=5.0, hbar=1.0)


@dataclass(frozen=True)
class GreenEval:
    g: float
    gdot: float
    gddot: float


@dataclass(frozen=True)
class FluctuationMoments:
    """Bath-induced moments <X^2>, <X Xdot + Xdot X> and <Xdot^2>."""

    x2: float
    xxd: float
    xd2: float


def _check_time(t: float) -> float:
    t = float(t)
    if not t >= 0.0:
        raise ParameterError(f"time must be >= 0, got {t!r}")
    return t


def one_minus_exp(u: float) -> float:
    """``1 - exp(-u)`` without cancellation at small ``u``."""
    return -math.expm1(-u)


def _x2_shape(u: float) -> float:
    """``2u - (1 - e^-u)(3 - e^-u)``, which starts at order ``u^3``."""
    if u < _SERIES_SWITCH:
        total = 0.0
        term = u * u / 2.0  # u^k / k! at k = 2
        for k in range(3, 40):
            term *= u / k
            c = (2.0**k - 4.0) * term
            total += c if k % 2 else -c
            if abs(c) < 1e-18 * abs(total):
                break
        return total
    em1 = one_minus_exp(u)
    return 2.0 * u - em1 * (2.0 + em1)


def green_function(t: float, params: SimParams) -> GreenEval:
    """G(t) = (1 - e^{-gamma t})/(m gamma) with its first two time derivatives."""
    t = _check_time(t)
    m, gamma = params.m, params.gamma
    decay = math.exp(-gamma * t)
    return GreenEval(
        g=one_minus_exp(gamma * t) / (m * gamma),
        gdot=decay / m,
        gddot=-gamma * decay / m,
    )


def fluctuation_moments(t: float, params: SimParams) -> FluctuationMoments:
    t = _check_time(t)
    m, gamma, kT = params.m, params.gamma, params.kT
    u = gamma * t
    em1 = one_minus_exp(u)
    return FluctuationMoments(
        x2=kT / (m * gamma**2) * _x2_shape(u),
        xxd=2.0 * kT / (m * gamma) * em1 * em1,
        xd2=kT / m * one_minus_exp(2.0 * u),
    )


def thermal_wavelength(params: SimParams) -> float:
    """Thermal de Broglie wavelength hbar / sqrt(m kT)."""
    return params.hbar / math.sqrt(params.m * params.kT)


def decoherence_time(params: SimParams, d: float) -> float:
    """Decay time of the phase-space interference peak for packets ``d`` apart."""
    if not (math.isfinite(d) and d > 0.0):
        raise ParameterError(f"separation must be positive, got {d!r}")
    lam = thermal_wavelength(params)
    return lam * lam / (d * d) / params.gamma


def third_derivative(t: float, params: SimParams) -> float:
    """d^3 G/dt^3, needed only by the coefficient extraction."""
    t = _check_time(t)
    return params.gamma**2 * math.exp(-params.gamma * t) / params.m


def transfer_matrix(t: float, params: SimParams) -> np.ndarray:
    """Classical map from initial to current (position, momentum) means."""
    ge = green_function(t, params)
    m = params.m
    return np.array([[m * ge.gdot, ge.g], [m * m * ge.gddot, m * ge.gdot]])
