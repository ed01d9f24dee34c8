"""A single Gaussian wave packet released into the bath.

The state after coupling is Gaussian at every time, so it is fixed by its mean
(drifting toward the origin) and its second moments ``A11 = dx^2``, ``A22 = dp^2``
and the symmetrised covariance ``A12``. All quantities come from closed forms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Prep, SimParams, fluctuation_moments, green_function, transfer_matrix
from .errors import ParameterError

__all__ = [
    "GaussianInit",
    "SecondMoments",
    "second_moments",
    "mean_trajectory",
    "char_function_initial",
    "char_function_gaussian",
    "wigner_gaussian",
    "gaussian_density",
    "initial_squeezed_state",
]


@dataclass(frozen=True)
class GaussianInit:
    x0: float = 0.0
    sigma: float = 0.1
    prep: Prep = Prep.ZERO

    def __post_init__(self):
        object.__setattr__(self, "prep", Prep(self.prep))
        if not (math.isfinite(self.sigma) and self.sigma > 0.0):
            raise ParameterError(f"sigma must be positive, got {self.sigma!r}")
        if not math.isfinite(self.x0):
            raise ParameterError("x0 must be finite")


@dataclass(frozen=True)
class SecondMoments:
    """Covariance of the packet at one time.

    ``det`` is assembled from the deterministic and bath parts separately so that
    it equals ``hbar^2/4`` exactly at ``t = 0`` for a ground-state packet; it
    agrees with ``a11*a22 - a12**2`` to rounding everywhere else.
    """

    a11: float
    a12: float
    a22: float
    det: float
    prep: Prep

    def matrix(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a12, self.a22]])


def initial_momentum_variance(params: SimParams, sigma: float, prep: Prep) -> float:
    """Momentum variance of the packet before coupling (thermal part added for BATH)."""
    var = params.hbar**2 / (4.0 * sigma**2)
    if Prep(prep) is Prep.BATH:
        var += params.m * params.kT
    return var


def initial_area(params: SimParams, sigma: float, prep: Prep) -> float:
    """``sigma^2`` times the initial momentum variance, kept exact (hbar^2/4 for ZERO)."""
    area = params.hbar**2 / 4.0
    if Prep(prep) is Prep.BATH:
        area += sigma * sigma * params.m * params.kT
    return area


def _assemble(M, det_m, s_xx, s_pp, n11, n12, n22, area=None):
    """Moments of ``M diag(s_xx, s_pp) M^T + N`` and their determinant.

    The determinant is built from its coherent, cross and bath pieces rather
    than from ``a11*a22 - a12**2``, which cancels badly at short times.
    ``area`` overrides the rounded product ``s_xx*s_pp``.
    """
    if area is None:
        area = s_xx * s_pp
    b11 = M[0, 0] ** 2 * s_xx + M[0, 1] ** 2 * s_pp
    b12 = M[0, 0] * M[1, 0] * s_xx + M[0, 1] * M[1, 1] * s_pp
    b22 = M[1, 0] ** 2 * s_xx + M[1, 1] ** 2 * s_pp
    det = det_m * det_m * area + (b22 * n11 + b11 * n22 - 2.0 * b12 * n12) + (n11 * n22 - n12 * n12)
    return b11 + n11, b12 + n12, b22 + n22, det


def _parts(t: float, params: SimParams):
    fm = fluctuation_moments(t, params)
    m = params.m
    return transfer_matrix(t, params), math.exp(-params.gamma * t), (fm.x2, 0.5 * m * fm.xxd, m * m * fm.xd2)


def second_moments(t: float, params: SimParams, init) -> SecondMoments:
    """Closed-form second moments; ``init`` needs ``sigma`` and ``prep`` attributes."""
    prep = Prep(init.prep)
    sigma = init.sigma
    if not sigma > 0.0:
        raise ParameterError(f"sigma must be positive, got {sigma!r}")
    M, det_m, bath = _parts(t, params)
    s_pp = initial_momentum_variance(params, sigma, prep)
    a11, a12, a22, det = _assemble(M, det_m, sigma * sigma, s_pp, *bath, area=initial_area(params, sigma, prep))
    return SecondMoments(a11=a11, a12=a12, a22=a22, det=det, prep=prep)


def mean_trajectory(t: float, params: SimParams, x0: float) -> tuple[float, float]:
    ge = green_function(t, params)
    m = params.m
    return m * ge.gdot * x0, m * m * ge.gddot * x0


def char_function_initial(Q, P, params: SimParams, init: GaussianInit):
    """Characteristic function of the packet before coupling (no squeeze)."""
    Q = np.asarray(Q, dtype=float)
    P = np.asarray(P, dtype=float)
    hbar = params.hbar
    expo = -Q**2 / (8.0 * init.sigma**2) - init.sigma**2 * P**2 / (2.0 * hbar**2)
    if init.prep is Prep.BATH:
        expo = expo - params.m * params.kT * Q**2 / (2.0 * hbar**2)
    return np.exp(expo - 1j * init.x0 * P / hbar)


def char_function_gaussian(Q, P, t: float, params: SimParams, init: GaussianInit):
    Q = np.asarray(Q, dtype=float)
    P = np.asarray(P, dtype=float)
    sm = second_moments(t, params, init)
    mean_x, mean_p = mean_trajectory(t, params, init.x0)
    hbar = params.hbar
    quad = sm.a11 * P**2 + 2.0 * sm.a12 * P * Q + sm.a22 * Q**2
    return np.exp(-quad / (2.0 * hbar**2) - 1j * (mean_p * Q + mean_x * P) / hbar)


def gaussian_density(q, p, sm: SecondMoments):
    """Centred phase-space Gaussian with covariance ``sm``."""
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    quad = sm.a22 * q**2 - 2.0 * sm.a12 * q * p + sm.a11 * p**2
    return np.exp(-quad / (2.0 * sm.det)) / (2.0 * math.pi * math.sqrt(sm.det))


def wigner_gaussian(q, p, t: float, params: SimParams, init: GaussianInit):
    sm = second_moments(t, params, init)
    mean_x, mean_p = mean_trajectory(t, params, init.x0)
    return gaussian_density(np.asarray(q) - mean_x, np.asarray(p) - mean_p, sm)


def initial_squeezed_state(q, p, params: SimParams, init: GaussianInit):
    """Wigner function just after coupling, written out explicitly.

    The coupling kicks each phase-space point by ``-m gamma q``; the width in
    position is untouched.
    """
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    hbar, sigma = params.hbar, init.sigma
    kick = p + params.m * params.gamma * q
    if init.prep is Prep.ZERO:
        norm = 1.0 / (math.pi * hbar)
        expo = -((q - init.x0) ** 2) / (2.0 * sigma**2) - 2.0 * sigma**2 * kick**2 / hbar**2
    else:
        lam = params.lambda_th
        norm = 1.0 / (math.pi * hbar * math.sqrt(1.0 + 4.0 * sigma**2 / lam**2))
        pvar = hbar**2 / (4.0 * sigma**2) + params.m * params.kT
        expo = -((q - init.x0) ** 2) / (2.0 * sigma**2) - kick**2 / (2.0 * pvar)
    return norm * np.exp(expo)
