"""Recover the master equation's time-dependent coefficients from the closed-form solution.

The mean flow fixes the drift matrix ``Mdot M^{-1}``; the covariance flow
``dS/dt = D S + S D^T + B`` then fixes the diffusion matrix ``B``. Neither
depends on the state, so two probe widths must give the same answer.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import Prep, SimParams, green_function, third_derivative, transfer_matrix
from ..errors import CoefficientMismatch, ParameterError
from ..gaussian import GaussianInit, initial_momentum_variance, second_moments


@dataclass(frozen=True)
class ExtractedCoefficients:
    gamma_coeff: float  # Gamma(t)
    omega2: float  # Omega^2(t)
    d_pp: float  # coefficient of d^2W/dp^2
    d_qp: float  # coefficient of d^2W/dq dp
    # pieces that must vanish (or equal 1/m) for the equation to have the assumed form
    drift_qq: float = 0.0
    drift_qp: float = 0.0
    diff_qq: float = 0.0


def drift_matrix(t: float, params: SimParams) -> np.ndarray:
    ge = green_function(t, params)
    m = params.m
    Mdot = np.array([[m * ge.gddot, ge.gdot], [m * m * third_derivative(t, params), m * ge.gddot]])
    return Mdot @ np.linalg.inv(transfer_matrix(t, params))


def covariance_rate(t: float, params: SimParams, sigma: float, prep: Prep = Prep.BATH) -> np.ndarray:
    """Analytic dS/dt of the closed-form covariance."""
    ge = green_function(t, params)
    m = params.m
    M = transfer_matrix(t, params)
    Mdot = np.array([[m * ge.gddot, ge.gdot], [m * m * third_derivative(t, params), m * ge.gddot]])
    S0 = np.diag([sigma * sigma, initial_momentum_variance(params, sigma, prep)])
    coherent = Mdot @ S0 @ M.T
    g, mgd = ge.g, m * ge.gdot
    bath = 2.0 * m * params.gamma * params.kT * np.array([[g * g, g * mgd], [g * mgd, mgd * mgd]])
    return coherent + coherent.T + bath


def _single_probe(t: float, params: SimParams, sigma: float) -> ExtractedCoefficients:
    D = drift_matrix(t, params)
    S = second_moments(t, params, GaussianInit(0.0, sigma, Prep.BATH)).matrix()
    B = covariance_rate(t, params, sigma) - D @ S - S @ D.T
    return ExtractedCoefficients(
        gamma_coeff=-0.5 * D[1, 1],
        omega2=-D[1, 0] / params.m,
        d_pp=0.5 * B[1, 1],
        d_qp=0.5 * (B[0, 1] + B[1, 0]),
        drift_qq=D[0, 0],
        drift_qp=D[0, 1],
        diff_qq=B[0, 0],
    )


def extract_coefficients(
    t: float, params: SimParams, sigma_probes: tuple[float, float], tol: float = 1e-6
) -> ExtractedCoefficients:
    """Coefficients at time ``t`` (``t = 0`` means ``0+``), cross-checked over two widths."""
    if not t >= 0.0:
        raise ParameterError(f"time must be >= 0, got {t!r}")
    s1, s2 = sigma_probes
    if not (s1 > 0 and s2 > 0) or s1 == s2:
        raise ParameterError("need two distinct positive probe widths")
    c1 = _single_probe(t, params, s1)
    c2 = _single_probe(t, params, s2)
    for name in ("gamma_coeff", "omega2", "d_pp", "d_qp", "drift_qq", "diff_qq"):
        a, b = getattr(c1, name), getattr(c2, name)
        if abs(a - b) > tol:
            raise CoefficientMismatch(f"{name} differs between probes: {a!r} vs {b!r}")
    return c1
