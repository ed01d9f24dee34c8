"""Coordinate-space density matrix, purity and an explicit negativity witness.

For short times after coupling the high-temperature solution can have
``Tr rho^2 > 1``; ``negativity_witness`` exhibits a normalised state whose
expectation value is then negative.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cat import CatInit, _geometry_at
from .core import Prep, SimParams, green_function, thermal_wavelength
from .errors import ParameterError
from .gaussian import GaussianInit, SecondMoments, mean_trajectory, second_moments

__all__ = [
    "DensityMatrixSample",
    "WitnessState",
    "rho_kernel",
    "rho_element_gaussian",
    "rho_element_cat",
    "purity",
    "purity_shorttime",
    "negativity_witness",
    "rho_grid",
    "rho_spectrum",
]


@dataclass(frozen=True)
class DensityMatrixSample:
    x: float
    x_prime: float
    value: complex


@dataclass(frozen=True)
class WitnessState:
    """Derivative of the squeezed ground-state packet at the origin.

    It is orthogonal to the state right after coupling, so its overlap with
    ``rho(t)`` starts at zero and goes negative when positivity fails.
    """

    sigma: float
    params: SimParams

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        sigma, m, gamma, hbar = self.sigma, self.params.m, self.params.gamma, self.params.hbar
        norm = 1.0 / (sigma * (2.0 * math.pi * sigma**2) ** 0.25)
        return norm * x * np.exp(-(1.0 / (4.0 * sigma**2) + 1j * m * gamma / (2.0 * hbar)) * x * x)


def rho_kernel(x, xp, sm: SecondMoments, hbar: float):
    """Matrix element of a Gaussian state centred at the origin with covariance ``sm``."""
    x = np.asarray(x, dtype=float)
    xp = np.asarray(xp, dtype=float)
    a11 = sm.a11
    diff, total = x - xp, x + xp
    expo = -(4.0 * sm.det / hbar**2 * diff**2 + total**2) / (8.0 * a11)
    phase = sm.a12 * (x * x - xp * xp) / (2.0 * hbar * a11)
    return np.exp(expo + 1j * phase) / math.sqrt(2.0 * math.pi * a11)


def rho_element_gaussian(x, x_prime, t: float, params: SimParams, init: GaussianInit):
    sm = second_moments(t, params, init)
    mean_x, mean_p = mean_trajectory(t, params, init.x0)
    x = np.asarray(x, dtype=float)
    xp = np.asarray(x_prime, dtype=float)
    phase = np.exp(1j * mean_p * (x - xp) / params.hbar)
    return phase * rho_kernel(x - mean_x, xp - mean_x, sm, params.hbar)


def rho_element_cat(x, x_prime, t: float, params: SimParams, init: CatInit):
    """Four Gaussian peaks: two on the diagonal, two off it weighted by ``exp(-A)``."""
    geo = _geometry_at(t, params, init)
    sm = geo.moments
    ge = green_function(t, params)
    m, hbar, d, sigma = params.m, params.hbar, init.d, init.sigma
    x = np.asarray(x, dtype=float)
    xp = np.asarray(x_prime, dtype=float)

    k_shift = hbar**2 * (m * ge.gdot * sm.a11 - ge.g * sm.a12) / (4.0 * sigma**2 * sm.det)
    l_wave = m * m * ge.gddot / hbar
    m_wave = hbar * (m * ge.gdot * sm.a12 - ge.g * sm.a22) / (4.0 * sigma**2 * sm.det)
    c = m * ge.gdot * d / 2.0
    h = d / 2.0
    damp = math.exp(-geo.measure.a_of_t)

    diag = np.exp(1j * l_wave * h * (x - xp)) * rho_kernel(x - c, xp - c, sm, hbar)
    diag += np.exp(-1j * l_wave * h * (x - xp)) * rho_kernel(x + c, xp + c, sm, hbar)
    off = np.exp(1j * m_wave * h * (x + xp)) * rho_kernel(x - k_shift * h, xp + k_shift * h, sm, hbar)
    off += np.exp(-1j * m_wave * h * (x + xp)) * rho_kernel(x + k_shift * h, xp - k_shift * h, sm, hbar)
    return 0.5 * init.norm * (diag + damp * off)


def purity(t: float, params: SimParams, init) -> float:
    """Tr rho^2 for a single Gaussian packet."""
    if isinstance(init, CatInit):
        raise ParameterError("no closed form for cat purity; use oracle.purity_quadrature or rho_spectrum")
    sm = second_moments(t, params, init)
    return params.hbar / (2.0 * math.sqrt(sm.det))


def purity_shorttime(t: float, params: SimParams, sigma: float) -> float:
    """Linear growth of purity for a ground-state packet just after coupling."""
    lam = thermal_wavelength(params)
    return 1.0 + (1.0 - 4.0 * sigma**2 / lam**2) * params.gamma * t


def negativity_witness(t: float, params: SimParams, sigma: float, prep: Prep = Prep.ZERO) -> float:
    """<psi, rho(t) psi> for the witness state and a packet initially at the origin.

    Negative exactly when ``4 det(A) / hbar^2 < 1``.
    """
    sm = second_moments(t, params, GaussianInit(x0=0.0, sigma=sigma, prep=prep))
    hbar, a11 = params.hbar, sm.a11
    excess = 4.0 * sm.det / hbar**2
    bracket = (1.0 + a11 / sigma**2) * (1.0 + sigma**2 * excess / a11)
    bracket += 4.0 * sigma**2 * (sm.a12 + params.m * params.gamma * a11) ** 2 / (hbar**2 * a11)
    return -2.0 * (1.0 - excess) / bracket**1.5


def _grid_extent(t: float, params: SimParams, init) -> float:
    sm = second_moments(t, params, init)
    width = max(init.sigma, math.sqrt(sm.a11))
    centre = abs(getattr(init, "x0", 0.0)) + getattr(init, "d", 0.0) / 2.0
    return centre + 8.0 * width


def rho_grid(t: float, params: SimParams, init, n: int = 256, extent: float | None = None):
    """Sample <x|rho|x'> on an ``n``-point grid; returns ``(x, rho)``."""
    if extent is None:
        extent = _grid_extent(t, params, init)
    x = np.linspace(-extent, extent, n)
    X, XP = np.meshgrid(x, x, indexing="ij")
    if isinstance(init, CatInit):
        rho = rho_element_cat(X, XP, t, params, init)
    else:
        rho = rho_element_gaussian(X, XP, t, params, init)
    return x, rho


def rho_spectrum(t: float, params: SimParams, init, n: int = 256, extent: float | None = None) -> np.ndarray:
    """Eigenvalues (ascending) of the discretised density matrix.

    The kernel is symmetrised to remove rounding-level anti-Hermitian parts and
    scaled by the grid step. ``sum(ev**2)`` approximates the purity; negative
    eigenvalues flag loss of positivity.
    """
    x, rho = rho_grid(t, params, init, n=n, extent=extent)
    dx = x[1] - x[0]
    herm = 0.5 * (rho + rho.conj().T)
    return np.linalg.eigvalsh(herm * dx)
