"""Direct method-of-lines integration of the phase-space master equation.

    dW/dt = -(p/m) dW/dq + m Omega^2 q dW/dp + 2 Gamma d(pW)/dp
            + d_pp d^2W/dp^2 + d_qp d^2W/dq dp

with coefficients supplied by ``extract_coefficients``. Start from the
post-coupling state; the impulsive squeeze at ``t = 0`` is never integrated.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .. import kernels
from ..core import SimParams
from ..errors import NumericalFailure, ParameterError
from ..gaussian import initial_squeezed_state, second_moments
from .coefficients import ExtractedCoefficients, extract_coefficients
from .grid import PhaseSpaceGrid

# dt * (advective rate + diffusive rate); RK4 is stable to about 2.8 on either axis
CFL_LIMIT = 2.0
MASS_TOL = 1e-6
NEGATIVITY_FLAG = 1e-3

CoefficientSource = Callable[[float], ExtractedCoefficients]


@dataclass
class FPTrajectory:
    times: list[float] = field(default_factory=list)
    snapshots: list[PhaseSpaceGrid] = field(default_factory=list)
    mass_drift: float = 0.0
    min_ratio: float = 0.0  # most negative min(W)/max(W) seen
    initial_min_ratio: float = 0.0
    steps: int = 0
    backend: str = kernels.BACKEND

    @property
    def final(self) -> PhaseSpaceGrid:
        return self.snapshots[-1]

    def at(self, t: float) -> PhaseSpaceGrid:
        i = int(np.argmin(np.abs(np.asarray(self.times) - t)))
        return self.snapshots[i]


def default_coefficients(params: SimParams, sigma_probes=(1.0, 2.0)) -> CoefficientSource:
    cache: dict[float, ExtractedCoefficients] = {}

    def source(t: float) -> ExtractedCoefficients:
        if t not in cache:
            cache[t] = extract_coefficients(t, params, sigma_probes)
        return cache[t]

    return source


def cfl_number(grid: PhaseSpaceGrid, params: SimParams, coeffs: ExtractedCoefficients, dt: float) -> float:
    q, p = grid.q, grid.p
    v_q = np.max(np.abs(p)) / params.m
    v_p = np.max(np.abs(params.m * coeffs.omega2 * q)) + 2.0 * abs(coeffs.gamma_coeff) * np.max(np.abs(p))
    adv = v_q / grid.dq + v_p / grid.dp
    diff = 4.0 * abs(coeffs.d_pp) / grid.dp**2 + 2.0 * abs(coeffs.d_qp) / (grid.dq * grid.dp)
    return dt * (adv + diff)


def stable_dt(grid: PhaseSpaceGrid, params: SimParams, coeffs: ExtractedCoefficients, safety: float = 0.9) -> float:
    return safety * CFL_LIMIT / cfl_number(grid, params, coeffs, 1.0)


def gaussian_grid(
    params: SimParams, init, t_end: float, nq: int = 256, np_: int | None = None, widths: float = 8.0
) -> PhaseSpaceGrid:
    """Grid holding a single packet from coupling until ``t_end``, filled with the post-coupling state."""
    ends = [second_moments(t, params, init) for t in (0.0, t_end)]
    std_q = max(math.sqrt(s.a11) for s in ends)
    std_p = max(math.sqrt(s.a22) for s in ends)
    grid = PhaseSpaceGrid.centred(
        abs(init.x0) + widths * std_q, params.m * params.gamma * abs(init.x0) + widths * std_p, nq, np_ or nq
    )
    return grid.sample(lambda q, p: initial_squeezed_state(q, p, params, init))


def fokker_planck_integrate(
    initial: PhaseSpaceGrid,
    params: SimParams,
    t_end: float,
    dt: float,
    snapshot_times=None,
    coefficients: CoefficientSource | None = None,
    rhs=None,
) -> FPTrajectory:
    """Classical RK4 in time on the conservative stencil.

    Returns snapshots at ``snapshot_times`` (always including 0 and ``t_end``).
    Raises ``NumericalFailure`` on a CFL violation, NaN, or mass drift above 1e-6.
    """
    if initial.values is None:
        raise ParameterError("initial grid has no values")
    if not (t_end >= 0.0 and dt > 0.0):
        raise ParameterError("need t_end >= 0 and dt > 0")
    traj = FPTrajectory()
    coeffs_at = coefficients or default_coefficients(params)
    rhs = rhs or kernels.fp_rhs
    q, p = initial.q, initial.p
    dq, dp, m = initial.dq, initial.dp, params.m

    W = np.array(initial.values, dtype=float, order="C")
    mass0 = W.sum()
    traj.initial_min_ratio = traj.min_ratio = min(0.0, W.min() / W.max())
    wanted = sorted({0.0, float(t_end), *(float(s) for s in (snapshot_times or ()) if 0.0 <= s <= t_end)})

    def record(t, W):
        traj.times.append(t)
        traj.snapshots.append(initial.with_values(W.copy()))

    n_steps = int(math.ceil(t_end / dt - 1e-9)) if t_end > 0 else 0
    h = t_end / n_steps if n_steps else 0.0
    if n_steps:
        for tt in (0.0, t_end):
            c = coeffs_at(tt)
            cfl = cfl_number(initial, params, c, h)
            if cfl > CFL_LIMIT:
                raise NumericalFailure(f"CFL number {cfl:.3f} exceeds {CFL_LIMIT} (dt={h:.3e}); reduce dt")

    def F(t, W, out):
        c = coeffs_at(t)
        return rhs(W, q, p, dq, dp, m, c.gamma_coeff, c.omega2, c.d_pp, c.d_qp, out)

    k1, k2, k3, k4 = (np.empty_like(W) for _ in range(4))
    next_snap = 0
    t = 0.0
    for step in range(n_steps + 1):
        t = step * h
        while next_snap < len(wanted) and wanted[next_snap] <= t + 0.5 * h:
            record(t, W)
            next_snap += 1
        if step == n_steps:
            break
        F(t, W, k1)
        F(t + 0.5 * h, W + 0.5 * h * k1, k2)
        F(t + 0.5 * h, W + 0.5 * h * k2, k3)
        F(t + h, W + h * k3, k4)
        W += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.isfinite(W).all():
            raise NumericalFailure(f"non-finite values at t={t + h:.4g}")
        wmax = W.max()
        traj.min_ratio = min(traj.min_ratio, W.min() / wmax)
    while next_snap < len(wanted):
        record(t, W)
        next_snap += 1
    traj.steps = n_steps

    traj.mass_drift = abs(W.sum() - mass0) / abs(mass0)
    if traj.mass_drift > MASS_TOL:
        raise NumericalFailure(f"mass drift {traj.mass_drift:.3e} exceeds {MASS_TOL}")
    # only negativity beyond what the initial data already had (cat fringes) is suspicious
    if traj.min_ratio < traj.initial_min_ratio - NEGATIVITY_FLAG:
        warnings.warn(f"Fokker-Planck solution went negative: min/max = {traj.min_ratio:.3e}", RuntimeWarning)
    return traj
