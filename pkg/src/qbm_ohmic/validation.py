"""Cross-validation suite run by ``qbm-ohmic validate``.

Each check returns the measured error and its tolerance. Checks belong to a
group (``closed``, ``quadrature``, ``fp``) so whole groups can be skipped.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import quad, trapezoid

from .cat import (
    CatInit,
    attenuation,
    attenuation_shorttime,
    char_function_cat,
    overlap_factor,
    wigner_cat,
    wigner_cat_terms,
)
from .core import Prep, SimParams, decoherence_time, fluctuation_moments, green_function
from .densmat import WitnessState, negativity_witness, purity, rho_element_cat, rho_element_gaussian
from .errors import NumericalFailure
from .gaussian import GaussianInit, char_function_gaussian, mean_trajectory, second_moments, wigner_gaussian
from .oracle import (
    PhaseSpaceGrid,
    char_box,
    char_to_wigner,
    extract_coefficients,
    fokker_planck_integrate,
    gaussian_grid,
    purity_quadrature,
    rho_quadrature,
    stable_dt,
)

ORACLE_TIMES = (0.0, 0.05, 1.0)  # in units of 1/gamma


@dataclass(frozen=True)
class CheckResult:
    name: str
    group: str
    error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return math.isfinite(self.error) and self.error <= self.tolerance

    def line(self) -> str:
        return f"{self.name},{float(self.error)!r},{float(self.tolerance)!r},{'PASS' if self.passed else 'FAIL'}"


@dataclass
class ValidationConfig:
    params: SimParams
    sigma: float
    d: float
    fp_nq: int = 256
    fp_np: int = 256
    fp_t_end: float | None = None  # defaults to 3/gamma


def phase_grid(t, params, init, n=64, widths=6.0):
    """Grid around the state's support at time ``t``."""
    sm = second_moments(t, params, init)
    centre = abs(getattr(init, "x0", 0.0)) + getattr(init, "d", 0.0) / 2.0
    q_half = centre + widths * math.sqrt(sm.a11)
    p_half = params.m * params.gamma * centre + widths * math.sqrt(sm.a22)
    return PhaseSpaceGrid.centred(q_half, p_half, n, n)


def _inits(cfg: ValidationConfig):
    lam = cfg.params.lambda_th
    for prep in Prep:
        yield GaussianInit(x0=lam, sigma=cfg.sigma, prep=prep), char_function_gaussian, wigner_gaussian, rho_element_gaussian
        yield CatInit(d=cfg.d, sigma=cfg.sigma, prep=prep), char_function_cat, wigner_cat, rho_element_cat


def check_green_identity(cfg):
    p = cfg.params
    worst = 0.0
    for t in np.linspace(0.0, 20.0 / p.gamma, 401):
        ge = green_function(t, p)
        worst = max(worst, abs(p.m * p.gamma * ge.g + p.m * ge.gdot - 1.0))
    return worst, 1e-12


def check_moments_quadrature(cfg):
    p = cfg.params
    worst = 0.0
    for t in np.linspace(0.01, 10.0, 11) / p.gamma:
        fm = fluctuation_moments(t, p)
        g = lambda s: -math.expm1(-p.gamma * s) / (p.m * p.gamma)
        gd = lambda s: math.exp(-p.gamma * s) / p.m
        scale = 2.0 * p.m * p.gamma * p.kT
        x2 = scale * quad(lambda s: g(s) ** 2, 0.0, t, epsabs=0, epsrel=1e-13)[0]
        xd2 = scale * quad(lambda s: gd(s) ** 2, 0.0, t, epsabs=0, epsrel=1e-13)[0]
        worst = max(worst, abs(fm.x2 / x2 - 1.0), abs(fm.xd2 / xd2 - 1.0))
    return worst, 1e-9


def check_wigner_quadrature(cfg):
    p = cfg.params
    worst = 0.0
    for init, char, wig, _ in _inits(cfg):
        for t in ORACLE_TIMES:
            t /= p.gamma
            grid = phase_grid(t, p, init)
            W = char_to_wigner(lambda Q, P: char(Q, P, t, p, init), grid, char_box(t, p, init), hbar=p.hbar)
            Q, P = grid.mesh()
            worst = max(worst, float(np.max(np.abs(W.values - wig(Q, P, t, p, init)))))
    return worst, 1e-8


def check_rho_quadrature(cfg):
    p = cfg.params
    worst = 0.0
    for init, char, _, rho in _inits(cfg):
        for t in ORACLE_TIMES:
            t /= p.gamma
            grid = phase_grid(t, p, init)
            x = np.linspace(grid.q_min, grid.q_max, 41)
            X, XP = np.meshgrid(x, x, indexing="ij")
            box = char_box(t, p, init)
            r = rho_quadrature(lambda Q, P: char(Q, P, t, p, init), X, XP, box[1], hbar=p.hbar)
            worst = max(worst, float(np.max(np.abs(r - rho(X, XP, t, p, init)))))
    return worst, 1e-7


def check_purity_quadrature(cfg):
    p = cfg.params
    worst = 0.0
    for prep in Prep:
        init = GaussianInit(0.0, cfg.sigma, prep)
        for t in (0.0, 0.05, 0.2, 1.0, 5.0):
            t /= p.gamma
            num = purity_quadrature(lambda Q, P: char_function_gaussian(Q, P, t, p, init), char_box(t, p, init), hbar=p.hbar)
            worst = max(worst, abs(num / purity(t, p, init) - 1.0))
    return worst, 1e-6


def check_purity_biconditional(cfg):
    """Count scanned times where purity > 1, witness < 0 and 4 det/hbar^2 < 1 disagree."""
    p = cfg.params
    init = GaussianInit(0.0, cfg.sigma, Prep.ZERO)
    ts = np.linspace(0.0, 2.0 / p.gamma, 1000)[1:]
    bad = 0
    for t in ts:
        a = purity(t, p, init) > 1.0
        b = negativity_witness(t, p, cfg.sigma) < 0.0
        c = 4.0 * second_moments(t, p, init).det / p.hbar**2 < 1.0
        bad += not (a == b == c)
    return float(bad), 0.0


def witness_by_quadrature(t, params, sigma, n=1201):
    """Double trapezoid of psi*(x) <x|rho|x'> psi(x') over the closed-form kernel."""
    init = GaussianInit(0.0, sigma, Prep.ZERO)
    half = 10.0 * max(sigma, math.sqrt(second_moments(t, params, init).a11))
    x = np.linspace(-half, half, n)
    psi = WitnessState(sigma, params)(x)
    X, XP = np.meshgrid(x, x, indexing="ij")
    rho = rho_element_gaussian(X, XP, t, params, init)
    inner = trapezoid(rho * psi[None, :], x, axis=1)
    return float(trapezoid(np.conj(psi) * inner, x).real)


def check_witness_quadrature(cfg):
    p = cfg.params
    worst = 0.0
    for t in (0.01, 0.1, 1.0):
        t /= p.gamma
        worst = max(worst, abs(witness_by_quadrature(t, p, cfg.sigma) - negativity_witness(t, p, cfg.sigma)))
    return worst, 1e-6


def check_coefficients(cfg):
    p = cfg.params
    worst = 0.0
    for t in np.geomspace(0.01, 5.0, 12) / p.gamma:
        c = extract_coefficients(t, p, (cfg.sigma, 2.0 * cfg.sigma))
        worst = max(
            worst,
            abs(c.gamma_coeff - p.gamma / 2.0),
            abs(c.omega2),
            abs(c.d_pp - p.m * p.gamma * p.kT),
            abs(c.d_qp),
        )
    return worst, 1e-6


def check_attenuation_shorttime(cfg):
    p = cfg.params
    t = 1e-3 / p.gamma
    worst = 0.0
    for prep in Prep:
        init = CatInit(cfg.d, cfg.sigma, prep)
        worst = max(worst, abs(attenuation(t, p, init) / attenuation_shorttime(t, p, init) - 1.0))
    return worst, 2e-2


def interference_area(t, params, init, n=1201):
    grid = phase_grid(t, params, init, n=n, widths=10.0)
    Q, P = grid.mesh()
    return grid.integrate(wigner_cat_terms(Q, P, t, params, init)[2])


def check_interference_area(cfg):
    p = cfg.params
    worst = 0.0
    tau = decoherence_time(p, cfg.d)
    for prep in Prep:
        init = CatInit(cfg.d, cfg.sigma, prep)
        e = overlap_factor(cfg.d, cfg.sigma)
        for t in (0.0, tau, 10.0 * tau):
            worst = max(worst, abs(interference_area(t, p, init) - e / (1.0 + e)))
    return worst, 1e-6


def fp_probe(params: SimParams) -> GaussianInit:
    """Single packet sized to the damping length sqrt(hbar/m gamma), displaced by the same."""
    width = math.sqrt(params.hbar / (params.m * params.gamma))
    return GaussianInit(x0=width, sigma=width, prep=Prep.ZERO)


def run_fp(params: SimParams, n_q=256, n_p=256, t_end=None, init=None):
    init = init or fp_probe(params)
    t_end = 3.0 / params.gamma if t_end is None else t_end
    grid = gaussian_grid(params, init, t_end, n_q, n_p)
    coeffs = extract_coefficients(0.0, params, (init.sigma, 2.0 * init.sigma))
    dt = stable_dt(grid, params, coeffs)
    return init, fokker_planck_integrate(grid, params, t_end, dt, snapshot_times=[1.0 / params.gamma])


def fp_moment_errors(params, init, snapshot, t):
    mq, mp, vq, cqp, vp = snapshot.moments()
    sm = second_moments(t, params, init)
    mx, mpp = mean_trajectory(t, params, init.x0)
    pairs = [(mq, mx), (mp, mpp), (vq, sm.a11), (cqp, sm.a12), (vp, sm.a22)]
    return [abs(a - b) / abs(b) for a, b in pairs]


def fp_checks(cfg: ValidationConfig) -> list[CheckResult]:
    p = cfg.params
    try:
        init, traj = run_fp(p, cfg.fp_nq, cfg.fp_np, cfg.fp_t_end)
    except NumericalFailure:
        return [CheckResult("fp_moments_t1", "fp", math.inf, 1e-2), CheckResult("fp_mass", "fp", math.inf, 1e-6)]
    t1 = 1.0 / p.gamma
    errs = fp_moment_errors(p, init, traj.at(t1), t1)
    return [
        CheckResult("fp_moments_t1", "fp", max(errs), 1e-2),
        CheckResult("fp_mass", "fp", traj.mass_drift, 1e-6),
    ]


CHECKS: list[tuple[str, str, Callable]] = [
    ("green_identity", "closed", check_green_identity),
    ("moments_vs_quadrature", "quadrature", check_moments_quadrature),
    ("wigner_vs_quadrature", "quadrature", check_wigner_quadrature),
    ("rho_vs_quadrature", "quadrature", check_rho_quadrature),
    ("purity_vs_quadrature", "quadrature", check_purity_quadrature),
    ("purity_witness_biconditional", "closed", check_purity_biconditional),
    ("witness_vs_quadrature", "quadrature", check_witness_quadrature),
    ("coefficients", "closed", check_coefficients),
    ("attenuation_shorttime", "closed", check_attenuation_shorttime),
    ("interference_area", "quadrature", check_interference_area),
]


def run_validation(cfg: ValidationConfig, skip=()) -> list[CheckResult]:
    skip = set(skip)
    results = []
    for name, group, fn in CHECKS:
        if group in skip or name in skip:
            continue
        try:
            err, tol = fn(cfg)
        except NumericalFailure:
            err, tol = math.inf, 0.0
        results.append(CheckResult(name, group, float(err), float(tol)))
    if "fp" not in skip:
        results.extend(fp_checks(cfg))
    return results
