"""Brute-force Fourier quadratures over a characteristic function.

These evaluate the defining integrals directly with the trapezoidal rule on a
truncated box, doubling the node count until the answer settles. They use
nothing from the closed forms except the box size.
"""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

from ..cat import CatInit
from ..core import SimParams, green_function
from ..errors import ConvergenceError, ParameterError
from ..gaussian import second_moments
from .grid import PhaseSpaceGrid

CharSampler = Callable[[np.ndarray, np.ndarray], np.ndarray]

DEFAULT_NODES = 256
MAX_NODES = 8192
BOX_WIDTHS = 8.0


def char_box(t: float, params: SimParams, init, widths: float = BOX_WIDTHS) -> tuple[float, float]:
    """Half-widths ``(Q_half, P_half)`` holding the characteristic function's support.

    ``widths`` standard deviations of the Gaussian envelope, widened for a cat
    by the offset of its displaced (cosh) components.
    """
    sm = second_moments(t, params, init)
    hbar = params.hbar
    std_p = hbar * math.sqrt(sm.a22 / sm.det)
    std_q = hbar * math.sqrt(sm.a11 / sm.det)
    off_p = off_q = 0.0
    if isinstance(init, CatInit):
        ge = green_function(t, params)
        scale = init.d / (4.0 * init.sigma**2)
        b_p, b_q = ge.g * scale, params.m * ge.gdot * scale
        # centre hbar^2 A^{-1} b of exp(-v.A.v/2hbar^2 + b.v), v = (P, Q)
        off_p = abs(hbar**2 * (sm.a22 * b_p - sm.a12 * b_q) / sm.det)
        off_q = abs(hbar**2 * (sm.a11 * b_q - sm.a12 * b_p) / sm.det)
    return off_q + widths * std_q, off_p + widths * std_p


def _nodes(half: float, n: int):
    x = np.linspace(-half, half, n)
    w = np.full(n, x[1] - x[0])
    w[0] *= 0.5
    w[-1] *= 0.5
    return x, w


def _settle(compute, n_nodes: int, tol: float, max_nodes: int, what: str, check: bool = True):
    n = n_nodes
    prev = compute(n)
    if not check:
        return prev, float("nan")
    while True:
        n2 = 2 * n - 1  # nested: keeps every previous node
        cur = compute(n2)
        err = float(np.max(np.abs(cur - prev)))
        scale = max(float(np.max(np.abs(cur))), 1e-300)
        if err <= tol * max(scale, 1.0) or err == 0.0:
            return cur, err
        if n2 > max_nodes:
            raise ConvergenceError(f"{what}: change {err:.3e} on doubling to {n2} nodes exceeds {tol:.1e}", err)
        prev, n = cur, n2


def char_to_wigner(
    char_sampler: CharSampler,
    grid: PhaseSpaceGrid,
    box: tuple[float, float],
    hbar: float = 1.0,
    n_nodes: int = DEFAULT_NODES,
    tol: float = 1e-11,
    max_nodes: int = MAX_NODES,
    check: bool = True,
) -> PhaseSpaceGrid:
    """Wigner function on ``grid`` by inverse Fourier quadrature of ``char_sampler(Q, P)``."""
    q_half, p_half = box
    if not (q_half > 0 and p_half > 0):
        raise ParameterError("quadrature box must have positive half-widths")
    q, p = grid.q, grid.p
    pref = 1.0 / (2.0 * math.pi * hbar) ** 2
    residue = [0.0]

    def compute(n):
        Qn, wq = _nodes(q_half, n)
        Pn, wp = _nodes(p_half, n)
        F = np.asarray(char_sampler(Qn[:, None], Pn[None, :]), dtype=complex) * wq[:, None] * wp[None, :]
        eq = np.exp(1j * np.outer(p, Qn) / hbar)  # (np_out, nQ)
        ep = np.exp(1j * np.outer(q, Pn) / hbar)  # (nq_out, nP)
        W = pref * (ep @ F.T @ eq.T)
        residue[0] = float(np.max(np.abs(W.imag)))
        return W.real

    W, err = _settle(compute, n_nodes, tol, max_nodes, "char_to_wigner", check)
    return grid.with_values(W, imag_residue=residue[0], error_estimate=err)


def purity_quadrature(
    char_sampler: CharSampler,
    box: tuple[float, float],
    hbar: float = 1.0,
    n_nodes: int = DEFAULT_NODES,
    tol: float = 1e-11,
    max_nodes: int = MAX_NODES,
    return_error: bool = False,
):
    """Tr rho^2 = (1/2 pi hbar) integral of |char|^2 over the (Q, P) plane."""
    q_half, p_half = box

    def compute(n):
        Qn, wq = _nodes(q_half, n)
        Pn, wp = _nodes(p_half, n)
        F = np.abs(np.asarray(char_sampler(Qn[:, None], Pn[None, :]))) ** 2
        return np.array(wq @ F @ wp / (2.0 * math.pi * hbar))

    val, err = _settle(compute, n_nodes, tol, max_nodes, "purity_quadrature")
    return (float(val), err) if return_error else float(val)


def rho_quadrature(
    char_sampler: CharSampler,
    x,
    x_prime,
    p_half: float,
    hbar: float = 1.0,
    n_nodes: int = DEFAULT_NODES,
    tol: float = 1e-11,
    max_nodes: int = MAX_NODES,
    return_error: bool = False,
):
    """<x|rho|x'> = (1/2 pi hbar) integral dP exp(i(x+x')P/2hbar) char(x'-x, P)."""
    x = np.asarray(x, dtype=float)
    xp = np.asarray(x_prime, dtype=float)
    x, xp = np.broadcast_arrays(x, xp)
    Qs = (xp - x)[..., None]
    Xs = (x + xp)[..., None]

    def compute(n):
        Pn, wp = _nodes(p_half, n)
        F = np.asarray(char_sampler(Qs, Pn), dtype=complex) * np.exp(1j * Xs * Pn / (2.0 * hbar))
        return F @ wp / (2.0 * math.pi * hbar)

    val, err = _settle(compute, n_nodes, tol, max_nodes, "rho_quadrature")
    return (val, err) if return_error else val
