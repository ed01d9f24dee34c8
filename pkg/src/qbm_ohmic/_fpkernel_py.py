"""Numpy implementation of the phase-space Fokker-Planck right-hand side.

Conservative form: every term is the difference of fluxes through cell
faces, and the fluxes through the outer boundary are zero, so the discrete
sum of ``W`` is conserved to rounding. Advective face values use a
third-order upwind-biased reconstruction.
"""
import numpy as np


def _upwind_face(wm1, w0, w1, w2, vel):
    # face between w0 and w1
    return np.where(vel >= 0.0, (-wm1 + 5.0 * w0 + 2.0 * w1) / 6.0, (2.0 * w0 + 5.0 * w1 - w2) / 6.0)


def fp_rhs(W, q, p, dq, dp, m, gamma_coeff, omega2, d_pp, d_qp, out=None):
    nq, np_ = W.shape
    Wp = np.zeros((nq + 2, np_ + 2))
    Wp[1:-1, 1:-1] = W

    # q faces (interior only): i+1/2 for i = 0..nq-2
    vq = (p / m)[None, :]
    face_q = _upwind_face(Wp[0:nq - 1, 1:-1], Wp[1:nq, 1:-1], Wp[2:nq + 1, 1:-1], Wp[3:nq + 2, 1:-1], vq)
    flux_q = vq * face_q
    if d_qp != 0.0:
        dWdp = (Wp[1:-1, 2:] - Wp[1:-1, :-2]) / (2.0 * dp)
        flux_q = flux_q - d_qp * 0.5 * (dWdp[:-1] + dWdp[1:])

    # p faces (interior only): j+1/2 for j = 0..np-2
    p_face = 0.5 * (p[:-1] + p[1:])
    vp = -(m * omega2 * q[:, None] + 2.0 * gamma_coeff * p_face[None, :])
    face_p = _upwind_face(Wp[1:-1, 0:np_ - 1], Wp[1:-1, 1:np_], Wp[1:-1, 2:np_ + 1], Wp[1:-1, 3:np_ + 2], vp)
    flux_p = vp * face_p - d_pp * (W[:, 1:] - W[:, :-1]) / dp

    if out is None:
        out = np.empty_like(W)
    out[...] = 0.0
    out[:-1, :] -= flux_q / dq
    out[1:, :] += flux_q / dq
    out[:, :-1] -= flux_p / dp
    out[:, 1:] += flux_p / dp
    return out
