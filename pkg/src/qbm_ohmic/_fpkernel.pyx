# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled phase-space Fokker-Planck right-hand side.

Same discretisation and face fluxes as ``_fpkernel_py.fp_rhs``.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline double _at(const double[:, ::1] W, Py_ssize_t i, Py_ssize_t j,
                       Py_ssize_t nq, Py_ssize_t np_) noexcept nogil:
    if i < 0 or i >= nq or j < 0 or j >= np_:
        return 0.0
    return W[i, j]


cdef inline double _face(double wm1, double w0, double w1, double w2, double vel) noexcept nogil:
    if vel >= 0.0:
        return (-wm1 + 5.0 * w0 + 2.0 * w1) / 6.0
    return (2.0 * w0 + 5.0 * w1 - w2) / 6.0


def fp_rhs(W, q, p, double dq, double dp, double m, double gamma_coeff,
           double omega2, double d_pp, double d_qp, out=None):
    cdef const double[:, ::1] w = np.ascontiguousarray(W, dtype=np.float64)
    cdef const double[::1] qv = np.ascontiguousarray(q, dtype=np.float64)
    cdef const double[::1] pv = np.ascontiguousarray(p, dtype=np.float64)
    cdef Py_ssize_t nq = w.shape[0], np_ = w.shape[1]
    if out is None:
        out = np.empty((nq, np_), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef Py_ssize_t i, j
    cdef double vel, flux, dwdp0, dwdp1, pf
    cdef double inv_dq = 1.0 / dq, inv_dp = 1.0 / dp

    with nogil:
        for i in range(nq):
            for j in range(np_):
                o[i, j] = 0.0

        # q faces
        for i in range(nq - 1):
            for j in range(np_):
                vel = pv[j] / m
                flux = vel * _face(_at(w, i - 1, j, nq, np_), w[i, j], w[i + 1, j],
                                   _at(w, i + 2, j, nq, np_), vel)
                if d_qp != 0.0:
                    dwdp0 = (_at(w, i, j + 1, nq, np_) - _at(w, i, j - 1, nq, np_)) / (2.0 * dp)
                    dwdp1 = (_at(w, i + 1, j + 1, nq, np_) - _at(w, i + 1, j - 1, nq, np_)) / (2.0 * dp)
                    flux = flux - d_qp * 0.5 * (dwdp0 + dwdp1)
                o[i, j] -= flux * inv_dq
                o[i + 1, j] += flux * inv_dq

        # p faces
        for i in range(nq):
            for j in range(np_ - 1):
                pf = 0.5 * (pv[j] + pv[j + 1])
                vel = -(m * omega2 * qv[i] + 2.0 * gamma_coeff * pf)
                flux = vel * _face(_at(w, i, j - 1, nq, np_), w[i, j], w[i, j + 1],
                                   _at(w, i, j + 2, nq, np_), vel)
                flux = flux - d_pp * (w[i, j + 1] - w[i, j]) * inv_dp
                o[i, j] -= flux * inv_dp
                o[i, j + 1] += flux * inv_dp
    return out
