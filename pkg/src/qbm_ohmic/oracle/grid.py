from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np
from scipy.integrate import trapezoid

from ..errors import ParameterError


@dataclass(frozen=True)
class PhaseSpaceGrid:
    """Uniform (q, p) grid; ``values[i, j]`` is the field at ``(q[i], p[j])``."""

    q_min: float
    q_max: float
    p_min: float
    p_max: float
    nq: int
    np: int
    values: np.ndarray | None = field(default=None, compare=False, repr=False)
    imag_residue: float = 0.0
    error_estimate: float = 0.0

    def __post_init__(self):
        if self.nq < 16 or self.np < 16:
            raise ParameterError("grids need at least 16 points per axis")
        if not (self.q_min < self.q_max and self.p_min < self.p_max):
            raise ParameterError("grid extents must be strictly ordered")
        if self.values is not None and np.shape(self.values) != (self.nq, self.np):
            raise ParameterError(f"values shape {np.shape(self.values)} != ({self.nq}, {self.np})")

    @classmethod
    def centred(cls, q_half: float, p_half: float, nq: int, np_: int, q_mid: float = 0.0, p_mid: float = 0.0):
        return cls(q_mid - q_half, q_mid + q_half, p_mid - p_half, p_mid + p_half, nq, np_)

    @property
    def q(self) -> np.ndarray:
        return np.linspace(self.q_min, self.q_max, self.nq)

    @property
    def p(self) -> np.ndarray:
        return np.linspace(self.p_min, self.p_max, self.np)

    @property
    def dq(self) -> float:
        return (self.q_max - self.q_min) / (self.nq - 1)

    @property
    def dp(self) -> float:
        return (self.p_max - self.p_min) / (self.np - 1)

    def mesh(self):
        return np.meshgrid(self.q, self.p, indexing="ij")

    def sample(self, func) -> "PhaseSpaceGrid":
        """Fill the grid with ``func(q, p)`` evaluated on the mesh."""
        Q, P = self.mesh()
        return self.with_values(np.asarray(func(Q, P), dtype=float))

    def with_values(self, values, **kw) -> "PhaseSpaceGrid":
        return replace(self, values=np.asarray(values), **kw)

    def integrate(self, field_=None) -> float:
        f = self.values if field_ is None else field_
        if f is None:
            raise ParameterError("grid has no values")
        return float(trapezoid(trapezoid(f, dx=self.dp, axis=1), dx=self.dq))

    def mass(self) -> float:
        return self.integrate()

    def moments(self):
        """Means and covariance ``(mean_q, mean_p, var_q, cov_qp, var_p)`` of the normalised field."""
        Q, P = self.mesh()
        w = self.values
        norm = self.integrate()
        mq = self.integrate(Q * w) / norm
        mp = self.integrate(P * w) / norm
        vq = self.integrate((Q - mq) ** 2 * w) / norm
        vp = self.integrate((P - mp) ** 2 * w) / norm
        cqp = self.integrate((Q - mq) * (P - mp) * w) / norm
        return mq, mp, vq, cqp, vp
