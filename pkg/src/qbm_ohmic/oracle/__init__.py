"""Independent numerical checks on the closed-form solution."""
from .coefficients import ExtractedCoefficients, covariance_rate, drift_matrix, extract_coefficients
from .fokker_planck import FPTrajectory, cfl_number, fokker_planck_integrate, gaussian_grid, stable_dt
from .grid import PhaseSpaceGrid
from .quadrature import char_box, char_to_wigner, purity_quadrature, rho_quadrature

__all__ = [
    "ExtractedCoefficients",
    "FPTrajectory",
    "PhaseSpaceGrid",
    "cfl_number",
    "char_box",
    "char_to_wigner",
    "covariance_rate",
    "drift_matrix",
    "extract_coefficients",
    "fokker_planck_integrate",
    "gaussian_grid",
    "purity_quadrature",
    "rho_quadrature",
    "stable_dt",
]
