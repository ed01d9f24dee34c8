"""High-temperature solution of the exact master equation for a free Ohmic Brownian particle."""
from .cat import (
    CatInit,
    InterferenceMeasure,
    attenuation,
    attenuation_shorttime,
    char_function_cat,
    interference_measure,
    interference_shorttime,
    mixing_time,
    probability_distribution,
    wigner_cat,
)
from .core import (
    P1,
    FluctuationMoments,
    GreenEval,
    Prep,
    SimParams,
    decoherence_time,
    fluctuation_moments,
    green_function,
    thermal_wavelength,
)
from .densmat import negativity_witness, purity, purity_shorttime, rho_element_cat, rho_element_gaussian
from .errors import CoefficientMismatch, ConvergenceError, NumericalFailure, ParameterError
from .gaussian import (
    GaussianInit,
    SecondMoments,
    char_function_gaussian,
    initial_squeezed_state,
    mean_trajectory,
    second_moments,
    wigner_gaussian,
)

__version__ = "0.1.0"
