from .library import CandidateLibrary
from .derivatives import (
    DerivativeEstimate, derivative_finite_difference, derivative_spectral, derivative_network,
    network_reconstruction, window_owners
)
from .stlsq import SindyModel, fit, stlsq, ridge_solve, simulate_model, coefficient_error
from .report import format_equation, equations, write_report, write_coefficients_csv
