"""Exact relative dimensions in the Gelfand-Tsetlin graph and their boundary limits."""

from .boundary import (
    SweepRow,
    approx_deviation,
    approx_sweep,
    contour_reldim,
    lambda_inf,
    logconcave_check,
    phi_eval,
    phi_fn_of_nu,
    phi_n_exact,
    phi_n_numeric,
    phi_sig,
    r_kernel,
    shift_S,
)
from .exact import LaurentWindow, RationalFn, rational_det
from .gt import count_paths, dim_weyl, omega_of
from .omega import OmegaPoint
from .reldim import BasisInterval, basis_coeffs, genfun_check, hstar_poles, markov_NK, reconstruct, reldim
from .schur import apply_shift_diff, cauchy_sum, dual_schur, hstar, sf_eval, shifted_schur, skew_count

__version__ = "0.1.0"
