"""Zeta-coefficient series for log-sinc, trigonometric, Gamma, logarithm and
dilogarithm functions, with brute-force oracles and truncation analysis."""

from .bernoulli_zeta import ZetaTable, bernoulli_even, zeta_even, zeta_int, zeta_table
from .classical_series import OracleResult, SeriesKind, closed_form, direct_sum, oracle_converged
from .errors import DomainError, ToleranceError, UnknownIdError, UnsupportedKindError
from .identities import IdentityResult, check_all, check_identity
from .truncation import TruncationReport, error_curve, first_term_approx, terms_needed
from .zeta_series import (
    SeriesEval,
    cos_rep,
    cot_sum,
    digamma_frac,
    dilog_exp,
    gamma_pair,
    log_gamma_series,
    log_series,
    log_sinc,
    sin_over_k2,
    tan_rep,
)

__version__ = "0.1.0"
