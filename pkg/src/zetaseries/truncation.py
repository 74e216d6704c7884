"""Truncation studies: how many terms a series needs, error curves, and the
one-term approximants of sin, cos and Li2(exp(-theta)).

All errors here are measured against converged references evaluated in
mpmath at 30 significant digits, never against ``SeriesEval.est_error``,
so the bound bookkeeping in :mod:`zetaseries.zeta_series` is audited from
outside.

Accuracy vocabulary: *d decimals correct* means absolute error below
0.5e-d; *s significant figures* means relative error below 0.5e-(s-1).
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field

import mpmath

from . import zeta_series
from .bernoulli_zeta import zeta_even, zeta_even_coefficient
from .errors import DomainError, ToleranceError, UnknownIdError

MAX_TERMS = 200
MIN_TOL = 1e-15
ORACLE_DPS = 30

_ctx = mpmath.MPContext()
_ctx.dps = ORACLE_DPS


def _oracle_log_sinc(x):
    if x == 0:
        return _ctx.mpf(0)
    px = _ctx.pi * x
    return _ctx.log(_ctx.sin(px) / px)


def _oracle_cot_sum(x):
    if x == 0:
        return _ctx.mpf(0)
    px = _ctx.pi * x
    return (1 - px * _ctx.cot(px)) / 2


def _oracle_gamma_pair(s):
    # Gamma(1-s) Gamma(1+s) = pi s / sin(pi s) by reflection
    if s == 0:
        return _ctx.mpf(1)
    ps = _ctx.pi * s
    return ps / _ctx.sin(ps)


def _oracle_dilog_exp(theta):
    return _ctx.polylog(2, _ctx.exp(-theta))


def _oracle_log_gamma(x):
    if x == 0:
        return _ctx.mpf(0)
    return -_ctx.loggamma(x) - _ctx.log(x) - _ctx.euler * x


ORACLES: dict[str, Callable] = {
    "log_sinc": _oracle_log_sinc,
    "sin_over_k2": lambda t: _ctx.clsin(2, t),
    "cos_rep": lambda x: _ctx.cos(_ctx.pi * x),
    "tan_rep": lambda x: _ctx.tan(_ctx.pi * x),
    "cot_sum": _oracle_cot_sum,
    "gamma_pair": _oracle_gamma_pair,
    "log_series": lambda x: _ctx.log(x),
    "dilog_exp": _oracle_dilog_exp,
    "log_gamma_series": _oracle_log_gamma,
}


def reference_value(series_id: str, point: float):
    """30-digit reference for a series at ``point`` (an mpmath mpf)."""
    try:
        oracle = ORACLES[series_id]
    except KeyError:
        raise UnknownIdError(f"unknown series {series_id!r}; known: {', '.join(ORACLES)}") from None
    return oracle(_ctx.mpf(point))


def measured_error(series_id: str, point: float, terms: int) -> float:
    """|series(point, terms) - reference| with the difference taken at 30 digits."""
    value = zeta_series.SERIES[series_id](point, terms).value
    return float(abs(_ctx.mpf(value) - reference_value(series_id, point)))


@dataclass(frozen=True)
class TruncationReport:
    series_id: str
    point: float
    tolerance: float | None
    # None when MAX_TERMS terms were not enough
    terms_needed: int | None
    achieved_error: float
    per_term_errors: list[tuple[int, float]] = field(default_factory=list)


def _validate(series_id: str, point: float) -> None:
    if series_id not in zeta_series.SERIES or series_id not in ORACLES:
        raise UnknownIdError(f"unknown series {series_id!r}")
    # raises DomainError for points outside the validity region
    zeta_series.SERIES[series_id](point, 1)


def terms_needed(series_id: str, point: float, tol: float) -> TruncationReport:
    """Smallest term count whose measured error is below ``tol`` (cap 200)."""
    if not tol >= MIN_TOL:
        raise ToleranceError(f"tol must be >= {MIN_TOL:g} in binary64, got {tol!r}")
    _validate(series_id, point)
    reference = reference_value(series_id, point)
    series = zeta_series.SERIES[series_id]
    curve = []
    for n in range(1, MAX_TERMS + 1):
        err = float(abs(_ctx.mpf(series(point, n).value) - reference))
        curve.append((n, err))
        if err < tol:
            return TruncationReport(series_id, float(point), tol, n, err, curve)
    return TruncationReport(series_id, float(point), tol, None, curve[-1][1], curve)


def error_curve(series_id: str, point: float, max_terms: int) -> TruncationReport:
    """Measured error for every term count 1..max_terms."""
    if not 1 <= max_terms <= MAX_TERMS:
        raise ValueError(f"max_terms must be in 1..{MAX_TERMS}, got {max_terms}")
    _validate(series_id, point)
    reference = reference_value(series_id, point)
    series = zeta_series.SERIES[series_id]
    curve = [
        (n, float(abs(_ctx.mpf(series(point, n).value) - reference)))
        for n in range(1, max_terms + 1)
    ]
    return TruncationReport(series_id, float(point), None, None, curve[-1][1], curve)


# ---------------------------------------------------------------------------
# one-term approximants


def _dilog_smalltheta(theta: float, inner_terms) -> float:
    if not 0.0 <= theta < zeta_series.TWO_PI:
        raise DomainError(f"dilog_smalltheta needs 0 <= theta < 2*pi, got {theta}")
    if theta == 0.0:
        return math.pi**2 / 6.0
    # cubic term kept at -theta^3/84; the k=1 term of the full series gives +theta^3/72
    return math.pi**2 / 6.0 - theta**2 / 4.0 - theta + theta * math.log(theta) - theta**3 / 84.0


def _cos_first(x: float, inner_terms) -> float:
    if not abs(x) < 1.0:
        raise DomainError(f"cos_first needs |x| < 1, got {x}")
    q = x * x * zeta_even(1)
    return math.exp(-q) * (1.0 - 2.0 * q)


def _sin_first(x: float, inner_terms) -> float:
    if not abs(x) < 1.0:
        raise DomainError(f"sin_first needs |x| < 1, got {x}")
    return math.pi * x * math.exp(-x * x * zeta_even(1))


def _sin_expanded(x: float, inner_terms) -> float:
    # pi x (1 - sum_k x^2k zeta(2k)/k): exp(-y) cut to 1 - y
    return math.pi * x * (1.0 + zeta_series.log_sinc(x, inner_terms).value)


APPROXIMANTS: dict[str, Callable[[float, int | str], float]] = {
    "dilog_smalltheta": _dilog_smalltheta,
    "cos_first": _cos_first,
    "sin_first": _sin_first,
    "sin_expanded": _sin_expanded,
}


def first_term_approx(approximant_id: str, x: float, inner_terms: int | str = 1) -> float:
    """Evaluate a truncated approximant.

    ``inner_terms`` only matters for ``sin_expanded``, where it sets how many
    terms of the inner zeta sum are kept ("auto" for the converged sum).
    """
    try:
        f = APPROXIMANTS[approximant_id]
    except KeyError:
        raise UnknownIdError(
            f"unknown approximant {approximant_id!r}; known: {', '.join(APPROXIMANTS)}"
        ) from None
    return f(float(x), inner_terms)


# approximant -> (exact function, error is relative?)
_APPROX_EXACT = {
    "dilog_smalltheta": (_oracle_dilog_exp, False),
    "cos_first": (lambda x: _ctx.cos(_ctx.pi * x), False),
    "sin_first": (lambda x: _ctx.sin(_ctx.pi * x), True),
    "sin_expanded": (lambda x: _ctx.sin(_ctx.pi * x), True),
}


def approximant_error(approximant_id: str, x: float, inner_terms: int | str = 1) -> float:
    """Measured error of an approximant: absolute for dilog/cos, relative for sin."""
    approx = first_term_approx(approximant_id, x, inner_terms)
    exact_fn, relative = _APPROX_EXACT[approximant_id]
    exact = exact_fn(_ctx.mpf(x))
    diff = abs(_ctx.mpf(approx) - exact)
    return float(diff / abs(exact) if relative else diff)


def leading_error(approximant_id: str, x: float) -> float:
    """Leading-order analytic error, in the same sense as :func:`approximant_error`.

    cos_first: 5 zeta(4) x^4 / 2 = pi^4 x^4 / 36 (absolute)
    sin_first: zeta(4) x^4 / 2 = pi^4 x^4 / 180 (relative)
    sin_expanded, one inner term: pi^4 x^4 / 120 (relative)
    dilog_smalltheta: (1/72 + 1/84) theta^3 (absolute; the -1/84 cubic
    has the wrong sign and denominator, which dominates the error)
    """
    x = abs(float(x))
    if approximant_id == "cos_first":
        return math.pi**4 * x**4 / 36.0
    if approximant_id == "sin_first":
        return math.pi**4 * x**4 / 180.0
    if approximant_id == "sin_expanded":
        return math.pi**4 * x**4 / 120.0
    if approximant_id == "dilog_smalltheta":
        return (1.0 / 72.0 + 1.0 / 84.0) * x**3
    raise UnknownIdError(f"unknown approximant {approximant_id!r}")


def decimals_correct(abs_error: float) -> int:
    """Largest d with abs_error < 0.5 * 10**-d."""
    if abs_error == 0.0:
        return 17
    return max(0, math.floor(-math.log10(2.0 * abs_error) - 1e-12))


def significant_figures(rel_error: float) -> int:
    """Largest s with rel_error < 0.5 * 10**-(s-1)."""
    if rel_error == 0.0:
        return 17
    return max(0, math.floor(-math.log10(2.0 * rel_error) - 1e-12) + 1)


# ---------------------------------------------------------------------------
# optional extended-precision check (not part of the binary64 path)


def extended_precision_error(series_id: str, theta: float, terms: int, dps: int = 40) -> float:
    """Truncation error of the Li2 / sin(k theta)/k^2 series with every
    operation carried out at ``dps`` digits, zeta(2k) from exact Bernoulli
    rationals.  Isolates truncation from binary64 rounding.
    """
    ctx = mpmath.MPContext()
    ctx.dps = dps
    t = ctx.mpf(theta)
    u = (t / (2 * ctx.pi)) ** 2
    alternating = series_id == "dilog_exp"
    inner = ctx.mpf(0)
    for k in range(1, terms + 1):
        c = zeta_even_coefficient(k)
        z = ctx.mpf(c.numerator) / c.denominator * ctx.pi ** (2 * k)
        term = z * u**k / ((2 * k + 1) * k)
        inner += -term if (alternating and k % 2) else term
    if series_id == "dilog_exp":
        value = ctx.pi**2 / 6 - t**2 / 4 - t + t * ctx.log(t) - t * inner
        exact = ctx.polylog(2, ctx.exp(-t))
    elif series_id == "sin_over_k2":
        value = t * (1 - ctx.log(t)) + t * inner
        exact = ctx.clsin(2, t)
    else:
        raise UnknownIdError(f"extended precision supports dilog_exp and sin_over_k2, not {series_id!r}")
    return float(abs(value - exact))


def extended_direct_exp_error(theta: float, terms: int, dps: int = 40) -> float:
    """Error of the plain partial sum sum_{k<=terms} exp(-k theta)/k^2 at ``dps`` digits."""
    ctx = mpmath.MPContext()
    ctx.dps = dps
    t = ctx.mpf(theta)
    partial = ctx.fsum(ctx.exp(-k * t) / k**2 for k in range(1, terms + 1))
    return float(abs(partial - ctx.polylog(2, ctx.exp(-t))))
