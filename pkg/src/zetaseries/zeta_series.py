"""Series with zeta(2k) coefficients for log-sinc, trig, Gamma, log and Li2.

Every evaluator returns a :class:`SeriesEval` carrying the truncated value,
the number of terms summed and a bound on the truncation error.  The bound
is the first omitted term, scaled by ``1/(1 - rho)`` when the terms share a
sign and decay at least geometrically with ratio ``rho``; for alternating
series with decreasing magnitudes the first omitted term alone is used.

``terms`` is either a positive int or ``"auto"``; auto picks the smallest
count whose bound is below ``AUTO_TARGET`` and stops at the table size.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from .bernoulli_zeta import ZetaTable, zeta_even, zeta_int, zeta_table
from .errors import DomainError

TWO_PI = 2.0 * math.pi
AUTO_TARGET = 1e-14
DEFAULT_TABLE_SIZE = 2048
# Below this the tan denominator is treated as a pole.
TAN_DENOMINATOR_FLOOR = 1e-300
# Partial-fraction sum length before the Euler-Maclaurin tail takes over.
_DIGAMMA_DIRECT_TERMS = 1000


@dataclass(frozen=True)
class SeriesEval:
    value: float
    terms_used: int
    est_error: float


@lru_cache(maxsize=1)
def default_table() -> ZetaTable:
    return zeta_table(DEFAULT_TABLE_SIZE)


def _check_count(terms: int | str | None) -> int | None:
    """Return the fixed term count, or None for auto."""
    if terms is None or terms == "auto":
        return None
    if isinstance(terms, bool) or not isinstance(terms, int):
        raise TypeError(f"terms must be a positive int or 'auto', got {terms!r}")
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    return terms


def _check_terms(terms: int | str | None, table: ZetaTable) -> int | None:
    """As :func:`_check_count`, and the table must hold every coefficient."""
    terms = _check_count(terms)
    if terms is not None and terms > table.max_k:
        raise DomainError(f"terms={terms} exceeds zeta table size {table.max_k}")
    return terms


def _z2(table: ZetaTable, k: int) -> float:
    # the bound term one past the table end is still needed
    return table.even_values[k - 1] if k <= table.max_k else zeta_even(k)


def _truncate(
    terms_iter: Iterator[float],
    n: int | None,
    cap: int,
    tail_factor: float,
    target: float = AUTO_TARGET,
) -> tuple[float, int, float]:
    """Sum a term stream; returns (sum, terms used, tail bound).

    The tail bound is ``tail_factor * |first omitted term|``.
    """
    parts: list[float] = []
    for t in terms_iter:
        if n is not None:
            if len(parts) == n:
                return math.fsum(parts), n, tail_factor * abs(t)
        elif parts and (tail_factor * abs(t) < target or len(parts) >= cap):
            return math.fsum(parts), len(parts), tail_factor * abs(t)
        parts.append(t)
    raise AssertionError("term stream ended early")  # pragma: no cover


def _even_power_terms(
    x2: float, table: ZetaTable, divide_by_k: bool, sign: float = 1.0
) -> Iterator[float]:
    """sign * zeta(2k) * x2**k [/ k], k = 1, 2, ..."""
    p = 1.0
    k = 0
    while True:
        k += 1
        p *= x2
        t = sign * _z2(table, k) * p
        yield t / k if divide_by_k else t


def _geometric_factor(ratio: float) -> float:
    return 1.0 / (1.0 - ratio) if ratio < 1.0 else math.inf


def _require_abs_below(x: float, limit: float, name: str, why: str) -> float:
    x = float(x)
    if not abs(x) < limit:
        raise DomainError(f"{name} needs |x| < {limit:g} ({why}), got x={x}")
    return x


def log_sinc(x: float, terms: int | str = "auto", table: ZetaTable | None = None) -> SeriesEval:
    """ln(sin(pi x)/(pi x)) = -sum_k zeta(2k) x**(2k) / k, |x| < 1."""
    table = table or default_table()
    n = _check_terms(terms, table)
    x = _require_abs_below(x, 1.0, "log_sinc", "the series diverges at the zeros of sin(pi x)")
    x2 = x * x
    value, used, err = _truncate(
        _even_power_terms(x2, table, divide_by_k=True, sign=-1.0),
        n,
        table.max_k,
        _geometric_factor(x2),
    )
    return SeriesEval(value, used, err)


def cot_sum(x: float, terms: int | str = "auto", table: ZetaTable | None = None) -> SeriesEval:
    """sum_k zeta(2k) x**(2k), which equals (1 - pi x cot(pi x))/2 for |x| < 1."""
    table = table or default_table()
    n = _check_terms(terms, table)
    x = _require_abs_below(x, 1.0, "cot_sum", "geometric ratio x**2 must be < 1")
    x2 = x * x
    value, used, err = _truncate(
        _even_power_terms(x2, table, divide_by_k=False),
        n,
        table.max_k,
        _geometric_factor(x2),
    )
    return SeriesEval(value, used, err)


def _log_sinc_and_cot(x: float, n: int | None, table: ZetaTable):
    """Both inner sums at a shared term count (chosen by the cot sum, the slower one)."""
    x2 = x * x
    factor = _geometric_factor(x2)
    b, used, b_err = _truncate(_even_power_terms(x2, table, False), n, table.max_k, factor)
    a, _, a_err = _truncate(_even_power_terms(x2, table, True), used, table.max_k, factor)
    return a, a_err, b, b_err, used


def cos_rep(x: float, terms: int | str = "auto", table: ZetaTable | None = None) -> SeriesEval:
    """cos(pi x) = exp(-sum zeta(2k) x^2k / k) * (1 - 2 sum zeta(2k) x^2k), |x| < 1."""
    table = table or default_table()
    n = _check_terms(terms, table)
    x = _require_abs_below(x, 1.0, "cos_rep", "the series diverges at the zeros of sin(pi x)")
    a, a_err, b, b_err, used = _log_sinc_and_cot(x, n, table)
    damp = math.exp(-a)
    bracket = 1.0 - 2.0 * b
    # truncated a, b underestimate the true sums (all terms positive)
    err = damp * (-math.expm1(-a_err)) * abs(bracket) + damp * 2.0 * b_err
    return SeriesEval(damp * bracket, used, err)


def tan_rep(x: float, terms: int | str = "auto", table: ZetaTable | None = None) -> SeriesEval:
    """tan(pi x) = pi x / (1 - 2 sum zeta(2k) x^2k), |x| < 1/2.

    The denominator equals pi x cot(pi x) and vanishes at |x| = 1/2, so the
    representation cannot be continued past the pole.
    """
    table = table or default_table()
    n = _check_terms(terms, table)
    x = _require_abs_below(x, 0.5, "tan_rep", "pole of tan(pi x) at |x| = 1/2")
    x2 = x * x
    b, used, b_err = _truncate(
        _even_power_terms(x2, table, False), n, table.max_k, _geometric_factor(x2)
    )
    denom = 1.0 - 2.0 * b
    if abs(denom) < TAN_DENOMINATOR_FLOOR:
        raise OverflowError(f"tan_rep denominator {denom!r} underflows at x={x}")
    num = math.pi * x
    slack = abs(denom) - 2.0 * b_err
    err = abs(num) * 2.0 * b_err / (abs(denom) * slack) if slack > 0 else math.inf
    return SeriesEval(num / denom, used, err)


def gamma_pair(s: float, terms: int | str = "auto", table: ZetaTable | None = None) -> SeriesEval:
    """Gamma(1-s) Gamma(1+s) = exp(sum_k zeta(2k) s**(2k) / k), |s| < 1."""
    table = table or default_table()
    n = _check_terms(terms, table)
    s = _require_abs_below(s, 1.0, "gamma_pair", "pole of Gamma(1-s) at s = 1")
    s2 = s * s
    a, used, a_err = _truncate(
        _even_power_terms(s2, table, True), n, table.max_k, _geometric_factor(s2)
    )
    value = math.exp(a)
    return SeriesEval(value, used, value * math.expm1(a_err))


def _log_series_terms(a: float, b: float, table: ZetaTable) -> Iterator[float]:
    pa = pb = 1.0
    k = 0
    while True:
        k += 1
        pa *= a
        pb *= b
        yield _z2(table, k) * (pa - pb) / k


def log_series(x: float, terms: int | str = "auto", table: ZetaTable | None = None) -> SeriesEval:
    """ln x = sum_k zeta(2k) (x**(2k) - 1) / (k (x+1)**(2k)), x > 0.

    Written as sum zeta(2k) (a**k - b**k)/k with a = (x/(x+1))**2 and
    b = 1/(x+1)**2; consecutive term ratios never exceed a + b < 1.
    The sum is antisymmetric under x -> 1/x term by term.
    """
    table = table or default_table()
    n = _check_terms(terms, table)
    x = float(x)
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError(f"log_series needs real x > 0, got x={x}")
    inv = 1.0 / (x + 1.0)
    a = (x * inv) ** 2
    b = inv * inv
    value, used, err = _truncate(
        _log_series_terms(a, b, table), n, table.max_k, _geometric_factor(a + b)
    )
    return SeriesEval(value, used, err)


def _sin_k2_inner_terms(u: float, table: ZetaTable, alternating: bool) -> Iterator[float]:
    """zeta(2k) u**k / ((2k+1) k), optionally times (-1)**k."""
    p = 1.0
    k = 0
    while True:
        k += 1
        p *= -u if alternating else u
        yield _z2(table, k) * p / ((2 * k + 1) * k)


def sin_over_k2(theta: float, terms: int | str = "auto", table: ZetaTable | None = None) -> SeriesEval:
    """sum_k sin(k theta)/k**2 = theta (1 - ln theta) + theta sum_k zeta(2k) (theta/2pi)**(2k) / ((2k+1) k).

    Valid for 0 <= theta < 2 pi; theta = 0 gives exactly 0.
    """
    table = table or default_table()
    n = _check_terms(terms, table)
    theta = float(theta)
    if not 0.0 <= theta < TWO_PI:
        raise DomainError(f"sin_over_k2 needs 0 <= theta < 2*pi, got theta={theta}")
    if theta == 0.0:
        return SeriesEval(0.0, n or 1, 0.0)
    u = (theta / TWO_PI) ** 2
    inner, used, err = _truncate(
        _sin_k2_inner_terms(u, table, alternating=False),
        n,
        table.max_k,
        _geometric_factor(u),
        target=AUTO_TARGET / theta,
    )
    value = theta * (1.0 - math.log(theta)) + theta * inner
    return SeriesEval(value, used, theta * err)


def dilog_exp(theta: float, terms: int | str = "auto", table: ZetaTable | None = None) -> SeriesEval:
    """Li2(exp(-theta)) = sum_k exp(-k theta)/k**2 for 0 < theta < 2 pi.

    pi^2/6 - theta^2/4 - theta + theta ln theta
        - theta sum_k (-1)**k zeta(2k) (theta/2pi)**(2k) / ((2k+1) k)

    theta = 0 returns the limit pi^2/6 exactly.
    """
    table = table or default_table()
    n = _check_terms(terms, table)
    theta = float(theta)
    if theta == 0.0:
        return SeriesEval(math.pi**2 / 6.0, n or 1, 0.0)
    if not 0.0 < theta < TWO_PI:
        raise DomainError(f"dilog_exp needs 0 < theta < 2*pi, got theta={theta}")
    u = (theta / TWO_PI) ** 2
    # alternating with decreasing magnitudes: first omitted term bounds the tail
    inner, used, err = _truncate(
        _sin_k2_inner_terms(u, table, alternating=True),
        n,
        table.max_k,
        1.0,
        target=AUTO_TARGET / theta,
    )
    head = math.fsum([math.pi**2 / 6.0, -theta * theta / 4.0, -theta, theta * math.log(theta)])
    return SeriesEval(head - theta * inner, used, theta * err)


def _log_gamma_terms(x: float) -> Iterator[float]:
    """(-1)**k x**(k+1) zeta(k+1) / (k+1), k = 1, 2, ..."""
    p = x
    k = 0
    while True:
        k += 1
        p *= -x
        yield p * zeta_int(k + 1) / (k + 1)


def log_gamma_series(x: float, terms: int | str = "auto", table: ZetaTable | None = None) -> SeriesEval:
    """S(x) = sum_k (-1)**k x**(k+1) zeta(k+1)/(k+1) = -ln Gamma(x) - ln x - gamma x.

    Valid for -1 < x <= 1.  At the endpoint x = 1 the series only converges
    like 1/k, so the value returned there is the mean of the last two
    partial sums, whose error is O(1/k**2).
    """
    table = table or default_table()
    n = _check_count(terms)
    x = float(x)
    if not -1.0 < x <= 1.0:
        raise DomainError(f"log_gamma_series needs -1 < x <= 1, got x={x}")
    if x == 0.0:
        return SeriesEval(0.0, n or 1, 0.0)
    if x == 1.0:
        return _log_gamma_endpoint(n, table.max_k)
    # x > 0: alternating and decreasing; x < 0: one sign, ratio |x|
    factor = 1.0 if x > 0 else _geometric_factor(-x)
    value, used, err = _truncate(_log_gamma_terms(x), n, table.max_k, factor)
    return SeriesEval(value, used, err)


def _log_gamma_endpoint(n: int | None, cap: int) -> SeriesEval:
    it = _log_gamma_terms(1.0)
    terms = [next(it), next(it), next(it)]
    used = 1
    while True:
        # mean of S_used and S_used+1: add half the first omitted term
        err = abs(abs(terms[used]) - abs(terms[used + 1])) / 2.0
        if used == n or (n is None and (err < AUTO_TARGET or used >= cap)):
            break
        used += 1
        terms.append(next(it))
    value = math.fsum(terms[:used]) + terms[used] / 2.0
    return SeriesEval(value, used, err)


def _digamma_tail(x: float, n: int) -> float:
    """Euler-Maclaurin estimate of sum_{k>n} (1/k - 1/(k+x))."""
    f = lambda t: 1.0 / t - 1.0 / (t + x)  # noqa: E731
    # f^(m)(t) = (-1)^m m! (t^-(m+1) - (t+x)^-(m+1))
    d1 = -(n**-2.0 - (n + x) ** -2.0)
    d3 = -6.0 * (n**-4.0 - (n + x) ** -4.0)
    d5 = -120.0 * (n**-6.0 - (n + x) ** -6.0)
    from_n = math.log1p(x / n) + f(n) / 2.0 - (d1 / 12.0 - d3 / 720.0 + d5 / 30240.0)
    return from_n - f(n)


def digamma_frac(x: float, terms: int | str = "auto", table: ZetaTable | None = None) -> tuple[float, float]:
    """Both sides of sum_k x/(k(k+x)) = sum_k (-1)**(k+1) x**k zeta(k+1).

    The left side (which equals psi(1+x) + gamma) is summed directly for
    1000 terms plus an Euler-Maclaurin tail; the right side is the zeta
    expansion and needs |x| < 1.
    """
    table = table or default_table()
    n = _check_count(terms)
    x = _require_abs_below(x, 1.0, "digamma_frac", "zeta expansion radius is 1")
    if x == 0.0:
        return 0.0, 0.0
    direct = math.fsum(x / (k * (k + x)) for k in range(1, _DIGAMMA_DIRECT_TERMS + 1))
    lhs = direct + _digamma_tail(x, _DIGAMMA_DIRECT_TERMS)

    def rhs_terms() -> Iterator[float]:
        p = -1.0
        k = 0
        while True:
            k += 1
            p *= -x
            yield p * zeta_int(k + 1)

    factor = 1.0 if x > 0 else _geometric_factor(-x)
    rhs, _, _ = _truncate(rhs_terms(), n, table.max_k, factor)
    return lhs, rhs


SERIES = {
    "log_sinc": log_sinc,
    "sin_over_k2": sin_over_k2,
    "cos_rep": cos_rep,
    "tan_rep": tan_rep,
    "cot_sum": cot_sum,
    "gamma_pair": gamma_pair,
    "log_series": log_series,
    "dilog_exp": dilog_exp,
    "log_gamma_series": log_gamma_series,
}

# Which argument name each series takes on the command line.
ARGUMENT_NAME = {
    "sin_over_k2": "theta",
    "dilog_exp": "theta",
    "gamma_pair": "s",
}
