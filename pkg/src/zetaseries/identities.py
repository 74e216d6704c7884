"""Catalogue of closed-form zeta-sum identities and their numerical check.

Left-hand sides are summed here with plain loops over table values and
``math.fsum``; nothing is shared with :mod:`zetaseries.zeta_series`, so a
bug in a series kernel cannot confirm itself.

Two entries (``ln2pi`` and ``euler_gamma``) have terms decaying only like
1/k**2 or 1/k.  They are summed after a Kummer transformation: the limit
series with zeta replaced by 1 has an elementary sum, and what remains
decays like 2**-k.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .bernoulli_zeta import zeta_int, zeta_table
from .errors import ToleranceError, UnknownIdError
from .summation import alternating_sum_cvz, cvz_terms_for

MIN_TOL = 1e-13
TERM_CAP = 500
EULER_GAMMA = 0.57721566490153286


@lru_cache(maxsize=1)
def catalan_constant() -> float:
    """G = sum_{k>=0} (-1)**k / (2k+1)**2, by CVZ acceleration."""
    value, _ = alternating_sum_cvz(lambda k: 1.0 / (2.0 * k + 1.0) ** 2, cvz_terms_for(1e-18))
    return value


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    ERRATA = "errata"


@dataclass(frozen=True)
class Identity:
    """sum_{k>=1} sign(k) * zeta(arg(k)) * coeff(k) = rhs.

    ``limit_sum`` (when set) is sum_k sign(k) * coeff(k), used for the
    Kummer transformation.  ``ratio`` bounds consecutive term magnitudes of
    the summed (possibly transformed) series.
    """

    id: str
    statement: str
    coeff: Callable[[int], float]
    stated_rhs: float
    ratio: float
    zeta_arg: Callable[[int], int] = lambda k: 2 * k
    alternating: bool = False
    limit_sum: float | None = None
    corrected_rhs: float | None = None
    note: str = ""


def _catalogue() -> tuple[Identity, ...]:
    pi = math.pi
    return (
        Identity(
            "ln2pi",
            "sum zeta(2k)/((2k+1)k) = ln(2pi) - 1",
            lambda k: 1.0 / ((2 * k + 1) * k),
            math.log(2 * pi) - 1.0,
            ratio=0.25,
            limit_sum=2.0 - 2.0 * math.log(2.0),
            note="real limit theta -> 2*pi of the sin(k theta)/k^2 expansion",
        ),
        Identity(
            "catalan",
            "sum zeta(2k)/((2k+1)k 2^(4k)) = ln(pi/2) - 1 + pi/6",
            lambda k: 1.0 / ((2 * k + 1) * k * 16.0**k),
            math.log(pi / 2) - 1.0 + pi / 6,
            ratio=1.0 / 16,
            corrected_rhs=2.0 * catalan_constant() / pi - 1.0 + math.log(pi / 2),
        ),
        Identity(
            "lnpi2",
            "sum zeta(2k)/(k 2^(2k)) = ln(pi/2)",
            lambda k: 1.0 / (k * 4.0**k),
            math.log(pi / 2),
            ratio=0.25,
        ),
        Identity(
            "quarter",
            "sum zeta(2k)/(k 4^(2k)) = ln(pi sqrt2/4)",
            lambda k: 1.0 / (k * 16.0**k),
            math.log(pi * math.sqrt(2) / 4),
            ratio=1.0 / 16,
        ),
        Identity(
            "threequarter",
            "sum zeta(2k) (3/4)^(2k)/k = ln(3 pi sqrt2/4)",
            lambda k: 0.5625**k / k,
            math.log(3 * pi * math.sqrt(2) / 4),
            ratio=0.5625,
        ),
        Identity(
            "half",
            "sum zeta(2k)/2^(2k) = 1/2",
            lambda k: 0.25**k,
            0.5,
            ratio=0.25,
        ),
        Identity(
            "inv_e",
            "sum zeta(2k) e^(-2k)/k = ln(pi/e) - ln(sin(pi/e))",
            lambda k: math.exp(-2.0 * k) / k,
            math.log(pi / math.e) - math.log(math.sin(pi / math.e)),
            ratio=math.exp(-2.0),
        ),
        Identity(
            "ln2",
            "sum zeta(2k)(2^(2k)-1)/(k 3^(2k)) = ln 2",
            lambda k: ((4.0 / 9.0) ** k - (1.0 / 9.0) ** k) / k,
            math.log(2.0),
            ratio=5.0 / 9.0,
        ),
        Identity(
            "euler_gamma",
            "sum (-1)^(k+1) zeta(k+1)/(k+1) = gamma",
            lambda k: 1.0 / (k + 1),
            EULER_GAMMA,
            ratio=0.5,
            zeta_arg=lambda k: k + 1,
            alternating=True,
            limit_sum=1.0 - math.log(2.0),
        ),
        Identity(
            "lnpi",
            "sum zeta(2k)/((2k+1)k 2^(2k)) = ln(pi) - 1",
            lambda k: 1.0 / ((2 * k + 1) * k * 4.0**k),
            math.log(pi) - 1.0,
            ratio=0.25,
            note="companion identity: the theta = pi case of the sin(k theta)/k^2 series",
        ),
    )


CATALOGUE: tuple[Identity, ...] = _catalogue()
_BY_ID = {ident.id: ident for ident in CATALOGUE}


@dataclass(frozen=True)
class IdentityResult:
    id: str
    lhs_value: float
    rhs_value: float
    abs_residual: float
    status: Status
    note: str
    stated_rhs_value: float
    terms_used: int


def _zeta(arg: int) -> float:
    table = zeta_table(TERM_CAP + 1)
    return table.even_values[arg // 2 - 1] if arg % 2 == 0 and arg // 2 <= table.max_k else zeta_int(arg)


def _term(ident: Identity, k: int) -> float:
    z = _zeta(ident.zeta_arg(k))
    if ident.limit_sum is not None:
        z -= 1.0
    t = z * ident.coeff(k)
    if ident.alternating and k % 2 == 0:
        t = -t
    return t


def sum_lhs(ident: Identity, tol: float) -> tuple[float, int, float]:
    """Sum until the tail bound is below tol/10 or TERM_CAP terms.

    Returns (lhs, terms used, tail bound).
    """
    tail_factor = 1.0 if ident.alternating else 1.0 / (1.0 - ident.ratio)
    parts: list[float] = []
    nxt = _term(ident, 1)
    while True:
        parts.append(nxt)
        nxt = _term(ident, len(parts) + 1)
        bound = tail_factor * abs(nxt)
        if bound < tol / 10 or len(parts) >= TERM_CAP:
            break
    if ident.limit_sum is not None:
        parts.append(ident.limit_sum)
    return math.fsum(parts), len(parts) - (ident.limit_sum is not None), bound


def check_identity(id: str, tol: float = 1e-10) -> IdentityResult:
    if not tol >= MIN_TOL:
        raise ToleranceError(f"tol must be >= {MIN_TOL:g}, got {tol!r}")
    try:
        ident = _BY_ID[id]
    except KeyError:
        raise UnknownIdError(f"unknown identity {id!r}; known: {', '.join(_BY_ID)}") from None
    return _check(ident, tol)


def _check(ident: Identity, tol: float) -> IdentityResult:
    lhs, used, bound = sum_lhs(ident, tol)
    notes = [ident.note] if ident.note else []
    if bound >= tol / 10:
        notes.append(f"tolerance unreachable at {TERM_CAP}-term cap (tail bound {bound:.3g})")
    stated_residual = abs(lhs - ident.stated_rhs)
    rhs, residual = ident.stated_rhs, stated_residual
    if stated_residual < tol:
        status = Status.PASS
    elif ident.corrected_rhs is not None and abs(lhs - ident.corrected_rhs) < tol:
        status = Status.ERRATA
        rhs, residual = ident.corrected_rhs, abs(lhs - ident.corrected_rhs)
        notes.append(
            f"stated rhs {ident.stated_rhs:.10g} misses lhs by {stated_residual:.3g}; "
            "corrected rhs 2G/pi - 1 + ln(pi/2) from the theta = pi/2 case"
        )
    else:
        status = Status.FAIL
    return IdentityResult(
        id=ident.id,
        lhs_value=lhs,
        rhs_value=rhs,
        abs_residual=residual,
        status=status,
        note="; ".join(notes),
        stated_rhs_value=ident.stated_rhs,
        terms_used=used,
    )


def check_all(tol: float = 1e-10, catalogue: Sequence[Identity] | None = None) -> list[IdentityResult]:
    """Check every catalogue entry in declaration order."""
    if not tol >= MIN_TOL:
        raise ToleranceError(f"tol must be >= {MIN_TOL:g}, got {tol!r}")
    entries = CATALOGUE if catalogue is None else catalogue
    return [_check(ident, tol) for ident in entries]


def euler_gamma_estimate(tol: float = 1e-13) -> float:
    """gamma as produced by its own series (reported, never used as reference)."""
    return sum_lhs(_BY_ID["euler_gamma"], tol)[0]
