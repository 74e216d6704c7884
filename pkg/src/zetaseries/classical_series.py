"""Classical Fourier-type sums sum_k trig(k*theta)/k**m.

Closed forms exist for six (trig, order) pairs; every other pair is only
reachable through :func:`direct_sum` / :func:`oracle_converged`, which are
the brute-force references the zeta-coefficient series are checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, ToleranceError, UnsupportedKindError

TWO_PI = 2.0 * math.pi
ORACLE_MIN_TOL = 1e-12
_CHUNK = 1 << 20
# Refuse oracle runs that would need more terms than this.
ORACLE_MAX_TERMS = 200_000_000


class Trig(str, Enum):
    SINE = "sin"
    COSINE = "cos"


@dataclass(frozen=True)
class SeriesKind:
    trig: Trig
    order: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "trig", Trig(self.trig))
        if self.order < 1:
            raise UnsupportedKindError(f"order must be >= 1, got {self.order}")

    @classmethod
    def parse(cls, text: str) -> SeriesKind:
        """Parse ``"sin:2"`` / ``"cos:4"``."""
        try:
            trig, order = text.split(":")
            return cls(Trig(trig), int(order))
        except ValueError as exc:
            raise UnsupportedKindError(f"bad series kind {text!r}, expected e.g. 'sin:2'") from exc

    def __str__(self) -> str:
        return f"{self.trig.value}:{self.order}"


@dataclass(frozen=True)
class OracleResult:
    partial_sum: float
    terms: int
    tail_bound: float
    # False for order 1, where the sum is only conditionally convergent.
    reliable: bool = True


def _cos1(t: float) -> float:
    return -math.log(2.0 * math.sin(t / 2.0))


def _cos2(t: float) -> float:
    return math.pi**2 / 6.0 - math.pi * t / 2.0 + t * t / 4.0


def _cos4(t: float) -> float:
    return math.pi**4 / 90.0 - math.pi**2 * t**2 / 12.0 + math.pi * t**3 / 12.0 - t**4 / 48.0


def _sin1(t: float) -> float:
    return (math.pi - t) / 2.0


def _sin3(t: float) -> float:
    return math.pi**2 * t / 6.0 - math.pi * t**2 / 4.0 + t**3 / 12.0


def _sin5(t: float) -> float:
    return math.pi**4 * t / 90.0 - math.pi**2 * t**3 / 36.0 + math.pi * t**4 / 48.0 - t**5 / 240.0


# (trig, order) -> (formula, open interval?)
_CLOSED_FORMS = {
    (Trig.COSINE, 1): (_cos1, True),
    (Trig.COSINE, 2): (_cos2, False),
    (Trig.COSINE, 4): (_cos4, False),
    (Trig.SINE, 1): (_sin1, True),
    (Trig.SINE, 3): (_sin3, False),
    (Trig.SINE, 5): (_sin5, False),
}

SUPPORTED_CLOSED_FORMS = tuple(SeriesKind(t, m) for t, m in _CLOSED_FORMS)


def closed_form(kind: SeriesKind, theta: float) -> float:
    """Elementary closed form of sum_k trig(k*theta)/k**order.

    Order-1 forms are valid on (0, 2*pi), the polynomial ones on [0, 2*pi].
    Arguments are never reduced modulo 2*pi.
    """
    try:
        formula, open_interval = _CLOSED_FORMS[(kind.trig, kind.order)]
    except KeyError:
        raise UnsupportedKindError(f"no closed form for {kind}") from None
    theta = float(theta)
    if open_interval:
        if not 0.0 < theta < TWO_PI:
            raise DomainError(f"{kind} closed form needs 0 < theta < 2*pi, got {theta}")
    elif not 0.0 <= theta <= TWO_PI:
        raise DomainError(f"{kind} closed form needs 0 <= theta <= 2*pi, got {theta}")
    return formula(theta)


def tail_bound(kind: SeriesKind, theta: float, n_terms: int) -> float:
    """Upper bound on |sum_{k>N} trig(k*theta)/k**m|.

    Two bounds are combined: the absolute integral bound 1/((m-1) N**(m-1))
    (m >= 2), and the Abel-summation bound 1/(|sin(theta/2)| (N+1)**m), which
    uses |sum_{k=a..b} trig(k*theta)| <= 1/|sin(theta/2)|.
    """
    m = kind.order
    n = float(n_terms)
    bounds = []
    if m >= 2:
        bounds.append(1.0 / ((m - 1) * n ** (m - 1)))
    half = abs(math.sin(theta / 2.0))
    if half > 0.0:
        bounds.append(1.0 / (half * (n + 1.0) ** m))
    elif kind.trig is Trig.SINE:
        # every term vanishes
        return 0.0
    return min(bounds) if bounds else math.inf


def _chunk_sum(kind: SeriesKind, theta: float, start: int, stop: int) -> list[float]:
    k = np.arange(start, stop, dtype=np.float64)
    trig = np.sin if kind.trig is Trig.SINE else np.cos
    terms = trig(k * theta) / k**kind.order
    return terms.tolist()


def direct_sum(kind: SeriesKind, theta: float, n_terms: int) -> OracleResult:
    """Exactly rounded partial sum of the first ``n_terms`` terms."""
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    theta = float(theta)
    partials = []
    for start in range(1, n_terms + 1, _CHUNK):
        stop = min(start + _CHUNK, n_terms + 1)
        partials.append(math.fsum(_chunk_sum(kind, theta, start, stop)))
    # chunk sums are exact-rounded; a second fsum keeps the total within 1 ulp
    # per chunk of the exact partial sum.
    total = partials[0] if len(partials) == 1 else math.fsum(partials)
    return OracleResult(
        partial_sum=total,
        terms=n_terms,
        tail_bound=tail_bound(kind, theta, n_terms),
        reliable=kind.order >= 2,
    )


def _terms_for_tol(kind: SeriesKind, theta: float, tol: float) -> int:
    m = kind.order
    candidates = [(1.0 / ((m - 1) * tol)) ** (1.0 / (m - 1))]
    half = abs(math.sin(theta / 2.0))
    if half > 0.0:
        candidates.append((1.0 / (half * tol)) ** (1.0 / m))
    n = max(1, math.ceil(min(candidates)))
    while tail_bound(kind, theta, n) >= tol:
        n += 1
    return n


def oracle_converged(kind: SeriesKind, theta: float, tol: float = 1e-10) -> float:
    """Partial sum guaranteed within ``tol`` of the infinite sum (order >= 2)."""
    if kind.order < 2:
        raise UnsupportedKindError("order-1 sums are conditionally convergent; no reliable oracle")
    if not tol >= ORACLE_MIN_TOL:
        raise ToleranceError(f"tol must be >= {ORACLE_MIN_TOL:g} in binary64, got {tol!r}")
    theta = float(theta)
    if kind.trig is Trig.SINE and math.sin(theta / 2.0) == 0.0:
        return 0.0
    # leave a quarter of the budget for rounding in the partial sum
    n = _terms_for_tol(kind, theta, 0.75 * tol)
    if n > ORACLE_MAX_TERMS:
        raise ToleranceError(f"{kind} at theta={theta} needs {n} terms for tol={tol:g}")
    return direct_sum(kind, theta, n).partial_sum
