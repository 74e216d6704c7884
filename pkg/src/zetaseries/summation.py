"""Summation kernels used by the oracles and the identity checks.

Plain accumulation is never used for reference values: partial sums go
through :func:`math.fsum` (exactly rounded), and alternating series with
slowly decaying terms go through the Cohen-Villegas-Zagier accelerator.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable

import numpy as np

_CVZ_BASE = 3.0 + math.sqrt(8.0)


def compensated_sum(values: Iterable[float] | np.ndarray) -> float:
    """Exactly rounded sum of ``values``."""
    if isinstance(values, np.ndarray):
        values = values.tolist()
    return math.fsum(values)


def cvz_terms_for(rel_tol: float) -> int:
    """Smallest CVZ order whose a-priori bound ``2/(3+sqrt 8)**n`` is below ``rel_tol``."""
    return max(1, math.ceil(math.log(2.0 / rel_tol) / math.log(_CVZ_BASE)))


def alternating_sum_cvz(term: Callable[[int], float], n: int) -> tuple[float, float]:
    """Accelerated value of ``sum_{k>=0} (-1)**k * term(k)``.

    Valid when ``term(k)`` is the k-th moment of a positive measure on
    [0, 1] (true for ``1/(k+1)**s``, ``zeta(k+2)/(k+2)``, ``1/(2k+1)**2``).
    Returns ``(value, bound)`` with ``bound = 2|value|/(3+sqrt 8)**n``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    d = _CVZ_BASE**n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    parts = []
    for k in range(n):
        c = b - c
        parts.append(c * term(k))
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    value = math.fsum(parts) / d
    return value, 2.0 * abs(value) / _CVZ_BASE**n
