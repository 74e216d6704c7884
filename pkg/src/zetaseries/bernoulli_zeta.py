"""Bernoulli numbers and Riemann zeta values at integer arguments.

Index convention: ``bernoulli_even(n)`` returns ``|B_{2n}|`` in the modern
numbering, which is what older tables write as ``B_n``.  With it,

    zeta(2n) = 2**(2n-1) * pi**(2n) * |B_{2n}| / (2n)!

e.g. n=1 gives pi**2/6 and n=5 gives pi**10/93555.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .summation import alternating_sum_cvz, compensated_sum, cvz_terms_for

BERNOULLI_MAX_INDEX = 120
# Above this even argument the factorial/power form is replaced by a direct sum.
BERNOULLI_FORMULA_MAX_ARG = 60
# Upper bound on ZetaTable size; large enough for the slowly converging
# log_series at x ~ 100 where ~1500 coefficients are needed.
ZETA_TABLE_MAX_K = 4096

# pi to 60 digits; the formula is evaluated in exact rational arithmetic and
# rounded once, so the result is the correctly rounded binary64 value.
_PI_60 = Fraction("3.14159265358979323846264338327950288419716939937510582097494")

_REL_TOL = 1e-16

# Modern B_0, B_1, B_2, ... (odd entries beyond B_1 are zero and stored as such).
_bernoulli_cache: list[Fraction] = [Fraction(1), Fraction(-1, 2)]


def _bernoulli_upto(m: int) -> None:
    """Extend the cache to include B_m via sum_{j<=m} C(m+1, j) B_j = 0."""
    while len(_bernoulli_cache) <= m:
        j_new = len(_bernoulli_cache)
        if j_new % 2 == 1:
            _bernoulli_cache.append(Fraction(0))
            continue
        acc = Fraction(0)
        for j in range(0, j_new, 2):
            acc += math.comb(j_new + 1, j) * _bernoulli_cache[j]
        acc += math.comb(j_new + 1, 1) * _bernoulli_cache[1]
        _bernoulli_cache.append(-acc / (j_new + 1))


def bernoulli(m: int) -> Fraction:
    """Modern Bernoulli number B_m (with B_1 = -1/2)."""
    if m < 0:
        raise DomainError(f"Bernoulli index must be >= 0, got {m}")
    _bernoulli_upto(m)
    return _bernoulli_cache[m]


def bernoulli_even(n: int) -> Fraction:
    """Return ``|B_{2n}|`` as an exact fraction for ``1 <= n <= 120``."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("n must be an int")
    if not 1 <= n <= BERNOULLI_MAX_INDEX:
        raise DomainError(f"bernoulli_even needs 1 <= n <= {BERNOULLI_MAX_INDEX}, got {n}")
    return abs(bernoulli(2 * n))


def zeta_even_coefficient(k: int) -> Fraction:
    """Exact rational r_k with zeta(2k) = r_k * pi**(2k), e.g. r_1 = 1/6."""
    return Fraction(2 ** (2 * k - 1)) * bernoulli_even(k) / math.factorial(2 * k)


def _dirichlet_direct(s: int) -> float:
    """zeta(s) by direct summation, stopping on the integral tail bound."""
    parts = [1.0]
    j = 1
    total = 1.0
    while True:
        j += 1
        parts.append(float(j) ** -s)
        total += parts[-1]
        # sum_{i>j} i**-s <= j**(1-s)/(s-1)
        if j ** (1 - s) / (s - 1) < _REL_TOL * total * 1e-1:
            break
    return compensated_sum(parts[::-1])


@lru_cache(maxsize=None)
def zeta_even(k: int) -> float:
    """zeta(2k) in binary64.

    Uses the Bernoulli formula for 2k <= 60 and direct summation above,
    where zeta(2k) = 1 + 2**(-2k) + ... converges in a handful of terms.
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("k must be an int")
    if k < 1:
        raise DomainError(f"zeta_even needs k >= 1, got {k}")
    if 2 * k <= BERNOULLI_FORMULA_MAX_ARG:
        return float(zeta_even_coefficient(k) * _PI_60 ** (2 * k))
    return _dirichlet_direct(2 * k)


@lru_cache(maxsize=None)
def zeta_int(n: int) -> float:
    """zeta(n) for integer n >= 2.

    Even n delegate to :func:`zeta_even`.  Odd n use direct summation when
    the integral tail bound reaches 1e-16 relative within 1000 terms, and
    otherwise the accelerated eta series ``eta(n) / (1 - 2**(1-n))``.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("n must be an int")
    if n < 2:
        raise DomainError(f"zeta_int needs n >= 2 (the series diverges at n={n})")
    if n % 2 == 0:
        return zeta_even(n // 2)
    if 1000.0 ** (1 - n) / (n - 1) < _REL_TOL * 1e-1:
        return _dirichlet_direct(n)
    eta, _ = alternating_sum_cvz(lambda k: (k + 1.0) ** -n, cvz_terms_for(_REL_TOL * 1e-2))
    return eta / (1.0 - 2.0 ** (1 - n))


@dataclass(frozen=True)
class ZetaTable:
    """Immutable table of zeta(2k), k = 1..max_k.

    ``sources[k-1]`` is ``"bernoulli-formula"`` or ``"direct-sum"``.
    """

    max_k: int
    even_values: tuple[float, ...]
    sources: tuple[str, ...]

    def __len__(self) -> int:
        return self.max_k

    def zeta2k(self, k: int) -> float:
        """zeta(2k) for 1 <= k <= max_k."""
        if not 1 <= k <= self.max_k:
            raise DomainError(f"k={k} outside table range 1..{self.max_k}")
        return self.even_values[k - 1]


@lru_cache(maxsize=8)
def zeta_table(max_k: int) -> ZetaTable:
    if not isinstance(max_k, int) or isinstance(max_k, bool):
        raise TypeError("max_k must be an int")
    if not 1 <= max_k <= ZETA_TABLE_MAX_K:
        raise DomainError(f"zeta_table needs 1 <= max_k <= {ZETA_TABLE_MAX_K}, got {max_k}")
    values = tuple(zeta_even(k) for k in range(1, max_k + 1))
    sources = tuple(
        "bernoulli-formula" if 2 * k <= BERNOULLI_FORMULA_MAX_ARG else "direct-sum"
        for k in range(1, max_k + 1)
    )
    return ZetaTable(max_k, values, sources)
