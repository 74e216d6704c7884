import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaseries.classical_series import (
    SUPPORTED_CLOSED_FORMS,
    SeriesKind,
    Trig,
    closed_form,
    direct_sum,
    oracle_converged,
    tail_bound,
)
from zetaseries.errors import DomainError, ToleranceError, UnsupportedKindError

TWO_PI = 2 * math.pi
SIN2 = SeriesKind(Trig.SINE, 2)
CATALAN = 0.915965594177219015054603514932


def test_closed_form_examples():
    assert closed_form(SeriesKind("cos", 2), 0.0) == pytest.approx(math.pi**2 / 6, abs=1e-15)
    assert closed_form(SeriesKind("sin", 1), math.pi) == 0.0
    assert closed_form(SeriesKind("sin", 3), math.pi / 2) == pytest.approx(math.pi**3 / 32, abs=1e-15)
    assert closed_form(SeriesKind("sin", 3), math.pi / 2) == pytest.approx(0.9689461463, abs=1e-10)


@pytest.mark.parametrize("kind", ["cos:1", "sin:1"])
@pytest.mark.parametrize("theta", [0.0, TWO_PI, -0.1, 7.0])
def test_order_one_rejects_endpoints(kind, theta):
    with pytest.raises(DomainError):
        closed_form(SeriesKind.parse(kind), theta)


@pytest.mark.parametrize("kind", ["cos:2", "cos:4", "sin:3", "sin:5"])
def test_polynomial_forms_accept_endpoints(kind):
    k = SeriesKind.parse(kind)
    closed_form(k, 0.0)
    closed_form(k, TWO_PI)
    with pytest.raises(DomainError):
        closed_form(k, TWO_PI + 1e-9)


def test_unsupported_pairs():
    with pytest.raises(UnsupportedKindError):
        closed_form(SIN2, 1.0)
    with pytest.raises(UnsupportedKindError):
        SeriesKind("cos", 0)
    with pytest.raises(UnsupportedKindError):
        SeriesKind.parse("tan:2")


def test_direct_sum_examples():
    r = direct_sum(SIN2, math.pi / 2, 10**6)
    assert r.terms == 10**6 and r.reliable
    assert r.tail_bound <= 1e-6
    assert abs(r.partial_sum - CATALAN) <= r.tail_bound + 1e-15
    assert direct_sum(SIN2, 0.0, 100).partial_sum == 0.0
    r = direct_sum(SeriesKind("cos", 2), math.pi, 10**5)
    assert abs(r.partial_sum - (-math.pi**2 / 12)) <= r.tail_bound + 1e-15
    assert r.partial_sum == pytest.approx(-0.8224670, abs=1e-5)


def test_order_one_tail_marked_unreliable():
    assert not direct_sum(SeriesKind("sin", 1), 1.0, 1000).reliable


def test_tail_bound_order_formula():
    # integral bound 1/((m-1) N^(m-1)) is never exceeded
    for m in (2, 3, 5):
        for n in (10, 1000):
            assert tail_bound(SeriesKind("cos", m), 1.3, n) <= 1 / ((m - 1) * n ** (m - 1))


@pytest.mark.parametrize("theta", [0.3, 1.0, math.pi / 2, 3.0, 5.5])
def test_tail_bound_is_honest(theta):
    # compare N-term partial sums with a much longer partial sum
    for kind in (SIN2, SeriesKind("cos", 2), SeriesKind("sin", 3)):
        long = direct_sum(kind, theta, 2 * 10**6)
        for n in (10, 100, 1000):
            short = direct_sum(kind, theta, n)
            assert abs(short.partial_sum - long.partial_sum) <= short.tail_bound + long.tail_bound + 1e-14


def test_oracle_converged_examples():
    # pinned on first run; Cl_2(1) = 1.01395913236076850429...
    assert oracle_converged(SIN2, 1.0, 1e-10) == pytest.approx(1.0139591323607685, abs=1e-10)
    assert oracle_converged(SeriesKind("cos", 4), 0.0, 1e-10) == pytest.approx(math.pi**4 / 90, abs=1e-10)
    assert oracle_converged(SIN2, math.pi, 1e-10) == pytest.approx(0.0, abs=1e-10)


def test_oracle_converged_errors():
    with pytest.raises(UnsupportedKindError):
        oracle_converged(SeriesKind("sin", 1), 1.0, 1e-6)
    with pytest.raises(ToleranceError):
        oracle_converged(SIN2, 1.0, 1e-13)


def _interior_grid(kind: SeriesKind, n: int = 64):
    # strictly inside (0, 2pi) for every form
    return [TWO_PI * (i + 0.5) / n for i in range(n)]


@pytest.mark.parametrize("kind", [k for k in SUPPORTED_CLOSED_FORMS if k.order >= 2], ids=str)
def test_closed_forms_match_oracle(kind):
    for theta in _interior_grid(kind):
        assert abs(closed_form(kind, theta) - oracle_converged(kind, theta, 1e-9)) < 2e-9


@pytest.mark.parametrize("kind", [k for k in SUPPORTED_CLOSED_FORMS if k.order == 1], ids=str)
def test_order_one_closed_forms_match_direct_sum(kind):
    # no oracle_converged for order 1; the Abel bound 1/(|sin(theta/2)| (N+1)) still holds
    for theta in _interior_grid(kind):
        r = direct_sum(kind, theta, 10**5)
        assert abs(closed_form(kind, theta) - r.partial_sum) < r.tail_bound + 1e-12


@settings(max_examples=30, deadline=None)
@given(theta=st.floats(min_value=-20, max_value=20), order=st.integers(min_value=1, max_value=6))
def test_sine_parity_is_exact(theta, order):
    k = SeriesKind(Trig.SINE, order)
    assert direct_sum(k, -theta, 500).partial_sum == -direct_sum(k, theta, 500).partial_sum


@settings(max_examples=20, deadline=None)
@given(
    theta=st.floats(min_value=0.0, max_value=TWO_PI),
    trig=st.sampled_from(list(Trig)),
    order=st.integers(min_value=2, max_value=5),
)
def test_oracle_periodicity(theta, trig, order):
    k = SeriesKind(trig, order)
    a = direct_sum(k, theta, 10**5).partial_sum
    b = direct_sum(k, theta + TWO_PI, 10**5).partial_sum
    assert abs(a - b) < 1e-12
