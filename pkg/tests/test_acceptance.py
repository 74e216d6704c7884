"""Acceptance criteria 1-11, each at its stated tolerance.

Every test prints one PASS/FAIL line (also collected into a summary block at
the end of the pytest run).  Criterion 11's whole-suite runtime budget is
checked by the session hook in conftest.py.
"""

import csv
import io
import math
import time

import mpmath
import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from zetaseries import bernoulli_zeta, cli, identities, truncation
from zetaseries import zeta_series as zs
from zetaseries.classical_series import SeriesKind, oracle_converged

SINE2 = SeriesKind("sin", 2)
ROUNDING_ALLOWANCE = 1e-15


def report(n, ok, detail, capsys=None):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    ACCEPTANCE_LINES.append(line)
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    assert ok, line


def ulps_apart(a, b):
    return abs(a - b) / math.ulp(b)


def test_criterion_01_zeta_table(capsys):
    bernoulli_zeta.zeta_table.cache_clear()
    bernoulli_zeta.zeta_even.cache_clear()
    t0 = time.perf_counter()
    table = bernoulli_zeta.zeta_table(30)
    elapsed = time.perf_counter() - t0

    with mpmath.workdps(40):
        closed = [mpmath.pi**2 / 6, mpmath.pi**4 / 90, mpmath.pi**6 / 945,
                  mpmath.pi**8 / 9450, mpmath.pi**10 / 93555]
        closed = [float(c) for c in closed]
    worst_ulps = max(ulps_apart(table.zeta2k(k), closed[k - 1]) for k in range(1, 6))

    # direct sum bracketed by the integral tail bounds
    worst_rel = 0.0
    for k in range(1, 31):
        s = 2 * k
        n = 10**6 if k == 1 else 10**3
        partial = math.fsum(np.arange(1, n + 1, dtype=float) ** -s)
        lower = partial + 1.0 / ((s - 1) * (n + 1) ** (s - 1))
        upper = partial + 1.0 / ((s - 1) * n ** (s - 1))
        z = table.zeta2k(k)
        outside = max(lower - z, z - upper, 0.0)
        worst_rel = max(worst_rel, outside / z)
    ok = worst_ulps <= 4 and worst_rel < 1e-12 and elapsed < 1.0
    report(1, ok, f"closed forms within {worst_ulps:.0f} ulps; k<=30 outside direct-sum bracket "
           f"by {worst_rel:.1e} rel; table built in {elapsed * 1e3:.1f} ms", capsys)


def test_criterion_02_log_sinc(capsys):
    xs = np.linspace(-0.9, 0.9, 64)
    worst_auto = 0.0
    worst_60 = 0.0
    bound_ok = True
    for x in xs:
        x = float(x)
        exact = math.log(math.sin(math.pi * x) / (math.pi * x))
        worst_auto = max(worst_auto, abs(zs.log_sinc(x, "auto").value - exact))
        if abs(x) <= 0.7:
            r = zs.log_sinc(x, 60)
            err = abs(r.value - exact)
            worst_60 = max(worst_60, err)
            # est_error covers truncation only; 1e-15 absorbs the rounding of both sides
            bound_ok &= err <= 3 * r.est_error + ROUNDING_ALLOWANCE
    ok = worst_60 < 1e-10 and bound_ok and worst_auto < 1e-10
    report(2, ok, f"|x|<=0.7 at 60 terms max err {worst_60:.1e} (3x est_error holds: {bound_ok}); "
           f"all 64 points with adaptive terms max err {worst_auto:.1e}", capsys)


def test_criterion_03_sin_over_k2(capsys):
    thetas = np.linspace(0.0, 2 * math.pi, 64, endpoint=False)
    worst = max(
        abs(zs.sin_over_k2(float(t), "auto").value - oracle_converged(SINE2, float(t), 1e-9))
        for t in thetas
    )
    zero = zs.sin_over_k2(0.0, "auto").value
    catalan = 0.915965594177219015054603514932
    cat_err = abs(zs.sin_over_k2(math.pi / 2, "auto").value - catalan)
    ok = worst < 5e-9 and zero == 0.0 and cat_err < 1e-9
    report(3, ok, f"max err vs classical oracle {worst:.1e}; theta=0 gives {zero!r}; "
           f"Catalan err {cat_err:.1e}", capsys)


def test_criterion_04_cos_tan(capsys):
    xs = np.linspace(-0.45, 0.45, 64)
    cos_err = max(abs(zs.cos_rep(float(x)).value - math.cos(math.pi * x)) for x in xs)
    tan_err = max(abs(zs.tan_rep(float(x)).value - math.tan(math.pi * x)) for x in xs)
    ok = cos_err < 1e-10 and tan_err < 1e-10
    report(4, ok, f"cos max err {cos_err:.1e}; tan max err {tan_err:.1e}", capsys)


def test_criterion_05_gamma_pair(capsys):
    ss = np.linspace(-0.9, 0.9, 32)
    worst = 0.0
    for s in ss:
        s = float(s)
        g = zs.gamma_pair(s, "auto").value
        factor = 1.0 if s == 0 else math.sin(math.pi * s) / (math.pi * s)
        worst = max(worst, abs(g * factor - 1.0))
    report(5, worst < 1e-10, f"max |gamma_pair * sin(pi s)/(pi s) - 1| = {worst:.1e}", capsys)


def test_criterion_06_log_series(capsys):
    points = [0.25, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0, 100.0]
    worst = max(abs(zs.log_series(x, "auto").value - math.log(x)) for x in points)
    at_one = zs.log_series(1.0, "auto").value
    ok = worst < 1e-9 and at_one == 0.0
    report(6, ok, f"max err {worst:.1e} over {points}; x=1 gives {at_one!r}", capsys)


def brute_exp_dilog(theta):
    q = math.exp(-theta)
    parts, k = [], 1
    while True:
        parts.append(q**k / k**2)
        # remaining terms are below a geometric series with ratio q
        if q ** (k + 1) / ((k + 1) ** 2 * (1 - q)) < 1e-13:
            return math.fsum(parts)
        k += 1


def test_criterion_07_dilog_exp(capsys):
    thetas = [0.25, math.log(2), 1.0, 2.0, 3.0]
    worst = max(abs(zs.dilog_exp(t, 30).value - brute_exp_dilog(t)) for t in thetas)
    limit = zs.dilog_exp(0.0, 30).value
    ok = worst < 1e-11 and limit == math.pi**2 / 6
    report(7, ok, f"max err vs brute force {worst:.1e}; theta=0 gives {limit!r}", capsys)


def test_criterion_08_identities(capsys):
    t0 = time.perf_counter()
    results = {r.id: r for r in identities.check_all(1e-10)}
    elapsed = time.perf_counter() - t0
    passing = ["ln2pi", "lnpi2", "quarter", "threequarter", "half", "inv_e", "ln2", "euler_gamma", "lnpi"]
    all_pass = all(results[i].status is identities.Status.PASS for i in passing)
    cat = results["catalan"]
    g = identities.catalan_constant()
    corrected = 2 * g / math.pi - 1 + math.log(math.pi / 2)
    ok = (
        all_pass
        and cat.status is identities.Status.ERRATA
        and abs(cat.lhs_value - 0.0347045134) <= 1e-9
        and abs(cat.rhs_value - corrected) <= 1e-9
        and abs(cat.lhs_value - corrected) <= 1e-9
        and abs(cat.lhs_value - cat.stated_rhs_value) > 0.05
        and elapsed < 5.0
    )
    report(8, ok, f"9 entries pass: {all_pass}; catalan {cat.status.value} lhs {cat.lhs_value:.10f}, "
           f"stated rhs off by {abs(cat.lhs_value - cat.stated_rhs_value):.4f}; {elapsed * 1e3:.0f} ms", capsys)


def test_criterion_09_seven_terms(capsys):
    r = truncation.terms_needed("sin_over_k2", 1.0, 1e-14)
    err7 = truncation.measured_error("sin_over_k2", 1.0, 7)
    ok = r.terms_needed == 7 and err7 < 2e-15
    report(9, ok, f"terms_needed = {r.terms_needed}; 7-term error {err7:.2e}", capsys)


def test_criterion_10_approximants(capsys):
    cos_err = truncation.approximant_error("cos_first", 0.01)
    sin_err = truncation.approximant_error("sin_first", 0.05)
    # full inner zeta sum: the one-term cut of exp(-y)
    exp_err = truncation.approximant_error("sin_expanded", 0.5, "auto")
    ok = 1e-8 <= cos_err <= 6e-8 and 1e-6 <= sin_err <= 8e-6 and 0.10 <= exp_err <= 0.16
    report(10, ok, f"cos_first {cos_err:.3e}; sin_first rel {sin_err:.3e}; sin_expanded rel {exp_err:.4f}",
           capsys)


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return cli.main(list(argv), out, err), out.getvalue()


def invariant_holds(text):
    rows = list(csv.reader(io.StringIO(text)))
    n = (len(rows[0]) - 2) // 2
    for row in rows[1:]:
        vals = [float(v) for v in row]
        exact = vals[1]
        for a, e in zip(vals[2 : 2 + n], vals[2 + n :]):
            if abs(e - (a - exact)) > math.ulp(a - exact):
                return False
    return len(rows) > 2


def test_criterion_11_cli(capsys, tmp_path):
    code_a, fig_a = run_cli("plotdata", "log_sinc", "--range", "-0.9:0.9", "--samples", "181", "--terms", "1,2,3")
    code_b, fig_b = run_cli("plotdata", "log_series", "--range", "0.2:5", "--samples", "100", "--terms", "1,2,3")
    figures_ok = code_a == 0 and code_b == 0 and invariant_holds(fig_a) and invariant_holds(fig_b)
    code, ident_csv = run_cli("identities", "--format", "csv")
    header_ok = code == 0 and ident_csv.split("\n", 1)[0] == "id,lhs,rhs,residual,status,note"

    with pytest.MonkeyPatch.context() as mp:
        mp.setattr(identities, "TERM_CAP", 2)
        fail_code = run_cli("identities")[0]
    codes = {
        0: run_cli("zeta", "--max", "3")[0],
        1: fail_code,
        2: run_cli("eval", "tan_rep", "--x", "0.5")[0],
        3: run_cli("eval", "no_such_series", "--x", "0.1")[0],
        4: run_cli("plotdata", "log_sinc", "-o", str(tmp_path / "missing" / "f.csv"))[0],
    }
    codes_ok = all(k == v for k, v in codes.items())
    ok = figures_ok and header_ok and codes_ok
    report(11, ok, f"figure CSV invariant within 1 ulp: {figures_ok}; identity header exact: {header_ok}; "
           f"exit codes {sorted(codes.values())}", capsys)
