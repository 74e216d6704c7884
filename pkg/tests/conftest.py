import time

ACCEPTANCE_LINES: list[str] = []
SUITE_BUDGET_S = 30.0
_start = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.perf_counter() - _start
    lines = list(ACCEPTANCE_LINES)
    if lines:
        ok = elapsed < SUITE_BUDGET_S
        lines.append(
            f"{'PASS' if ok else 'FAIL'} criterion 11 (suite runtime): {elapsed:.1f} s "
            f"(budget {SUITE_BUDGET_S:.0f} s)"
        )
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


def pytest_sessionfinish(session, exitstatus):
    if ACCEPTANCE_LINES and time.perf_counter() - _start >= SUITE_BUDGET_S:
        session.exitstatus = 1
