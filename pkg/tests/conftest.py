import itertools

import pytest


def brute_force_ssyt_count(shape, n):
    """Count fillings of ``shape`` from {1..n} that are semistandard, by exhaustion."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    count = 0
    for values in itertools.product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, values))
        ok = all(
            (j == 0 or t[(i, j - 1)] <= v) and (i == 0 or t[(i - 1, j)] < v)
            for (i, j), v in t.items()
        )
        count += ok
    return count


@pytest.fixture
def ssyt_count():
    return brute_force_ssyt_count


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""

    def record(number, passed, summary):
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {summary}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
