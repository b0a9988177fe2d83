"""Shared fixtures and oracle helpers for the test suite."""

import mpmath
import pytest

from primeineq import PrimeSource, build_table

_criterion_lines = []


def record_criterion(line: str) -> None:
    _criterion_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in _criterion_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def table_2k():
    """Primes through p_2200 and all values to 120000 (covers every scan)."""
    return build_table(min_value=120_000, min_index=2_200)


@pytest.fixture(scope="session")
def source_2k(table_2k):
    return PrimeSource(table_2k)


def oracle_ln_contains(interval, x) -> bool:
    """High-precision containment check, independent of the MPFR path.

    Working precision tracks the interval's precision so the oracle's
    own rounding error stays far below the interval width.
    """
    dps = int(interval.precision_bits * 0.31) + 25
    with mpmath.workdps(dps):
        value = mpmath.ln(x)
        lo = mpmath.mpf(interval.lo.numerator) / interval.lo.denominator
        hi = mpmath.mpf(interval.hi.numerator) / interval.hi.denominator
        return lo <= value <= hi


def oracle_ln(x, dps=60):
    with mpmath.workdps(dps):
        return mpmath.ln(x)
