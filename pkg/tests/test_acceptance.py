"""Acceptance suite.

Each test covers one numbered criterion and records a single PASS or
FAIL line that the terminal summary prints after the run.  The scans
mirror the library's own certified checks at desk scale; nothing here
relaxes a verdict or compares through floats.
"""

import math
import time
from contextlib import contextmanager

import pytest

from primeineq.catalog import (
    TABULATED_MULTIPLIERS,
    InequalityId,
    check_theorem1,
    table_row,
)
from primeineq.exactcmp import Method, Ordering, compare_power_power
from primeineq.scan import posa_threshold, scan_family, thirty_property

from conftest import record_criterion


@contextmanager
def criterion(num: int, title: str):
    try:
        yield
    except BaseException:
        line = f"FAIL criterion {num}: {title}"
        print(line)
        record_criterion(line)
        raise
    line = f"PASS criterion {num}: {title}"
    print(line)
    record_criterion(line)


@pytest.fixture(scope="module")
def theorem1_scan(source_2k):
    return scan_family(InequalityId.THEOREM1, None, 1, 2000, source=source_2k)


@pytest.fixture(scope="module")
def corollary1_scan(source_2k):
    return scan_family(InequalityId.COROLLARY1, None, 1, 2000, source=source_2k)


@pytest.fixture(scope="module")
def corollary2_scan(source_2k):
    return scan_family(InequalityId.COROLLARY2, None, 1, 2000, source=source_2k)


@pytest.fixture(scope="module")
def panaitopol_scan(source_2k):
    return scan_family(InequalityId.PANAITOPOL, None, 1, 2000, source=source_2k)


def bad_indices(report):
    return set(report.failures) | set(report.undecided)


def test_criterion_1_power_split(theorem1_scan, source_2k):
    with criterion(
        1, "power-vs-power scan over [1, 2000] splits exactly at 20"
    ):
        assert theorem1_scan.failures == list(range(1, 20))
        assert theorem1_scan.undecided == []
        assert theorem1_scan.stable_start == 20
        # Every failure is a strict reverse inequality, never equality.
        for r in list(range(1, 20)) + [20, 21, 100, 2000]:
            rec = check_theorem1(r, source=source_2k)
            assert rec.params["reverse_strict"] == (1 if r < 20 else 0)


def test_criterion_2_primorial_vs_power_of_two(corollary1_scan):
    with criterion(
        2, "primorial vs 2**p scan holds from 10 with the isolated hold at 8"
    ):
        assert corollary1_scan.failures == [1, 2, 3, 4, 5, 6, 7, 9]
        assert corollary1_scan.undecided == []
        assert corollary1_scan.stable_start == 10


def test_criterion_3_ln2_bound_sharp(corollary2_scan):
    with criterion(
        3, "ln-2 count bound fails at 54 and holds on [55, 2000], zero undecided"
    ):
        assert 54 in corollary2_scan.failures
        assert corollary2_scan.failures[-1] == 54
        assert corollary2_scan.failures == list(range(1, 52)) + [53, 54]
        assert corollary2_scan.undecided == []
        assert corollary2_scan.stable_start == 55


def test_criterion_4_threshold_recovery(source_2k):
    with criterion(
        4, "mined thresholds at limit 500 are 4, 5, 8, 10 for k = 2, 3, 5, 6"
    ):
        assert posa_threshold(2, 500, source=source_2k) == 4
        assert posa_threshold(3, 500, source=source_2k) == 5
        assert posa_threshold(5, 500, source=source_2k) == 8
        assert posa_threshold(6, 500, source=source_2k) == 10


def test_criterion_5_panaitopol(panaitopol_scan):
    with criterion(
        5, "primorial beats the split power on [2, 2000] and fails only at 1"
    ):
        assert panaitopol_scan.failures == [1]
        assert panaitopol_scan.undecided == []
        assert panaitopol_scan.stable_start == 2


def test_criterion_6_prime_count_bounds(source_2k):
    with criterion(
        6, "count bounds hold on [2, 100000] (upper) and [17, 100000] (lower)"
    ):
        upper = scan_family(
            InequalityId.ROSSER_UPPER, None, 2, 100000, source=source_2k
        )
        assert upper.failures == []
        assert upper.undecided == []
        lower = scan_family(
            InequalityId.ROSSER_LOWER, None, 17, 100000, source=source_2k
        )
        assert lower.failures == []
        assert lower.undecided == []


# Printed one-decimal lower bounds for rows 20..54 in the traditional
# form of the table; certified values must meet every one of them.
_PRINTED_BOUNDS = [
    "51.4", "56.8", "61.8", "62.8", "68.6", "73.8", "78.7", "84.1",
    "89.1", "89.8", "96.8", "97.5", "103.3", "108.5", "115.0", "120.4",
    "126.4", "127.3", "133.0", "139.1", "145.2", "145.5", "152.3",
    "152.6", "158.4", "164.0", "171.2", "173.0", "179.0", "184.7",
    "190.7", "197.1", "202.9", "204.4", "210.8",
]


def _tenths(s: str) -> int:
    whole, _, frac = s.partition(".")
    return int(whole) * 10 + int(frac or "0")


def test_criterion_7_table_reproduction(source_2k):
    with criterion(
        7, "all 35 table rows certify their printed bounds; row 43 computes 29"
    ):
        rows = [table_row(r, source=source_2k) for r in range(20, 55)]
        assert len(rows) == 35
        assert all(row.chain_ok for row in rows)
        for row, printed in zip(rows, _PRINTED_BOUNDS):
            assert _tenths(row.certified_lower) >= _tenths(printed)
            assert _tenths(row.certified_lower) > _tenths(row.rhs_07)
            if row.r == 43:
                assert row.multiplier == 29
                assert TABULATED_MULTIPLIERS[43] == 30
            else:
                assert row.multiplier == TABULATED_MULTIPLIERS[row.r]


def test_criterion_8_thirty_property_sweep():
    with criterion(
        8, "sweep to 1000000 finds exactly the ten known values in under 30 s"
    ):
        start = time.perf_counter()
        found = thirty_property(1_000_000)
        elapsed = time.perf_counter() - start
        assert found == [1, 2, 3, 4, 6, 8, 12, 18, 24, 30]
        assert max(found) == 30

        # Independent brute-force reconstruction below 1000.
        def qualifies(n):
            for a in range(2, n):
                if math.gcd(a, n) != 1:
                    continue
                if a >= 4 and any(a % d == 0 for d in range(2, math.isqrt(a) + 1)):
                    return False
            return True

        assert [n for n in range(1, 1001) if qualifies(n)] == found
        assert elapsed < 30.0, f"sweep took {elapsed:.1f}s"


def test_criterion_9_comparator_grid():
    with criterion(
        9, "power comparator matches big-integer evaluation on the 384400-case grid"
    ):
        pows = {}
        for base in range(1, 21):
            value = 1
            for exp in range(31):
                pows[base, exp] = value
                value *= base
        cases = 0
        for (a, b), lhs in pows.items():
            for (c, d), rhs in pows.items():
                cmp = compare_power_power(a, b, c, d)
                if lhs < rhs:
                    expected = Ordering.LESS
                elif lhs > rhs:
                    expected = Ordering.GREATER
                else:
                    expected = Ordering.EQUAL
                assert cmp.order is expected, (a, b, c, d)
                if expected is Ordering.EQUAL:
                    assert cmp.method is Method.EXACT
                cases += 1
        assert cases == 384400


def test_criterion_10_proof_helpers(source_2k):
    with criterion(
        10, "helper A fails at 62 then holds through 149; helper B holds to 2000"
    ):
        helper_a = scan_family(
            InequalityId.PROOF_HELPER_A, None, 2, 149, source=source_2k
        )
        assert helper_a.failures == list(range(2, 56)) + [61, 62]
        assert helper_a.failures[-1] == 62
        assert helper_a.stable_start == 63
        helper_b = scan_family(
            InequalityId.PROOF_HELPER_B, None, 149, 2000, source=source_2k
        )
        assert helper_b.failures == []
        assert helper_b.undecided == []


def test_criterion_11_implication_suites(
    theorem1_scan, panaitopol_scan, corollary1_scan, source_2k
):
    with criterion(11, "both implication suites hold at every scanned index"):
        # Wherever the power split and the split-power bound both hold,
        # the primorial power-of-two bound must follow.
        thm_bad = bad_indices(theorem1_scan)
        pan_bad = bad_indices(panaitopol_scan)
        cor1_bad = bad_indices(corollary1_scan)
        premise_count = 0
        for r in range(20, 2001):
            if r not in thm_bad and r not in pan_bad:
                premise_count += 1
                assert r not in cor1_bad
        assert premise_count == 1981  # non-vacuous on the whole range

        # With the doubling chain in hand, the power-of-two bound lifts
        # to k-th powers whenever n >= 2k.
        chain = scan_family(InequalityId.POSA_CHAIN, None, 1, 500, source=source_2k)
        assert chain.failures == [] and chain.undecided == []
        for k in range(5, 9):
            conclusion = scan_family(
                InequalityId.BONSE_POSA, {"k": k}, 2 * k, 500, source=source_2k
            )
            assert set(range(2 * k, 501)) & cor1_bad == set()
            assert conclusion.failures == []
            assert conclusion.undecided == []
