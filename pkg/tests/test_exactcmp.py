"""Certified comparison engine: enclosures, two tiers, deciders."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oracle_ln_contains
from primeineq import (
    Comparison,
    Method,
    Ordering,
    Outcome,
    RealInterval,
    compare_integers,
    compare_natural_power,
    compare_power_power,
    decide_int_vs_int_times_ln2,
    decide_rational_vs_rational_ln,
    ln_interval,
)


class TestRealInterval:
    def test_orders_endpoints(self):
        with pytest.raises(ValueError):
            RealInterval(Fraction(2), Fraction(1), 64)

    def test_scale_flips_on_negative(self):
        iv = RealInterval(Fraction(1), Fraction(2), 64)
        flipped = iv.scale(-3)
        assert flipped.lo == -6 and flipped.hi == -3

    def test_contains(self):
        iv = RealInterval(Fraction(1, 2), Fraction(3, 2), 64)
        assert iv.contains(1)
        assert not iv.contains(2)


class TestLnInterval:
    def test_one_is_exact_zero(self):
        enc = ln_interval(1, 64)
        assert enc.lo == enc.hi == Fraction(0)

    def test_domain_and_precision_errors(self):
        for bad in (0, -5):
            with pytest.raises(ValueError):
                ln_interval(bad, 64)
        with pytest.raises(ValueError):
            ln_interval(2, 8)

    def test_containment_known_values(self):
        for x in (2, 73, 210, 10**9):
            for bits in (16, 64, 128, 256):
                assert oracle_ln_contains(ln_interval(x, bits), x)

    def test_width_contract(self):
        for x in (2, 73, 10**9, 10**18):
            for bits in (16, 64, 256):
                assert ln_interval(x, bits).width <= Fraction(1, 2 ** (bits // 2))

    def test_huge_operand(self):
        x = 3**5000
        enc = ln_interval(x, 64)
        assert oracle_ln_contains(enc, x)

    @settings(max_examples=40, deadline=None)
    @given(x=st.integers(min_value=1, max_value=10**6),
           bits=st.sampled_from([16, 32, 64, 128]))
    def test_containment_property(self, x, bits):
        assert oracle_ln_contains(ln_interval(x, bits), x)


class TestComparePowerPower:
    def test_known_orderings(self):
        assert compare_power_power(73, 12, 2, 73).order is Ordering.GREATER
        assert compare_power_power(71, 11, 2, 71).order is Ordering.LESS
        eq = compare_power_power(2, 10, 2, 10)
        assert eq.order is Ordering.EQUAL
        assert eq.method is Method.EXACT

    def test_validation(self):
        with pytest.raises(ValueError):
            compare_power_power(0, 1, 2, 3)
        with pytest.raises(ValueError):
            compare_power_power(2, -1, 2, 3)

    def test_equal_only_from_exact_tier(self):
        # 2**20 == 4**10: the interval tier can never separate these.
        cmp = compare_power_power(2, 20, 4, 10)
        assert cmp.order is Ordering.EQUAL
        assert cmp.method is Method.EXACT
        assert cmp.lhs_bits == cmp.rhs_bits == 21

    def test_zero_exponents(self):
        assert compare_power_power(7, 0, 11, 0).order is Ordering.EQUAL
        assert compare_power_power(7, 0, 2, 1).order is Ordering.LESS
        assert compare_power_power(3, 2, 5, 0).order is Ordering.GREATER

    def test_small_grid_matches_oracle(self):
        for a in range(1, 9):
            for c in range(1, 9):
                for b in range(0, 13):
                    for d in range(0, 13):
                        got = compare_power_power(a, b, c, d).order
                        lhs, rhs = a**b, c**d
                        want = (
                            Ordering.LESS if lhs < rhs
                            else Ordering.GREATER if lhs > rhs
                            else Ordering.EQUAL
                        )
                        assert got is want, (a, b, c, d)

    @settings(max_examples=80, deadline=None)
    @given(a=st.integers(1, 50), b=st.integers(0, 40),
           c=st.integers(1, 50), d=st.integers(0, 40))
    def test_antisymmetry(self, a, b, c, d):
        forward = compare_power_power(a, b, c, d).order
        backward = compare_power_power(c, d, a, b).order
        assert forward is backward.reverse()

    @settings(max_examples=60, deadline=None)
    @given(a=st.integers(2, 40), b=st.integers(1, 30),
           c=st.integers(2, 40), d=st.integers(1, 30))
    def test_two_tier_agreement(self, a, b, c, d):
        relaxed = compare_power_power(a, b, c, d)
        forced = compare_power_power(a, b, c, d, force_exact=True)
        assert relaxed.order is forced.order
        assert forced.method is Method.EXACT

    def test_monotone_refinement(self):
        # A verdict decided at low precision never flips at higher caps.
        cases = [(73, 12, 2, 73), (71, 11, 2, 71), (3, 100, 2, 158), (10, 7, 7, 8)]
        for a, b, c, d in cases:
            low = compare_power_power(a, b, c, d, start_bits=64, max_bits=64)
            high = compare_power_power(a, b, c, d, start_bits=64, max_bits=4096)
            if low.method is Method.INTERVAL:
                assert low.order is high.order


class TestCompareNaturalPower:
    def test_known_orderings(self):
        assert compare_natural_power(6469693230, 2, 31).order is Ordering.GREATER
        assert compare_natural_power(1, 2, 1).order is Ordering.LESS
        assert compare_natural_power(223092870, 2, 29).order is Ordering.LESS

    def test_zero_operand(self):
        assert compare_natural_power(0, 2, 0).order is Ordering.LESS
        with pytest.raises(ValueError):
            compare_natural_power(-1, 2, 1)

    def test_exact_equality(self):
        cmp = compare_natural_power(1024, 2, 10)
        assert cmp.order is Ordering.EQUAL
        assert cmp.method is Method.EXACT

    def test_lazy_operand_not_materialised_when_log_given(self):
        def boom():
            raise AssertionError("exact operand should not be needed")

        log_x = lambda bits: RealInterval(Fraction(100), Fraction(101), bits)
        cmp = compare_natural_power(boom, 2, 10, log_x=log_x)
        assert cmp.order is Ordering.GREATER
        assert cmp.method is Method.INTERVAL

    def test_lazy_operand_used_by_exact_tier(self):
        cmp = compare_natural_power(lambda: 1024, 2, 10)
        assert cmp.order is Ordering.EQUAL


class TestCompareIntegers:
    def test_orderings_and_bits(self):
        cmp = compare_integers(1000, 999)
        assert cmp.order is Ordering.GREATER
        assert cmp.lhs_bits == 10 and cmp.rhs_bits == 10
        assert compare_integers(-5, 3).order is Ordering.LESS
        assert compare_integers(7, 7).order is Ordering.EQUAL


class TestDecideRationalLn:
    def test_known_verdicts(self):
        assert (
            decide_rational_vs_rational_ln(1, 1, 2, 0, 1).outcome is Outcome.HOLDS
        )
        assert (
            decide_rational_vs_rational_ln(1, 1, 2, 1, 1).outcome is Outcome.FAILS
        )
        # 1 * ln 2 > 251012/100000 is false, so the upper prime bound holds at 2
        assert (
            decide_rational_vs_rational_ln(1, 1, 2, 251012, 100000).outcome
            is Outcome.FAILS
        )

    def test_zero_numerator_is_exact(self):
        v = decide_rational_vs_rational_ln(0, 1, 1, -1, 1)
        assert v.outcome is Outcome.HOLDS
        assert v.method is Method.EXACT

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            decide_rational_vs_rational_ln(1, 1, 1, 1, 1)
        with pytest.raises(ValueError):
            decide_rational_vs_rational_ln(1, 0, 2, 1, 1)
        with pytest.raises(ValueError):
            decide_rational_vs_rational_ln(1, 1, 2, 1, 0)

    def test_undecided_at_tight_cap(self):
        # 693147/1000000 sits strictly inside the 16-bit enclosure of ln 2
        # (the enclosure is one ulp wide, about 1.5e-5; the gap is 1.8e-7).
        v = decide_rational_vs_rational_ln(1, 1, 2, 693147, 1000000, max_precision=16)
        assert v.outcome is Outcome.UNDECIDED
        assert v.method is Method.INTERVAL
        assert v.precision_used == 16

    def test_refinement_decides_tight_gap(self):
        v = decide_rational_vs_rational_ln(1, 1, 2, 693147, 1000000, max_precision=4096)
        assert v.outcome is Outcome.HOLDS  # ln 2 = 0.6931471805... > 0.693147
        assert v.precision_used >= 64


class TestDecideIntLn2:
    def test_known_verdicts(self):
        assert decide_int_vs_int_times_ln2(39, 56).outcome is Outcome.HOLDS
        assert decide_int_vs_int_times_ln2(38, 55).outcome is Outcome.FAILS
        assert decide_int_vs_int_times_ln2(1, 1).outcome is Outcome.HOLDS

    def test_k_zero_is_exact(self):
        holds = decide_int_vs_int_times_ln2(1, 0)
        fails = decide_int_vs_int_times_ln2(0, 0)
        assert holds.outcome is Outcome.HOLDS and holds.method is Method.EXACT
        assert fails.outcome is Outcome.FAILS and fails.method is Method.EXACT

    def test_negative_k_rejected(self):
        with pytest.raises(ValueError):
            decide_int_vs_int_times_ln2(1, -1)

    def test_monotone_refinement(self):
        for m, k in ((39, 56), (38, 55), (7, 10), (693148, 1000000)):
            low = decide_int_vs_int_times_ln2(m, k, max_precision=64)
            high = decide_int_vs_int_times_ln2(m, k, max_precision=4096)
            if low.outcome is not Outcome.UNDECIDED:
                assert low.outcome is high.outcome
