"""Certified order decisions between prime-power and logarithmic quantities.

Every verdict produced here is backed either by exact big-integer
arithmetic or by an interval enclosure whose endpoints are dyadic
rationals obtained with directed (outward) rounding.  Plain floating
point never decides anything.

Comparisons are two-tiered: a certified-interval tier runs first and
doubles its working precision while the two enclosures overlap; integer
powers then fall back to exact big-integer arithmetic, which always
decides.  Decision procedures for forms that genuinely contain a
logarithm (``m > k*ln 2`` and friends) have no exact fallback and
report ``Undecided`` once the precision cap is reached rather than
trusting rounding.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Union

import gmpy2

# Arbitrary-precision non-negative integer; Python ints are exact.
Natural = int

DEFAULT_START_BITS = 64
DEFAULT_MAX_BITS = 4096
MIN_PRECISION_BITS = 16

_ZERO = Fraction(0)


class Ordering(enum.Enum):
    """Exact order relation between two real quantities."""

    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    def reverse(self) -> "Ordering":
        if self is Ordering.LESS:
            return Ordering.GREATER
        if self is Ordering.GREATER:
            return Ordering.LESS
        return Ordering.EQUAL


class Outcome(enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNDECIDED = "Undecided"


class Method(enum.Enum):
    EXACT = "exact-integer"
    INTERVAL = "certified-interval"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision procedure plus how it was reached.

    ``Undecided`` is only ever produced by the interval tier at its
    precision cap; exact-integer decisions are always conclusive.
    """

    outcome: Outcome
    method: Method
    precision_used: int


@dataclass(frozen=True)
class RealInterval:
    """Enclosure [lo, hi] of a real value with dyadic-rational endpoints.

    The represented real number always lies inside the interval; that
    containment is the correctness contract of every producer.  Endpoint
    arithmetic on Fractions is exact, so scaling and summing enclosures
    never loses the containment guarantee.
    """

    lo: Fraction
    hi: Fraction
    precision_bits: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"inverted interval: lo={self.lo} > hi={self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value: Union[int, Fraction]) -> bool:
        return self.lo <= value <= self.hi

    def scale(self, factor: Union[int, Fraction]) -> "RealInterval":
        """Exact scaling; a negative factor swaps the endpoints."""
        f = Fraction(factor)
        if f >= 0:
            return RealInterval(self.lo * f, self.hi * f, self.precision_bits)
        return RealInterval(self.hi * f, self.lo * f, self.precision_bits)


@dataclass(frozen=True)
class Comparison:
    """Result of an exact two-sided comparison.

    ``lhs_bits``/``rhs_bits`` hold the bit lengths of the two exactly
    computed sides when the exact tier ran, and are zero when the
    certified-interval tier separated the operands.
    """

    order: Ordering
    method: Method
    precision_used: int
    lhs_bits: int = 0
    rhs_bits: int = 0


@lru_cache(maxsize=None)
def _context_pair(bits: int):
    # Shared per-precision MPFR contexts; only their rounding mode and
    # precision matter, per-operation status flags are ignored.
    down = gmpy2.context(precision=bits, round=gmpy2.RoundDown)
    up = gmpy2.context(precision=bits, round=gmpy2.RoundUp)
    return down, up


def _to_fraction(x) -> Fraction:
    num, den = x.as_integer_ratio()
    return Fraction(int(num), int(den))


def _ln_endpoints_raw(x: int, bits: int) -> tuple[Fraction, Fraction]:
    # Conversion of x and the logarithm itself both round inside the
    # directed context, and ln is monotone, so each endpoint is a true
    # one-sided bound.
    down, up = _context_pair(bits)
    return _to_fraction(down.log(x)), _to_fraction(up.log(x))


@lru_cache(maxsize=65536)
def _ln_endpoints_small(x: int, bits: int) -> tuple[Fraction, Fraction]:
    return _ln_endpoints_raw(x, bits)


def _ln_endpoints(x: int, bits: int) -> tuple[Fraction, Fraction]:
    if x == 1:
        return _ZERO, _ZERO
    if x.bit_length() <= 64:
        return _ln_endpoints_small(x, bits)
    return _ln_endpoints_raw(x, bits)


def ln_interval(x: int, precision_bits: int) -> RealInterval:
    """Certified enclosure of ln x with dyadic endpoints.

    The width shrinks roughly like 2**(-precision_bits); for x = 1 the
    enclosure is the exact point [0, 0].
    """
    if x <= 0:
        raise ValueError(f"ln requires a positive integer, got {x}")
    if precision_bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}")
    lo, hi = _ln_endpoints(x, precision_bits)
    return RealInterval(lo, hi, precision_bits)


def compare_integers(lhs: int, rhs: int) -> Comparison:
    """Exact integer comparison, short-circuiting on bit length."""
    lb, rb = lhs.bit_length(), rhs.bit_length()
    if lhs >= 0 and rhs >= 0 and lb != rb:
        order = Ordering.LESS if lb < rb else Ordering.GREATER
    elif lhs == rhs:
        order = Ordering.EQUAL
    else:
        order = Ordering.LESS if lhs < rhs else Ordering.GREATER
    return Comparison(order, Method.EXACT, 0, lb, rb)


def _precision_steps(start_bits: int, max_bits: int):
    bits = max(MIN_PRECISION_BITS, min(start_bits, max_bits))
    while True:
        yield bits
        if bits >= max_bits:
            return
        bits = min(bits * 2, max_bits)


def compare_power_power(
    a: int,
    b: int,
    c: int,
    d: int,
    *,
    start_bits: int = DEFAULT_START_BITS,
    max_bits: int = DEFAULT_MAX_BITS,
    force_exact: bool = False,
) -> Comparison:
    """Exact ordering of a**b versus c**d.

    The interval tier compares b*ln a against d*ln c and escalates
    precision while the enclosures overlap; any remaining overlap is
    settled by computing both powers exactly.  ``Equal`` can only come
    from the exact tier.
    """
    if a < 1 or c < 1:
        raise ValueError("bases must be >= 1")
    if b < 0 or d < 0:
        raise ValueError("exponents must be >= 0")
    if not force_exact:
        for bits in _precision_steps(start_bits, max_bits):
            lo1, hi1 = _ln_endpoints(a, bits)
            lo2, hi2 = _ln_endpoints(c, bits)
            l1, h1 = b * lo1, b * hi1
            l2, h2 = d * lo2, d * hi2
            if h1 < l2:
                return Comparison(Ordering.LESS, Method.INTERVAL, bits)
            if l1 > h2:
                return Comparison(Ordering.GREATER, Method.INTERVAL, bits)
            if l1 == h1 and l2 == h2:
                break  # two coinciding exact points; only equality is left
    return compare_integers(a**b, c**d)


def compare_natural_power(
    x: Union[Natural, Callable[[], Natural]],
    c: int,
    d: int,
    *,
    log_x: Optional[Callable[[int], RealInterval]] = None,
    start_bits: int = DEFAULT_START_BITS,
    max_bits: int = DEFAULT_MAX_BITS,
    force_exact: bool = False,
) -> Comparison:
    """Exact ordering of a natural number x versus c**d.

    ``x`` may be given lazily as a zero-argument callable; it is only
    materialised when the exact tier runs.  ``log_x``, when supplied,
    maps a precision in bits to an enclosure of ln x (for example a
    Chebyshev-theta prefix sum) so the interval tier never needs the
    exact value.
    """
    if c < 1:
        raise ValueError("base must be >= 1")
    if d < 0:
        raise ValueError("exponent must be >= 0")

    value: Optional[int] = None if callable(x) else x
    if value is not None and value < 0:
        raise ValueError("operand must be non-negative")

    def materialise() -> int:
        nonlocal value
        if value is None:
            value = x()  # type: ignore[operator]
            if value < 0:
                raise ValueError("operand must be non-negative")
        return value

    if not force_exact and (log_x is not None or materialise() > 0):
        for bits in _precision_steps(start_bits, max_bits):
            if log_x is not None:
                enc = log_x(bits)
                l1, h1 = enc.lo, enc.hi
            else:
                l1, h1 = _ln_endpoints(materialise(), bits)
            lo2, hi2 = _ln_endpoints(c, bits)
            l2, h2 = d * lo2, d * hi2
            if h1 < l2:
                return Comparison(Ordering.LESS, Method.INTERVAL, bits)
            if l1 > h2:
                return Comparison(Ordering.GREATER, Method.INTERVAL, bits)
            if l1 == h1 and l2 == h2:
                break
    return compare_integers(materialise(), c**d)


def decide_rational_vs_rational_ln(
    p_num: int,
    p_den: int,
    x: int,
    q_num: int,
    q_den: int,
    max_precision: int = DEFAULT_MAX_BITS,
) -> Verdict:
    """Decide (p_num/p_den) * ln x > q_num/q_den with certified intervals.

    For integer x >= 2 the left side is irrational whenever p_num != 0,
    so the two quantities are never equal and refinement separates them
    for any finite true gap; ``Undecided`` is returned only when the
    precision cap stops the refinement first.
    """
    if p_den < 1 or q_den < 1:
        raise ValueError("denominators must be >= 1")
    if p_num == 0:
        # Degenerate rational-vs-rational comparison; no logarithm involved.
        outcome = Outcome.HOLDS if 0 > Fraction(q_num, q_den) else Outcome.FAILS
        return Verdict(outcome, Method.EXACT, 0)
    if x < 2:
        raise ValueError(f"ln comparison requires x >= 2, got x={x}")

    p = Fraction(p_num, p_den)
    q = Fraction(q_num, q_den)
    bits = 0
    for bits in _precision_steps(DEFAULT_START_BITS, max_precision):
        enc = ln_interval(x, bits).scale(p)
        if enc.lo > q:
            return Verdict(Outcome.HOLDS, Method.INTERVAL, bits)
        if enc.hi < q:
            return Verdict(Outcome.FAILS, Method.INTERVAL, bits)
    return Verdict(Outcome.UNDECIDED, Method.INTERVAL, bits)


def decide_int_vs_int_times_ln2(
    m: int,
    k: int,
    max_precision: int = DEFAULT_MAX_BITS,
) -> Verdict:
    """Decide m > k * ln 2 with certified intervals around ln 2.

    Equality is impossible for k >= 1 (ln 2 is irrational), so the
    refinement loop decides every instance with a finite gap.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        outcome = Outcome.HOLDS if m > 0 else Outcome.FAILS
        return Verdict(outcome, Method.EXACT, 0)
    bits = 0
    for bits in _precision_steps(DEFAULT_START_BITS, max_precision):
        lo, hi = _ln_endpoints(2, bits)
        if m > k * hi:
            return Verdict(Outcome.HOLDS, Method.INTERVAL, bits)
        if m < k * lo:
            return Verdict(Outcome.FAILS, Method.INTERVAL, bits)
    return Verdict(Outcome.UNDECIDED, Method.INTERVAL, bits)
