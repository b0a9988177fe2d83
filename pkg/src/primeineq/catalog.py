"""Checkable catalog of classical inequalities on prime products.

Each operation evaluates one inequality instance at a given index and
returns a :class:`CheckRecord` with a certified verdict: integer forms
fall back to exact big-integer arithmetic after a fast interval tier,
and genuinely logarithmic forms use directed-rounding interval
refinement, reporting ``Undecided`` at the precision cap instead of
guessing.

Checks take primes from an auto-growing process-wide
:class:`~primeineq.primes.PrimeSource` unless a ``source`` (either a
``PrimeSource`` or a fixed ``PrimeTable``) is passed explicitly; with a
fixed table, out-of-range lookups raise
:class:`~primeineq.primes.TableGrowthRequired`.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Optional, Tuple, Union

from . import primes
from .exactcmp import (
    DEFAULT_MAX_BITS,
    DEFAULT_START_BITS,
    Comparison,
    Method,
    Ordering,
    Outcome,
    RealInterval,
    Verdict,
    _precision_steps,
    compare_integers,
    compare_natural_power,
    compare_power_power,
    decide_int_vs_int_times_ln2,
    decide_rational_vs_rational_ln,
    ln_interval,
)
from .primes import PrimeSource, PrimeTable, TableGrowthRequired

# Exact rational forms of the decimal constants used in verdict paths.
ROSSER_UPPER_NUM = 125506
ROSSER_UPPER_DEN = 100000
HELPER_B_CONST = Fraction(125506, 10000)
SEVEN_TENTHS = Fraction(7, 10)

SourceLike = Union[PrimeSource, PrimeTable, None]


class InequalityId(enum.Enum):
    BONSE_POSA = "bonse_posa"
    THEOREM1 = "theorem1"
    COROLLARY1 = "corollary1"
    COROLLARY2 = "corollary2"
    PANAITOPOL = "panaitopol"
    MAMANGAKIS_V1 = "mamangakis_v1"
    MAMANGAKIS_V2 = "mamangakis_v2"
    REICH = "reich"
    SANDOR_V1 = "sandor_v1"
    SANDOR_V2 = "sandor_v2"
    SANDOR_V3 = "sandor_v3"
    BETTS = "betts"
    ROSSER_UPPER = "rosser_upper"
    ROSSER_LOWER = "rosser_lower"
    POSA_CHAIN = "posa_chain"
    PROOF_HELPER_A = "proof_helper_A"
    PROOF_HELPER_B = "proof_helper_B"
    THIRTY_PROPERTY = "thirty_property"


@dataclass(frozen=True, eq=True)
class CheckRecord:
    """One inequality instance's certified verdict.

    ``lhs_bits``/``rhs_bits`` are the bit lengths of the two exactly
    computed sides when the exact path ran, zero otherwise.
    """

    id: InequalityId
    params: Dict[str, int]
    verdict: Verdict
    lhs_bits: int = 0
    rhs_bits: int = 0

    @property
    def outcome(self) -> Outcome:
        return self.verdict.outcome

    @property
    def method(self) -> Method:
        return self.verdict.method

    @property
    def precision_used(self) -> int:
        return self.verdict.precision_used


@dataclass(frozen=True)
class TableRow:
    """One row of the split-range verification table (indices 20..54)."""

    r: int
    multiplier: int
    prime: int
    certified_lower: str
    rhs_07: str
    chain_ok: bool


# Multiplier column as it appears in the traditional printed form of
# this table.  Row 43 is printed there as 30 although 43 - pi(43) = 29;
# checks use the computed value and reports surface the difference.
TABULATED_MULTIPLIERS: Dict[int, int] = {
    20: 12, 21: 13, 22: 14, 23: 14, 24: 15, 25: 16, 26: 17, 27: 18,
    28: 19, 29: 19, 30: 20, 31: 20, 32: 21, 33: 22, 34: 23, 35: 24,
    36: 25, 37: 25, 38: 26, 39: 27, 40: 28, 41: 28, 42: 29, 43: 30,
    44: 30, 45: 31, 46: 32, 47: 32, 48: 33, 49: 34, 50: 35, 51: 36,
    52: 37, 53: 37, 54: 38,
}


_shared_source: Optional[PrimeSource] = None
_shared_lock = threading.Lock()


def default_source() -> PrimeSource:
    """Process-wide auto-growing prime source, created on first use."""
    global _shared_source
    if _shared_source is None:
        with _shared_lock:
            if _shared_source is None:
                _shared_source = PrimeSource()
    return _shared_source


class _TableView:
    """Bound-checked prime lookups that grow through a PrimeSource when
    one backs the view and raise TableGrowthRequired otherwise."""

    __slots__ = ("_source", "_table")

    def __init__(self, backing: Union[PrimeSource, PrimeTable]):
        if isinstance(backing, PrimeSource):
            self._source: Optional[PrimeSource] = backing
            self._table = backing.table
        else:
            self._source = None
            self._table = backing

    def _need(self, *, min_value: int = 0, min_index: int = 0) -> PrimeTable:
        t = self._table
        if t.limit_value >= min_value and t.count >= min_index:
            return t
        if self._source is None:
            raise TableGrowthRequired(min_value=min_value, min_index=min_index)
        self._table = self._source.ensure(min_value=min_value, min_index=min_index)
        return self._table

    def prime(self, n: int) -> int:
        return primes.nth_prime(self._need(min_index=n), n)

    def count_upto(self, x: int) -> int:
        return primes.prime_count(self._need(min_value=x), x)

    def primorial(self, n: int) -> int:
        return primes.primorial(self._need(min_index=n), n)

    def log_primorial(self, n: int, bits: int) -> RealInterval:
        return primes.log_primorial_interval(self._need(min_index=n), n, bits)


def _view(source: SourceLike) -> _TableView:
    return _TableView(source if source is not None else default_source())


def _from_comparison(
    ineq: InequalityId,
    params: Dict[str, int],
    cmp: Comparison,
    holds_when: Tuple[Ordering, ...],
) -> CheckRecord:
    outcome = Outcome.HOLDS if cmp.order in holds_when else Outcome.FAILS
    verdict = Verdict(outcome, cmp.method, cmp.precision_used)
    return CheckRecord(ineq, params, verdict, cmp.lhs_bits, cmp.rhs_bits)


def _negate(verdict: Verdict) -> Verdict:
    # Sound because the wrapped decision is strict and certified, and
    # equality is impossible on the operands it is applied to.
    if verdict.outcome is Outcome.HOLDS:
        return Verdict(Outcome.FAILS, verdict.method, verdict.precision_used)
    if verdict.outcome is Outcome.FAILS:
        return Verdict(Outcome.HOLDS, verdict.method, verdict.precision_used)
    return verdict


def check_bonse_posa(
    n: int,
    k: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> CheckRecord:
    """primorial(n) > p_{n+1}**k (k = 2 and 3 are the classical cases)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    v = _view(source)
    p_next = v.prime(n + 1)
    cmp = compare_natural_power(
        lambda: v.primorial(n),
        p_next,
        k,
        log_x=lambda bits: v.log_primorial(n, bits),
        max_bits=max_precision_bits,
    )
    return _from_comparison(
        InequalityId.BONSE_POSA, {"n": n, "k": k}, cmp, (Ordering.GREATER,)
    )


def check_theorem1(
    r: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> CheckRecord:
    """p_{r+1}**(r - pi(r)) > 2**p_{r+1}.

    ``params["reverse_strict"]`` is 1 when the strict reverse inequality
    holds instead, so the two-sided split claim is observable from one
    record; equality never occurs (odd prime power vs power of two).
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    v = _view(source)
    p_next = v.prime(r + 1)
    exponent = r - v.count_upto(r)
    cmp = compare_power_power(p_next, exponent, 2, p_next, max_bits=max_precision_bits)
    params = {
        "r": r,
        "reverse_strict": 1 if cmp.order is Ordering.LESS else 0,
    }
    return _from_comparison(InequalityId.THEOREM1, params, cmp, (Ordering.GREATER,))


def check_corollary1(
    r: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> CheckRecord:
    """primorial(r) > 2**p_{r+1} (holds from 10 on, and in isolation at 8)."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    v = _view(source)
    p_next = v.prime(r + 1)
    cmp = compare_natural_power(
        lambda: v.primorial(r),
        2,
        p_next,
        log_x=lambda bits: v.log_primorial(r, bits),
        max_bits=max_precision_bits,
    )
    return _from_comparison(InequalityId.COROLLARY1, {"r": r}, cmp, (Ordering.GREATER,))


def check_corollary2(
    r: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> CheckRecord:
    """r - pi(r) > (r + 1) * ln 2, decided by certified enclosures of ln 2."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    v = _view(source)
    m = r - v.count_upto(r)
    verdict = decide_int_vs_int_times_ln2(m, r + 1, max_precision_bits)
    return CheckRecord(InequalityId.COROLLARY2, {"r": r}, verdict)


def check_panaitopol(
    n: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> CheckRecord:
    """primorial(n) > p_{n+1}**(n - pi(n))."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    v = _view(source)
    p_next = v.prime(n + 1)
    exponent = n - v.count_upto(n)
    assert exponent >= 0
    cmp = compare_natural_power(
        lambda: v.primorial(n),
        p_next,
        exponent,
        log_x=lambda bits: v.log_primorial(n, bits),
        max_bits=max_precision_bits,
    )
    return _from_comparison(InequalityId.PANAITOPOL, {"n": n}, cmp, (Ordering.GREATER,))


def check_mamangakis(
    n: int,
    variant: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> CheckRecord:
    """Variant 1: primorial(n) > p_{4n}.  Variant 2: primorial(4n-9) > p_{4n}**4."""
    if variant not in (1, 2):
        raise ValueError(f"variant must be 1 or 2, got {variant}")
    v = _view(source)
    if variant == 1:
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        ineq = InequalityId.MAMANGAKIS_V1
        index, power = n, 1
    else:
        if n < 3:
            raise ValueError(f"variant 2 needs n >= 3 so that 4n - 9 >= 1, got {n}")
        ineq = InequalityId.MAMANGAKIS_V2
        index, power = 4 * n - 9, 4
    target = v.prime(4 * n)
    cmp = compare_natural_power(
        lambda: v.primorial(index),
        target,
        power,
        log_x=lambda bits: v.log_primorial(index, bits),
        max_bits=max_precision_bits,
    )
    return _from_comparison(ineq, {"n": n, "variant": variant}, cmp, (Ordering.GREATER,))


def check_reich(
    n: int,
    k: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> CheckRecord:
    """primorial(n) > p_{n+k}**2."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    v = _view(source)
    target = v.prime(n + k)
    cmp = compare_natural_power(
        lambda: v.primorial(n),
        target,
        2,
        log_x=lambda bits: v.log_primorial(n, bits),
        max_bits=max_precision_bits,
    )
    return _from_comparison(
        InequalityId.REICH, {"n": n, "k": k}, cmp, (Ordering.GREATER,)
    )


def check_sandor(
    n: int,
    variant: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> CheckRecord:
    """Non-strict lower bounds on primorial(n) by sums of prime powers.

    Variant 1: >= primorial(n-1) + p_n + p_{p_n - 2} (n >= 2).
    Variant 2: >= p_{n+5}**2 + p_{n//2}**2 (n >= 2).
    Variant 3: >= p_{n+3}**3 + p_{n//3}**6 (n >= 3).
    """
    if variant not in (1, 2, 3):
        raise ValueError(f"variant must be 1, 2 or 3, got {variant}")
    min_n = 3 if variant == 3 else 2
    if n < min_n:
        raise ValueError(f"variant {variant} needs n >= {min_n}, got {n}")
    v = _view(source)
    lhs = v.primorial(n)
    if variant == 1:
        p_n = v.prime(n)
        rhs = v.primorial(n - 1) + p_n + v.prime(p_n - 2)
    elif variant == 2:
        rhs = v.prime(n + 5) ** 2 + v.prime(n // 2) ** 2
    else:
        rhs = v.prime(n + 3) ** 3 + v.prime(n // 3) ** 6
    cmp = compare_integers(lhs, rhs)
    ineq = (
        InequalityId.SANDOR_V1,
        InequalityId.SANDOR_V2,
        InequalityId.SANDOR_V3,
    )[variant - 1]
    return _from_comparison(
        ineq, {"n": n, "variant": variant}, cmp, (Ordering.GREATER, Ordering.EQUAL)
    )


def check_betts(
    k: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> CheckRecord:
    """(p_{k+1} - p_k)**2 < p_k * (primorial(k-1) - p_k).

    Cross-multiplied form of the gap bound; equivalent to the fractional
    statement because the prime gap is positive.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    v = _view(source)
    p_k = v.prime(k)
    gap = v.prime(k + 1) - p_k
    lhs = gap * gap
    rhs = p_k * (v.primorial(k - 1) - p_k)
    cmp = compare_integers(lhs, rhs)
    return _from_comparison(InequalityId.BETTS, {"k": k}, cmp, (Ordering.LESS,))


def check_rosser(
    x: int,
    side: str,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> CheckRecord:
    """Explicit two-sided prime-counting bounds at integer x.

    ``upper``: pi(x) < (125506/100000) * x / ln x.
    ``lower``: pi(x) > x / ln x.
    Both rearranged to pi(x) * ln x versus a rational, so one certified
    decision procedure serves both sides.
    """
    if side not in ("upper", "lower"):
        raise ValueError(f"side must be 'upper' or 'lower', got {side!r}")
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    v = _view(source)
    pi_x = v.count_upto(x)
    if side == "upper":
        inner = decide_rational_vs_rational_ln(
            pi_x, 1, x, ROSSER_UPPER_NUM * x, ROSSER_UPPER_DEN, max_precision_bits
        )
        # pi(x) * ln x is irrational (pi(x) >= 1), so the strict reverse
        # is exactly the negation.
        return CheckRecord(InequalityId.ROSSER_UPPER, {"x": x}, _negate(inner))
    verdict = decide_rational_vs_rational_ln(pi_x, 1, x, x, 1, max_precision_bits)
    return CheckRecord(InequalityId.ROSSER_LOWER, {"x": x}, verdict)


def check_posa_chain(
    n: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> CheckRecord:
    """2**p_{n+1} > p_{n+1}**(n/2), checked as 2**(2*p_{n+1}) > p_{n+1}**n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    v = _view(source)
    p_next = v.prime(n + 1)
    cmp = compare_power_power(2, 2 * p_next, p_next, n, max_bits=max_precision_bits)
    return _from_comparison(
        InequalityId.POSA_CHAIN, {"n": n}, cmp, (Ordering.GREATER,)
    )


def check_proof_helper(
    r: int,
    which: str,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> CheckRecord:
    """Arithmetic stepping stones used to push the ln-2 bound to all large r.

    A: 0.3*r >= pi(r) + 0.7, decided exactly as 3r >= 10*pi(r) + 7.
    B: (125506/10000)/ln r + 7/r < 3, decided by interval refinement.
    """
    if which not in ("A", "B"):
        raise ValueError(f"which must be 'A' or 'B', got {which!r}")
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if which == "A":
        v = _view(source)
        cmp = compare_integers(3 * r, 10 * v.count_upto(r) + 7)
        return _from_comparison(
            InequalityId.PROOF_HELPER_A,
            {"r": r},
            cmp,
            (Ordering.GREATER, Ordering.EQUAL),
        )
    seven_over_r = Fraction(7, r)
    bits = 0
    verdict = None
    for bits in _precision_steps(DEFAULT_START_BITS, max_precision_bits):
        enc = ln_interval(r, bits)
        assert enc.lo > 0
        val_lo = HELPER_B_CONST / enc.hi + seven_over_r
        val_hi = HELPER_B_CONST / enc.lo + seven_over_r
        if val_hi < 3:
            verdict = Verdict(Outcome.HOLDS, Method.INTERVAL, bits)
            break
        if val_lo > 3:
            verdict = Verdict(Outcome.FAILS, Method.INTERVAL, bits)
            break
    if verdict is None:
        verdict = Verdict(Outcome.UNDECIDED, Method.INTERVAL, bits)
    return CheckRecord(InequalityId.PROOF_HELPER_B, {"r": r}, verdict)


_prime_flags = bytearray()
_prime_flags_lock = threading.Lock()


def _ensure_prime_flags(limit: int) -> bytearray:
    global _prime_flags
    flags = _prime_flags
    if len(flags) > limit:
        return flags
    with _prime_flags_lock:
        flags = _prime_flags
        if len(flags) <= limit:
            size = max(1024, 2 * limit + 2)
            flags = bytearray(b"\x01") * size
            flags[0] = flags[1] = 0
            for p in range(2, math.isqrt(size - 1) + 1):
                if flags[p]:
                    flags[p * p :: p] = b"\x00" * len(range(p * p, size, p))
            _prime_flags = flags
    return flags


def coprime_witness(n: int) -> Optional[int]:
    """Smallest composite a with 1 < a < n and gcd(a, n) = 1, or None.

    The walk stops at the first composite coprime residue, which is at
    most the square of the least prime not dividing n, so single calls
    stay cheap even for large n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    flags = _ensure_prime_flags(1024)
    gcd = math.gcd
    for a in range(2, n):
        if gcd(a, n) == 1:
            if a >= len(flags):
                flags = _ensure_prime_flags(a)
            if not flags[a]:
                return a
    return None


def check_thirty(
    n: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> CheckRecord:
    """Every a with 1 < a < n coprime to n is prime (vacuous for n <= 2)."""
    witness = coprime_witness(n)
    outcome = Outcome.HOLDS if witness is None else Outcome.FAILS
    return CheckRecord(
        InequalityId.THIRTY_PROPERTY, {"n": n}, Verdict(outcome, Method.EXACT, 0)
    )


@lru_cache(maxsize=8)
def _seven_tenths_exceeds_ln2(max_bits: int) -> bool:
    # The global chain link 0.7 > ln 2, as 7 > 10 * ln 2.
    return decide_int_vs_int_times_ln2(7, 10, max_bits).outcome is Outcome.HOLDS


def _tenths_str(tenths: int) -> str:
    return f"{tenths // 10}.{tenths % 10}"


def table_row(
    r: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> TableRow:
    """One verification-table row: multiplier, prime, certified bounds.

    ``certified_lower`` is the 1-decimal floor of multiplier * ln(prime);
    precision escalates until both enclosure endpoints agree on the
    floor, so the digit string is certified rather than rounded.
    ``chain_ok`` certifies multiplier * ln(prime) > 0.7 * prime together
    with the global link 0.7 > ln 2.
    """
    if not 20 <= r <= 54:
        raise ValueError(f"r must be in [20, 54], got {r}")
    v = _view(source)
    prime = v.prime(r + 1)
    multiplier = r - v.count_upto(r)
    rhs = Fraction(7 * prime, 10)

    floor_tenths: Optional[int] = None
    chain: Optional[bool] = None
    enc = None
    for bits in _precision_steps(DEFAULT_START_BITS, max_precision_bits):
        enc = ln_interval(prime, bits).scale(multiplier)
        if floor_tenths is None:
            lo_floor = math.floor(10 * enc.lo)
            if lo_floor == math.floor(10 * enc.hi):
                floor_tenths = lo_floor
        if chain is None:
            if enc.lo > rhs:
                chain = True
            elif enc.hi < rhs:
                chain = False
        if floor_tenths is not None and chain is not None:
            break
    if floor_tenths is None:
        # Cap reached with the floor still straddling a tenth boundary;
        # the lower endpoint's floor is still a certified lower bound.
        floor_tenths = math.floor(10 * enc.lo)
    chain_ok = bool(chain) and _seven_tenths_exceeds_ln2(max_precision_bits)
    return TableRow(
        r=r,
        multiplier=multiplier,
        prime=prime,
        certified_lower=_tenths_str(floor_tenths),
        rhs_07=_tenths_str(7 * prime),
        chain_ok=chain_ok,
    )


@dataclass(frozen=True)
class Family:
    """Scan/CLI plumbing for one inequality family."""

    id: InequalityId
    index_name: str
    fixed_names: Tuple[str, ...]
    min_index: int
    run: Callable[[int, Dict[str, int], SourceLike, int], CheckRecord]


FAMILIES: Dict[InequalityId, Family] = {
    InequalityId.BONSE_POSA: Family(
        InequalityId.BONSE_POSA, "n", ("k",), 1,
        lambda i, f, s, b: check_bonse_posa(i, f["k"], source=s, max_precision_bits=b),
    ),
    InequalityId.THEOREM1: Family(
        InequalityId.THEOREM1, "r", (), 1,
        lambda i, f, s, b: check_theorem1(i, source=s, max_precision_bits=b),
    ),
    InequalityId.COROLLARY1: Family(
        InequalityId.COROLLARY1, "r", (), 1,
        lambda i, f, s, b: check_corollary1(i, source=s, max_precision_bits=b),
    ),
    InequalityId.COROLLARY2: Family(
        InequalityId.COROLLARY2, "r", (), 1,
        lambda i, f, s, b: check_corollary2(i, source=s, max_precision_bits=b),
    ),
    InequalityId.PANAITOPOL: Family(
        InequalityId.PANAITOPOL, "n", (), 1,
        lambda i, f, s, b: check_panaitopol(i, source=s, max_precision_bits=b),
    ),
    InequalityId.MAMANGAKIS_V1: Family(
        InequalityId.MAMANGAKIS_V1, "n", (), 1,
        lambda i, f, s, b: check_mamangakis(i, 1, source=s, max_precision_bits=b),
    ),
    InequalityId.MAMANGAKIS_V2: Family(
        InequalityId.MAMANGAKIS_V2, "n", (), 3,
        lambda i, f, s, b: check_mamangakis(i, 2, source=s, max_precision_bits=b),
    ),
    InequalityId.REICH: Family(
        InequalityId.REICH, "n", ("k",), 1,
        lambda i, f, s, b: check_reich(i, f["k"], source=s, max_precision_bits=b),
    ),
    InequalityId.SANDOR_V1: Family(
        InequalityId.SANDOR_V1, "n", (), 2,
        lambda i, f, s, b: check_sandor(i, 1, source=s, max_precision_bits=b),
    ),
    InequalityId.SANDOR_V2: Family(
        InequalityId.SANDOR_V2, "n", (), 2,
        lambda i, f, s, b: check_sandor(i, 2, source=s, max_precision_bits=b),
    ),
    InequalityId.SANDOR_V3: Family(
        InequalityId.SANDOR_V3, "n", (), 3,
        lambda i, f, s, b: check_sandor(i, 3, source=s, max_precision_bits=b),
    ),
    InequalityId.BETTS: Family(
        InequalityId.BETTS, "k", (), 2,
        lambda i, f, s, b: check_betts(i, source=s, max_precision_bits=b),
    ),
    InequalityId.ROSSER_UPPER: Family(
        InequalityId.ROSSER_UPPER, "x", (), 2,
        lambda i, f, s, b: check_rosser(i, "upper", source=s, max_precision_bits=b),
    ),
    InequalityId.ROSSER_LOWER: Family(
        InequalityId.ROSSER_LOWER, "x", (), 2,
        lambda i, f, s, b: check_rosser(i, "lower", source=s, max_precision_bits=b),
    ),
    InequalityId.POSA_CHAIN: Family(
        InequalityId.POSA_CHAIN, "n", (), 1,
        lambda i, f, s, b: check_posa_chain(i, source=s, max_precision_bits=b),
    ),
    InequalityId.PROOF_HELPER_A: Family(
        InequalityId.PROOF_HELPER_A, "r", (), 2,
        lambda i, f, s, b: check_proof_helper(i, "A", source=s, max_precision_bits=b),
    ),
    InequalityId.PROOF_HELPER_B: Family(
        InequalityId.PROOF_HELPER_B, "r", (), 2,
        lambda i, f, s, b: check_proof_helper(i, "B", source=s, max_precision_bits=b),
    ),
    InequalityId.THIRTY_PROPERTY: Family(
        InequalityId.THIRTY_PROPERTY, "n", (), 1,
        lambda i, f, s, b: check_thirty(i, source=s, max_precision_bits=b),
    ),
}
