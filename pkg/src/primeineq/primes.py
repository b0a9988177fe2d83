"""Sieve-backed prime tables.

A :class:`PrimeTable` is an immutable snapshot produced by a segmented
sieve of Eratosthenes.  It answers nth-prime and prime-counting queries,
memoises primorials, and caches certified enclosures of log-primorials
(Chebyshev theta prefix sums) per working precision.  Queries outside a
table's range raise :class:`TableGrowthRequired`; a :class:`PrimeSource`
wraps a table and grows it on demand so long-running scans never have to
guess their final range up front.
"""

from __future__ import annotations

import bisect
import math
import threading
from fractions import Fraction
from typing import List, Optional, Tuple

from .exactcmp import MIN_PRECISION_BITS, RealInterval, _ln_endpoints

DEFAULT_PRIMORIAL_CAP = 5000
DEFAULT_MAX_SIEVE_BYTES = 1 << 30
_SEGMENT = 1 << 20
_SMALL_PRIMES = (0, 2, 3, 5, 7, 11)  # p_1 .. p_5, 1-based
_ZERO_F = Fraction(0)


class SieveLimitError(RuntimeError):
    """Requested sieve span exceeds the configured memory cap."""


class TableGrowthRequired(LookupError):
    """Query lies beyond the table; carries the bound that would satisfy it."""

    def __init__(self, *, min_value: int = 0, min_index: int = 0):
        self.min_value = min_value
        self.min_index = min_index
        parts = []
        if min_value:
            parts.append(f"values up to {min_value}")
        if min_index:
            parts.append(f"at least {min_index} primes")
        super().__init__("table too small, need " + " and ".join(parts))


def _small_sieve(limit: int) -> List[int]:
    if limit < 2:
        return []
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            step = len(range(p * p, limit + 1, p))
            flags[p * p :: p] = b"\x00" * step
    return [i for i, f in enumerate(flags) if f]


def _extend_primes(primes: List[int], old_limit: int, new_limit: int) -> List[int]:
    """All primes <= new_limit, reusing those already known <= old_limit."""
    if new_limit <= old_limit:
        return list(primes)
    if new_limit <= _SEGMENT:
        return _small_sieve(new_limit)
    base = _small_sieve(math.isqrt(new_limit))
    out = list(primes) if old_limit >= 2 else []
    lo = max(old_limit + 1, 2)
    while lo <= new_limit:
        hi = min(lo + _SEGMENT - 1, new_limit)
        seg = bytearray(b"\x01") * (hi - lo + 1)
        for p in base:
            if p * p > hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            seg[start - lo :: p] = b"\x00" * len(range(start, hi + 1, p))
        out.extend(i for i, f in enumerate(seg, lo) if f)
        lo = hi + 1
    return out


def _index_limit_estimate(n: int) -> int:
    """Upper bound for the nth prime; exact for n <= 5."""
    if n <= 0:
        return 0
    if n <= 5:
        return _SMALL_PRIMES[n]
    ln_n = math.log(n)
    return int(n * (ln_n + math.log(ln_n))) + 1


class PrimeTable:
    """Immutable store of consecutive primes with derived caches.

    ``primes[0] == 2`` and indexing into the mathematical sequence is
    1-based: p_n is ``primes[n - 1]``.  Instances should be built via
    :func:`build_table` / :func:`grow_table`.
    """

    __slots__ = (
        "limit_value",
        "primes",
        "count",
        "primorial_cap",
        "max_sieve_bytes",
        "_primorials",
        "_theta_cache",
        "_lock",
    )

    def __init__(
        self,
        primes: List[int],
        limit_value: int,
        *,
        primorial_cap: int = DEFAULT_PRIMORIAL_CAP,
        max_sieve_bytes: int = DEFAULT_MAX_SIEVE_BYTES,
    ):
        self.primes = primes
        self.limit_value = limit_value
        self.count = len(primes)
        self.primorial_cap = primorial_cap
        self.max_sieve_bytes = max_sieve_bytes
        self._primorials: List[int] = [1]
        # precision bits -> (lo prefix sums, hi prefix sums), grown lazily
        self._theta_cache: dict[int, Tuple[List[Fraction], List[Fraction]]] = {}
        self._lock = threading.Lock()


def _check_span(limit: int, max_sieve_bytes: int) -> None:
    if limit + 1 > max_sieve_bytes:
        raise SieveLimitError(
            f"sieving to {limit} needs {limit + 1} flag bytes, "
            f"cap is {max_sieve_bytes}"
        )


def build_table(
    min_value: int = 0,
    min_index: int = 0,
    *,
    primorial_cap: int = DEFAULT_PRIMORIAL_CAP,
    max_sieve_bytes: int = DEFAULT_MAX_SIEVE_BYTES,
) -> PrimeTable:
    """Sieve a table covering all primes <= min_value and the first
    min_index primes, whichever needs more."""
    if min_value < 2 and min_index < 1:
        raise ValueError("need min_value >= 2 or min_index >= 1")
    limit = max(min_value, _index_limit_estimate(min_index), 2)
    _check_span(limit, max_sieve_bytes)
    primes = _extend_primes([], 1, limit)
    while len(primes) < min_index:
        limit *= 2
        _check_span(limit, max_sieve_bytes)
        primes = _extend_primes(primes, limit // 2, limit)
    return PrimeTable(
        primes,
        limit,
        primorial_cap=primorial_cap,
        max_sieve_bytes=max_sieve_bytes,
    )


def grow_table(
    table: PrimeTable,
    min_value: int = 0,
    min_index: int = 0,
) -> PrimeTable:
    """Fresh table extending ``table``; the original stays valid.

    The new limit at least doubles, so repeated growth is amortised.
    The extension is consistent: the old prime list is a prefix of the
    new one.
    """
    limit = max(
        2 * table.limit_value,
        min_value,
        _index_limit_estimate(min_index),
    )
    _check_span(limit, table.max_sieve_bytes)
    primes = _extend_primes(table.primes, table.limit_value, limit)
    while len(primes) < min_index:
        limit *= 2
        _check_span(limit, table.max_sieve_bytes)
        primes = _extend_primes(primes, limit // 2, limit)
    grown = PrimeTable(
        primes,
        limit,
        primorial_cap=table.primorial_cap,
        max_sieve_bytes=table.max_sieve_bytes,
    )
    with table._lock:
        grown._primorials = list(table._primorials)
        grown._theta_cache = {
            bits: (list(lo), list(hi))
            for bits, (lo, hi) in table._theta_cache.items()
        }
    return grown


def nth_prime(table: PrimeTable, n: int) -> int:
    """p_n, 1-based: nth_prime(t, 1) == 2."""
    if n < 1:
        raise ValueError(f"prime index must be >= 1, got {n}")
    if n > table.count:
        raise TableGrowthRequired(min_index=n)
    return table.primes[n - 1]


def prime_count(table: PrimeTable, x: int) -> int:
    """pi(x), the number of primes <= x."""
    if x < 0:
        raise ValueError(f"prime_count requires x >= 0, got {x}")
    if x > table.limit_value:
        raise TableGrowthRequired(min_value=x)
    return bisect.bisect_right(table.primes, x)


def primorial(table: PrimeTable, n: int) -> int:
    """Product of the first n primes; primorial(t, 0) == 1.

    Results up to the table's primorial cap are memoised; larger ones
    are computed from the capped prefix without being stored.
    """
    if n < 0:
        raise ValueError(f"primorial index must be >= 0, got {n}")
    if n > table.count:
        raise TableGrowthRequired(min_index=n)
    memo = table._primorials
    cap = table.primorial_cap
    with table._lock:
        target = min(n, cap)
        while len(memo) <= target:
            memo.append(memo[-1] * table.primes[len(memo) - 1])
        if n <= cap:
            return memo[n]
        head = memo[cap]
    return head * math.prod(table.primes[cap:n])


def log_primorial_interval(
    table: PrimeTable, n: int, precision_bits: int
) -> RealInterval:
    """Certified enclosure of ln(primorial(n)) via per-prime enclosures.

    Endpoints are exact Fraction sums of directed-rounded per-prime
    logarithms, cached as prefix sums per precision, so scan-shaped
    workloads pay the transcendental cost once per prime.
    """
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if precision_bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}")
    if n > table.count:
        raise TableGrowthRequired(min_index=n)
    with table._lock:
        los, his = table._theta_cache.setdefault(
            precision_bits, ([_ZERO_F], [_ZERO_F])
        )
        while len(los) <= n:
            lo, hi = _ln_endpoints(table.primes[len(los) - 1], precision_bits)
            los.append(los[-1] + lo)
            his.append(his[-1] + hi)
        return RealInterval(los[n], his[n], precision_bits)


class PrimeSource:
    """Mutable holder of a growing PrimeTable.

    ``ensure`` returns a table satisfying the requested bounds, growing
    the held table when needed.  Tables already handed out stay valid
    because growth replaces rather than mutates.
    """

    def __init__(self, table: Optional[PrimeTable] = None):
        self._table = table if table is not None else build_table(min_value=4096)
        self._lock = threading.Lock()

    @property
    def table(self) -> PrimeTable:
        return self._table

    def ensure(self, *, min_value: int = 0, min_index: int = 0) -> PrimeTable:
        t = self._table
        if t.limit_value >= min_value and t.count >= min_index:
            return t
        with self._lock:
            t = self._table
            if t.limit_value < min_value or t.count < min_index:
                self._table = grow_table(t, min_value, min_index)
            return self._table
