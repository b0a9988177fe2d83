"""Range sweeps over the inequality catalog.

Scans collect failure sets and the empirical stable start (the smallest
index from which a family holds through the end of the scan); threshold
miners wrap scans for the two families whose classical statements only
assert that some threshold exists.  The 30-property search lives here
too since it is a sweep rather than a single check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .catalog import FAMILIES, InequalityId, SourceLike, coprime_witness
from .exactcmp import DEFAULT_MAX_BITS, Outcome

DEFAULT_SCAN_LIMIT = 2000


class NoStableStartError(RuntimeError):
    """The scanned family still fails (or is undecided) at the scan end."""


@dataclass(frozen=True)
class ThresholdReport:
    """Failure set and empirical stable start of one family over a range.

    ``stable_start`` is the smallest index from which every scanned
    index holds; it is None exactly when the final index fails or is
    undecided.  Isolated early holds (a hold below ``stable_start``)
    are visible as gaps in ``failures``, not as a separate field.
    """

    id: InequalityId
    fixed_params: Dict[str, int]
    scan_from: int
    scan_to: int
    failures: List[int] = field(default_factory=list)
    undecided: List[int] = field(default_factory=list)
    stable_start: Optional[int] = None


def scan_family(
    ineq: InequalityId,
    fixed_params: Optional[Dict[str, int]] = None,
    scan_from: int = 1,
    scan_to: int = DEFAULT_SCAN_LIMIT,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> ThresholdReport:
    """Run one catalog check at every index in [scan_from, scan_to].

    The prime table grows automatically (through the given or the shared
    PrimeSource); passing a fixed PrimeTable instead propagates
    TableGrowthRequired when the scan outruns it.
    """
    family = FAMILIES.get(ineq)
    if family is None:
        raise ValueError(f"no scannable family for id {ineq!r}")
    fixed = dict(fixed_params or {})
    if set(fixed) != set(family.fixed_names):
        need = ", ".join(family.fixed_names) if family.fixed_names else "none"
        raise ValueError(f"{ineq.value} takes fixed parameters: {need}")
    if not 1 <= scan_from <= scan_to:
        raise ValueError("need 1 <= scan_from <= scan_to")
    if scan_from < family.min_index:
        raise ValueError(
            f"{ineq.value} is defined from {family.index_name} = {family.min_index}"
        )
    failures: List[int] = []
    undecided: List[int] = []
    for index in range(scan_from, scan_to + 1):
        record = family.run(index, fixed, source, max_precision_bits)
        if record.outcome is Outcome.FAILS:
            failures.append(index)
        elif record.outcome is Outcome.UNDECIDED:
            undecided.append(index)
    last_bad = max(
        failures[-1] if failures else 0,
        undecided[-1] if undecided else 0,
    )
    if last_bad == 0:
        stable_start: Optional[int] = scan_from
    elif last_bad < scan_to:
        stable_start = last_bad + 1
    else:
        stable_start = None
    return ThresholdReport(
        id=ineq,
        fixed_params=fixed,
        scan_from=scan_from,
        scan_to=scan_to,
        failures=failures,
        undecided=undecided,
        stable_start=stable_start,
    )


def posa_threshold(
    k: int,
    limit: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> int:
    """Empirical start n0 with primorial(n) > p_{n+1}**k on [n0, limit]."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    report = scan_family(
        InequalityId.BONSE_POSA,
        {"k": k},
        1,
        limit,
        source=source,
        max_precision_bits=max_precision_bits,
    )
    if report.stable_start is None:
        raise NoStableStartError(
            f"bonse_posa with k={k} still fails at the scan end {limit}"
        )
    return report.stable_start


def reich_threshold(
    k: int,
    limit: int,
    *,
    source: SourceLike = None,
    max_precision_bits: int = DEFAULT_MAX_BITS,
) -> int:
    """Empirical start n0 with primorial(n) > p_{n+k}**2 on [n0, limit]."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    report = scan_family(
        InequalityId.REICH,
        {"k": k},
        1,
        limit,
        source=source,
        max_precision_bits=max_precision_bits,
    )
    if report.stable_start is None:
        raise NoStableStartError(
            f"reich with k={k} still fails at the scan end {limit}"
        )
    return report.stable_start


def thirty_property(limit: int) -> List[int]:
    """All N <= limit whose proper coprime residues are all prime.

    N = 1 and N = 2 qualify vacuously.  The walk for each N exits at its
    first composite coprime residue, which keeps the full sweep linear
    in practice (the witness is bounded by the square of the least prime
    not dividing N).
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    return [n for n in range(1, limit + 1) if coprime_witness(n) is None]
