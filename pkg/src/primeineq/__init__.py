"""Certified verification toolkit for inequalities about products and
powers of primes.

Verdicts are never backed by bare floating point: integer forms are
settled exactly, logarithmic forms by directed-rounding interval
enclosures that escalate precision and report Undecided at the cap.
"""

__version__ = "0.1.0"

from .exactcmp import (
    DEFAULT_MAX_BITS,
    DEFAULT_START_BITS,
    Comparison,
    Method,
    Natural,
    Ordering,
    Outcome,
    RealInterval,
    Verdict,
    compare_integers,
    compare_natural_power,
    compare_power_power,
    decide_int_vs_int_times_ln2,
    decide_rational_vs_rational_ln,
    ln_interval,
)
from .primes import (
    PrimeSource,
    PrimeTable,
    SieveLimitError,
    TableGrowthRequired,
    build_table,
    grow_table,
    log_primorial_interval,
    nth_prime,
    prime_count,
    primorial,
)
from .catalog import (
    FAMILIES,
    TABULATED_MULTIPLIERS,
    CheckRecord,
    InequalityId,
    TableRow,
    check_betts,
    check_bonse_posa,
    check_corollary1,
    check_corollary2,
    check_mamangakis,
    check_panaitopol,
    check_posa_chain,
    check_proof_helper,
    check_reich,
    check_rosser,
    check_sandor,
    check_theorem1,
    check_thirty,
    coprime_witness,
    default_source,
    table_row,
)
from .scan import (
    DEFAULT_SCAN_LIMIT,
    NoStableStartError,
    ThresholdReport,
    posa_threshold,
    reich_threshold,
    scan_family,
    thirty_property,
)

__all__ = [
    "__version__",
    # exactcmp
    "DEFAULT_MAX_BITS",
    "DEFAULT_START_BITS",
    "Comparison",
    "Method",
    "Natural",
    "Ordering",
    "Outcome",
    "RealInterval",
    "Verdict",
    "compare_integers",
    "compare_natural_power",
    "compare_power_power",
    "decide_int_vs_int_times_ln2",
    "decide_rational_vs_rational_ln",
    "ln_interval",
    # primes
    "PrimeSource",
    "PrimeTable",
    "SieveLimitError",
    "TableGrowthRequired",
    "build_table",
    "grow_table",
    "log_primorial_interval",
    "nth_prime",
    "prime_count",
    "primorial",
    # catalog
    "FAMILIES",
    "TABULATED_MULTIPLIERS",
    "CheckRecord",
    "InequalityId",
    "TableRow",
    "check_betts",
    "check_bonse_posa",
    "check_corollary1",
    "check_corollary2",
    "check_mamangakis",
    "check_panaitopol",
    "check_posa_chain",
    "check_proof_helper",
    "check_reich",
    "check_rosser",
    "check_sandor",
    "check_theorem1",
    "check_thirty",
    "coprime_witness",
    "default_source",
    "table_row",
    # scan
    "DEFAULT_SCAN_LIMIT",
    "NoStableStartError",
    "ThresholdReport",
    "posa_threshold",
    "reich_threshold",
    "scan_family",
    "thirty_property",
]
