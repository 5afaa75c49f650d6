"""The Riemann zeta function on the critical line, its zeros, and their statistics.

Modules:

- ``core``: theta(t), Z(t) and zeta(1/2 + it) by the Riemann-Siegel formula,
  with an Euler-Maclaurin evaluator as an independent check.
- ``zeros``: zero location, N(T), S(T) and the completeness check.
- ``values``: measures of small-value sets, the lognormal law, moments.
- ``gaps``: zero-gap sums and counts, the gap-dominated set, pair correlation.
- ``storage``: zero-table files and caching.
- ``report``, ``cli``, ``acceptance``: output, command line, reproduction checks.
"""

from .core import DEFAULT_CONFIG, EvalConfig, ZetaSample, em_zeta, theta, z_function, z_values, zeta_half
from .errors import (
    ChecksumMismatch,
    DegenerateGrid,
    IncompleteTable,
    InvalidBracket,
    NonMonotoneInput,
    OutOfWindow,
    ParseError,
    PreconditionError,
    StepTooCoarse,
    UnresolvedInterval,
    ZeroFileError,
    ZetalineError,
)
from .gaps import (
    abd_counts,
    ab_measure,
    gap_power_sum,
    gap_report,
    gap_threshold_count,
    gaps,
    montgomery_integral,
    pair_correlation,
    starred_gap_sum,
)
from .storage import cross_check, load_or_scan, load_zero_table, save_zero_table
from .values import (
    band_measure,
    clt_distribution,
    level_set_measure,
    phi,
    sample_grid,
    selberg_moment,
    small_exponent_integral,
    s_diff_moment,
)
from .zeros import (
    ZeroTable,
    count_main_term,
    merge_tables,
    refine_zero,
    s_value,
    scan_zeros,
    verify_completeness,
)

__version__ = "0.1.0"
