"""Locating zeros of Z(t) and counting them.

Zeros are found as sign changes of Z on a grid and refined to 1e-9. The
count is checked against the smooth part of the Riemann-von Mangoldt formula;
since |S(t)| stays below 3 at every height reachable here, a residual above
that means the grid skipped a close pair and the range is rescanned finer.

Zeros are taken to be simple and on the critical line, so the number of
critical-line zeros and the number of all zeros coincide.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from ._roots import refine_brackets
from .core import DEFAULT_CONFIG, TWO_PI, EvalConfig, z_values
from .errors import IncompleteTable, InvalidBracket, PreconditionError

log = logging.getLogger(__name__)

ZERO_TOL = 1e-9
S_BOUND = 3.0
MAX_PASSES = 3
MAX_GAP = 10.0
SOURCES = ("computed", "ingested", "merged")


@dataclass
class ZeroTable:
    """Ordinates of zeros in ``(range_lo, range_hi]``, strictly increasing.

    ``first_index`` is the global index n of ``ordinates[0]`` (gamma_1 is the
    first zero above 0).
    """

    range_lo: float
    range_hi: float
    ordinates: np.ndarray = field(repr=False)
    first_index: int = 1
    complete: bool = False
    source: str = "computed"

    def __post_init__(self):
        self.ordinates = np.ascontiguousarray(self.ordinates, dtype=float).ravel()
        if not self.range_lo < self.range_hi:
            raise PreconditionError(f"empty range ({self.range_lo}, {self.range_hi}]")
        if self.source not in SOURCES:
            raise PreconditionError(f"unknown source {self.source!r}")
        if self.first_index < 1:
            raise PreconditionError("first_index must be >= 1")
        g = self.ordinates
        if g.size:
            if np.any(np.diff(g) <= 0):
                raise PreconditionError("ordinates must be strictly increasing")
            if g[0] <= self.range_lo or g[-1] > self.range_hi:
                raise PreconditionError("ordinates must lie in (range_lo, range_hi]")

    def __len__(self):
        return self.ordinates.size

    def __repr__(self):
        return (
            f"ZeroTable(({self.range_lo}, {self.range_hi}], {len(self)} zeros, "
            f"first_index={self.first_index}, complete={self.complete}, source={self.source!r})"
        )

    def count_upto(self, t):
        """N(t) for a table starting at 0; vectorised."""
        return self.first_index - 1 + np.searchsorted(self.ordinates, t, side="right")

    def require(self, upto: float):
        """Raise unless the table is complete from 0 through ``upto``."""
        if not (self.complete and self.range_lo == 0 and self.range_hi >= upto):
            raise IncompleteTable(
                f"need a complete table over (0, {upto}], have {self!r}"
            )


@dataclass(frozen=True)
class CompletenessReport:
    expected_count: float
    found_count: int
    max_abs_s: float
    refined_passes: int
    residual: float
    passed: bool


def count_main_term(T):
    """Smooth part of N(T): (T/2pi) log(T/2pi) - T/2pi + 7/8."""
    T = np.asarray(T, dtype=float)
    if np.any(T <= 0):
        raise PreconditionError("count_main_term needs T > 0")
    x = T / TWO_PI
    out = x * np.log(x) - x + 0.875
    return float(out) if out.ndim == 0 else out


def default_grid_step(t_hi: float) -> float:
    """Eight samples per mean zero gap at the top of the range."""
    return TWO_PI / (8.0 * max(math.log(t_hi / TWO_PI), 1.0)) if t_hi > 0 else 1.0


def _z_only(cfg):
    def f(x, idx=None):
        return z_values(x, cfg)[0]

    return f


def refine_zero(lo: float, hi: float, cfg: EvalConfig = DEFAULT_CONFIG, tol: float = ZERO_TOL):
    """Zero of Z in the bracket ``[lo, hi]`` to within ``tol``."""
    zlo, zhi = z_values(np.array([lo, hi], dtype=float), cfg)[0]
    if not zlo * zhi <= 0 or (zlo == 0 and zhi == 0):
        raise InvalidBracket(f"Z({lo})={zlo:.3g} and Z({hi})={zhi:.3g} share a sign")
    return float(refine_brackets(_z_only(cfg), [lo], [hi], [zlo], [zhi], tol)[0])


def _grid(t_lo, t_hi, step):
    k = max(1, int(math.ceil((t_hi - t_lo) / step)))
    return np.linspace(t_lo, t_hi, k + 1)


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _hidden_pairs(grid, z, cfg):
    """Brackets for pairs of zeros that fall between two same-sign samples.

    Every local minimum of |Z| on the grid without a sign change on either
    side is searched (golden section on sign * Z over the two adjacent cells);
    if the minimum goes through zero, the two halves bracket a pair of zeros.
    """
    k = np.arange(1, grid.size - 1)
    same = (z[k - 1] * z[k] > 0) & (z[k] * z[k + 1] > 0)
    dip = (np.abs(z[k]) < np.abs(z[k - 1])) & (np.abs(z[k]) < np.abs(z[k + 1]))
    k = k[same & dip]
    if k.size == 0:
        return np.empty((0, 2)), np.empty((0, 2))
    sgn = np.sign(z[k])
    a, b = grid[k - 1].copy(), grid[k + 1].copy()
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = sgn * z_values(c, cfg)[0]
    fd = sgn * z_values(d, cfg)[0]
    best_t, best_f = np.where(fc < fd, c, d), np.minimum(fc, fd)
    live = best_f > 0
    for _ in range(60):
        idx = np.flatnonzero(live)
        if idx.size == 0 or float((b - a)[idx].max()) < 1e-7:
            break
        go_left = fc[idx] < fd[idx]
        L, R = idx[go_left], idx[~go_left]
        b[L], d[L], fd[L] = d[L], c[L], fc[L]
        c[L] = b[L] - _GOLDEN * (b[L] - a[L])
        a[R], c[R], fc[R] = c[R], d[R], fd[R]
        d[R] = a[R] + _GOLDEN * (b[R] - a[R])
        new_t = np.where(go_left, c[idx], d[idx])
        new_f = sgn[idx] * z_values(new_t, cfg)[0]
        fc[L] = new_f[go_left]
        fd[R] = new_f[~go_left]
        better = new_f < best_f[idx]
        best_t[idx[better]] = new_t[better]
        best_f[idx[better]] = new_f[better]
        live[idx[new_f <= 0]] = False
    found = best_f < 0
    k, t_min, f_min = k[found], best_t[found], best_f[found] * sgn[found]
    left = np.column_stack([grid[k - 1], t_min]), np.column_stack([z[k - 1], f_min])
    right = np.column_stack([t_min, grid[k + 1]]), np.column_stack([f_min, z[k + 1]])
    return np.concatenate([left[0], right[0]]), np.concatenate([left[1], right[1]])


def _zeros_on_grid(grid, cfg):
    """Refined zeros of Z bracketed by consecutive points of ``grid``."""
    z = z_values(grid, cfg)[0]
    on_grid = grid[1:][z[1:] == 0]
    i = np.flatnonzero(z[:-1] * z[1:] < 0)
    pair_t, pair_z = _hidden_pairs(grid, z, cfg)
    lo = np.concatenate([grid[i], pair_t[:, 0]])
    hi = np.concatenate([grid[i + 1], pair_t[:, 1]])
    zlo = np.concatenate([z[i], pair_z[:, 0]])
    zhi = np.concatenate([z[i + 1], pair_z[:, 1]])
    roots = refine_brackets(_z_only(cfg), lo, hi, zlo, zhi, ZERO_TOL)
    return np.union1d(roots, on_grid)


def _scan_once(t_lo, t_hi, cfg, step, jobs):
    grid = _grid(t_lo, t_hi, step)
    if jobs <= 1 or grid.size < 4 * jobs:
        roots = _zeros_on_grid(grid, cfg)
    else:
        # adjacent pieces share an endpoint so no bracket is lost
        cuts = np.linspace(0, grid.size - 1, jobs + 1).astype(int)
        pieces = [grid[a : b + 1] for a, b in zip(cuts[:-1], cuts[1:])]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_zeros_on_grid, pieces, [cfg] * len(pieces)))
        roots = np.unique(np.concatenate(parts))
    return roots[(roots > t_lo) & (roots <= t_hi)]


def first_index_estimate(t_lo):
    return 1 if t_lo == 0 else int(math.floor(count_main_term(t_lo) + 0.5)) + 1


def scan_zeros(
    t_lo: float,
    t_hi: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    grid_step: float | None = None,
    jobs: int = 1,
    s_bound: float = S_BOUND,
) -> ZeroTable:
    """All zeros of Z in ``(t_lo, t_hi]``.

    Runs up to three passes, dividing the grid step by four each time the
    completeness check fails. A table that never passes is returned with
    ``complete=False``.
    """
    if not 0 <= t_lo < t_hi:
        raise PreconditionError(f"need 0 <= t_lo < t_hi, got ({t_lo}, {t_hi}]")
    step = default_grid_step(t_hi) if grid_step is None else float(grid_step)
    if not step > 0:
        raise PreconditionError(f"grid_step must be positive, got {grid_step}")
    table = None
    for npass in range(1, MAX_PASSES + 1):
        roots = _scan_once(t_lo, t_hi, cfg, step, jobs)
        table = ZeroTable(t_lo, t_hi, roots, first_index=first_index_estimate(t_lo))
        report = verify_completeness(table, s_bound=s_bound, passes=npass)
        if report.passed:
            table.complete = True
            return table
        log.info(
            "pass %d over (%g, %g]: residual %.3f, max|S| %.3f; rescanning at step %g",
            npass, t_lo, t_hi, report.residual, report.max_abs_s, step / 4,
        )
        step /= 4
    log.warning("zero scan over (%g, %g] failed the completeness check", t_lo, t_hi)
    return table


def verify_completeness(
    table: ZeroTable, s_bound: float = S_BOUND, passes: int = 1
) -> CompletenessReport:
    """Compare the zero count with the Riemann-von Mangoldt main term.

    For a table starting at 0 the check is ``|found - main(T)| <= s_bound``
    together with ``|S| <= s_bound`` just after and just before every zero.
    A table over ``(a, b]`` with ``a > 0`` can only check the count
    difference, against ``2 * s_bound``. Gaps of 10 or more fail outright.
    """
    g = table.ordinates
    lo, hi = table.range_lo, table.range_hi
    found = int(g.size)
    if lo == 0:
        expected = count_main_term(hi)
        tol = s_bound
        n = np.arange(table.first_index, table.first_index + found, dtype=float)
        # S jumps by +1 at each zero and decreases in between, so its extremes
        # sit on either side of the zeros and at the top of the range
        main_g = count_main_term(g) if found else np.empty(0)
        extremes = np.concatenate([n - main_g, n - 1 - main_g, [found - expected]])
        max_abs_s = float(np.abs(extremes).max())
    else:
        expected = count_main_term(hi) - count_main_term(lo)
        tol = 2 * s_bound
        max_abs_s = float("nan")
    residual = found - expected
    gaps_ok = found < 2 or float(np.diff(g).max()) < MAX_GAP
    ok = abs(residual) <= tol and gaps_ok and not (max_abs_s > s_bound)
    return CompletenessReport(
        expected_count=float(expected),
        found_count=found,
        max_abs_s=max_abs_s,
        refined_passes=passes,
        residual=float(residual),
        passed=bool(ok),
    )


def s_value(T, table: ZeroTable):
    """S(T) = N(T) - main(T) from a complete table; vectorised over ``T``."""
    T_arr = np.asarray(T, dtype=float)
    table.require(float(T_arr.max()) if T_arr.size else 0.0)
    out = table.count_upto(T_arr) - count_main_term(T_arr)
    return float(out) if np.ndim(out) == 0 else out


def merge_tables(a: ZeroTable, b: ZeroTable, tol: float = 1e-8) -> ZeroTable:
    """Ordered union of two tables over overlapping or abutting ranges."""
    if a.range_lo > b.range_lo:
        a, b = b, a
    if b.range_lo > a.range_hi:
        raise PreconditionError("tables leave a gap between their ranges")
    g = np.concatenate([a.ordinates, b.ordinates])
    g.sort(kind="stable")
    keep = np.ones(g.size, dtype=bool)
    keep[1:] = np.diff(g) > tol
    return ZeroTable(
        range_lo=a.range_lo,
        range_hi=max(a.range_hi, b.range_hi),
        ordinates=g[keep],
        first_index=a.first_index,
        complete=a.complete and b.complete,
        source="merged",
    )


def with_completeness(table: ZeroTable, s_bound: float = S_BOUND) -> ZeroTable:
    """Copy of ``table`` whose ``complete`` flag reflects the check."""
    return replace(table, complete=verify_completeness(table, s_bound).passed)
