"""Statistics of gaps between consecutive zeros.

Everything here takes a complete ``ZeroTable`` and a height T. The gap of
gamma_n is gamma_{n+1} - gamma_n, defined for every gamma_n <= T, so the
table must reach past T (by ``GAP_MARGIN``, more than any gap seen at these
heights).

Zeros are taken to be simple, so the count of critical-line zeros N_0(T)
equals N(T) and multiplicities are all 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad

from ._levels import measure_below
from .core import DEFAULT_CONFIG, TWO_PI, EvalConfig, z_values
from .errors import PreconditionError, StepTooCoarse
from .values import GridSample, MeasureEstimate, default_measure_step, sample_grid
from .zeros import ZeroTable

GAP_MARGIN = 10.0
MAX_SAMPLES = 64
MAX_REL_TOL = 1e-6
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class GapReport:
    T: float
    gaps: np.ndarray = field(repr=False)
    normalized_gaps: np.ndarray = field(repr=False)
    power_sums: dict = field(default_factory=dict)
    a_count: int | None = None
    b_count: int | None = None
    d_count: int | None = None
    n0_count: int | None = None


@dataclass(frozen=True)
class PairCorrelationReport:
    T: float
    alpha_grid: np.ndarray = field(repr=False)
    empirical: np.ndarray = field(repr=False)
    gue_prediction: np.ndarray = field(repr=False)
    window_scale: float
    n_zeros: int

    @property
    def max_deviation(self):
        return float(np.max(np.abs(self.empirical - self.gue_prediction)))


@dataclass(frozen=True)
class ABMeasure:
    """mu(A(T)) and mu(B(T)) over (gamma_1, T]; ``excluded`` is the length of (0, gamma_1]."""

    a: MeasureEstimate
    b: MeasureEstimate
    excluded: float

    def __iter__(self):
        return iter((self.a, self.b))


@dataclass(frozen=True)
class ABDCounts:
    A: int
    B: int
    D: int
    N0: int


@dataclass(frozen=True)
class StarredSum:
    """Gap sums split by whether max |zeta| on the gap exceeds the gap."""

    T: float
    threshold: float
    value: float
    count: int
    complement: float
    complement_count: int
    threshold_vacuous: bool


def _gap_arrays(table: ZeroTable, T: float):
    table.require(T + GAP_MARGIN)
    g = table.ordinates
    n = int(np.searchsorted(g, T, side="right"))
    if n and n >= g.size:
        raise PreconditionError(f"no zero above T={T} in {table!r}")
    return g[:n], g[1 : n + 1] - g[:n]


def gaps(table: ZeroTable, T: float) -> GapReport:
    """Raw and normalised gaps of every gamma_n <= T."""
    start, gap = _gap_arrays(table, T)
    return GapReport(
        T=float(T), gaps=gap, normalized_gaps=gap * np.log(start / TWO_PI) / TWO_PI
    )


def gap_threshold_count(table: ZeroTable, T: float, lam: float, mode: str = "at_least") -> int:
    """Number of gamma_n <= T whose gap is >= lam/log T (or <= for ``at_most``)."""
    if not lam >= 0:
        raise PreconditionError(f"lambda must be >= 0, got {lam}")
    _, gap = _gap_arrays(table, T)
    thr = lam / math.log(T)
    if mode == "at_least":
        return int(np.count_nonzero(gap >= thr))
    if mode == "at_most":
        return int(np.count_nonzero(gap <= thr))
    raise PreconditionError(f"mode must be 'at_least' or 'at_most', got {mode!r}")


def gap_power_sum(table: ZeroTable, T: float, alpha: float) -> float:
    """Sum over gamma_n <= T of (gamma_{n+1} - gamma_n)^alpha."""
    if not alpha >= 1:
        raise PreconditionError(f"alpha must be >= 1, got {alpha}")
    _, gap = _gap_arrays(table, T)
    return float(np.sum(gap**alpha))


def fujii_bound(T: float) -> float:
    """9 * 2 pi T / log(T / 2 pi), the bound on the sum of squared gaps."""
    return 9.0 * TWO_PI * T / math.log(T / TWO_PI)


def interval_maxima(
    table: ZeroTable,
    T: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    samples: int = MAX_SAMPLES,
    rel_tol: float = MAX_REL_TOL,
):
    """max |Z| on [gamma_n, gamma_{n+1}] for every gamma_n <= T.

    Each gap is sampled at ``samples`` interior points; the largest sample is
    then polished by golden-section search on its two neighbouring cells
    until the bracket is below ``rel_tol`` times the gap.
    """
    start, gap = _gap_arrays(table, T)
    if start.size == 0:
        return np.empty(0)
    frac = np.arange(1, samples + 1) / (samples + 1)
    t = start[:, None] + gap[:, None] * frac
    az = np.abs(z_values(t.ravel(), cfg)[0]).reshape(t.shape)
    j = np.argmax(az, axis=1)
    best = az[np.arange(start.size), j]
    h = gap / (samples + 1)
    lo = start + h * j
    hi = start + h * (j + 2)
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1 = np.abs(z_values(x1, cfg)[0])
    f2 = np.abs(z_values(x2, cfg)[0])
    for _ in range(200):
        if np.all(hi - lo <= rel_tol * gap):
            break
        # keep [lo, x2] when f1 >= f2, else [x1, hi]; one new probe per round
        left = f1 >= f2
        lo, hi = np.where(left, lo, x1), np.where(left, x2, hi)
        x1, x2, f1, f2 = (
            np.where(left, hi - _GOLDEN * (hi - lo), x2),
            np.where(left, x1, lo + _GOLDEN * (hi - lo)),
            np.where(left, 0.0, f2),
            np.where(left, f1, 0.0),
        )
        probe = np.where(left, x1, x2)
        fp = np.abs(z_values(probe, cfg)[0])
        f1 = np.where(left, fp, f1)
        f2 = np.where(left, f2, fp)
    return np.maximum(best, np.maximum(f1, f2))


def abd_counts(
    table: ZeroTable, T: float, cfg: EvalConfig = DEFAULT_CONFIG, maxima=None
) -> ABDCounts:
    """A(T), B(T) = N_0(T) - A(T), D(T) and N_0(T).

    A counts gamma_n <= T whose gap dominates max |zeta| on it; D is the same
    count restricted to strictly increasing neighbours, which is every pair
    for a table of simple zeros.
    """
    start, gap = _gap_arrays(table, T)
    mx = interval_maxima(table, T, cfg) if maxima is None else np.asarray(maxima)
    dominated = mx <= gap
    a = int(np.count_nonzero(dominated))
    d = int(np.count_nonzero(dominated & (gap > 0)))
    n0 = int(start.size)
    return ABDCounts(A=a, B=n0 - a, D=d, N0=n0)


def starred_threshold(T: float) -> float:
    """(log log T)^6 / log T, the gap cap in the starred sum."""
    return math.log(math.log(T)) ** 6 / math.log(T)


def starred_gap_sum(
    table: ZeroTable, T: float, cfg: EvalConfig = DEFAULT_CONFIG, maxima=None
) -> StarredSum:
    """Sum of gaps below the cap whose max |zeta| exceeds the gap.

    The complement is the sum of gaps dominating their max, which is the
    measure of the intervals lying wholly in A(T).
    """
    if not T >= 100:
        raise PreconditionError(f"need T >= 100, got {T}")
    _, gap = _gap_arrays(table, T)
    mx = interval_maxima(table, T, cfg) if maxima is None else np.asarray(maxima)
    thr = starred_threshold(T)
    star = (gap < thr) & (mx > gap)
    comp = mx <= gap
    return StarredSum(
        T=float(T),
        threshold=thr,
        value=float(gap[star].sum()),
        count=int(np.count_nonzero(star)),
        complement=float(gap[comp].sum()),
        complement_count=int(np.count_nonzero(comp)),
        threshold_vacuous=bool(gap.size == 0 or thr >= gap.max()),
    )


def ab_interval_measure(
    table: ZeroTable,
    T: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    step: float | None = None,
    samples: GridSample | None = None,
):
    """Per-gap pieces of A(T) on (gamma_1, T].

    Returns ``(start, gap, inside, ambiguous_width, resolution)`` where
    ``inside[n]`` is the measure of {|Z| <= gap_n} in [gamma_n, min(gamma_{n+1}, T)].
    The zeros are inserted into the sampling grid so the threshold is
    constant on every cell.
    """
    start, gap = _gap_arrays(table, T)
    if samples is None:
        samples = sample_grid(T, step if step is not None else default_measure_step(T), cfg)
    elif samples.T != T:
        raise PreconditionError(f"samples cover (0, {samples.T}], asked for T={T}")
    if start.size == 0:
        return start, gap, np.empty(0), np.empty(0), samples.step
    keep = samples.t > start[0]
    t = np.concatenate([samples.t[keep], start])
    z = np.concatenate([samples.z[keep], np.zeros(start.size)])
    order = np.argsort(t, kind="stable")
    t, z = t[order], z[order]
    dup = np.zeros(t.size, dtype=bool)
    dup[1:] = np.diff(t) <= 0
    # a grid point coinciding with a zero keeps the exact zero value
    t, z = t[~dup], np.where(np.roll(dup, -1)[~dup], 0.0, z[~dup])
    owner = np.searchsorted(start, t[:-1], side="right") - 1
    inside, ambiguous, _ = measure_below(t, z, gap[owner], cfg)
    width = np.where(ambiguous, np.diff(t), 0.0)
    per_gap = np.bincount(owner, weights=inside, minlength=start.size)
    amb = np.bincount(owner, weights=width, minlength=start.size)
    return start, gap, per_gap, amb, samples.step


def ab_measure(
    table: ZeroTable,
    T: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    step: float | None = None,
    samples: GridSample | None = None,
) -> ABMeasure:
    """mu(A(T)) and mu(B(T)), with (0, gamma_1] left out of both.

    A(T) is where |zeta(1/2 + it)| is at most the gap of the zero interval
    containing t; B(T) is the rest.
    """
    start, gap, inside, amb, res = ab_interval_measure(table, T, cfg, step, samples)
    excluded = float(start[0]) if start.size else float(T)
    span = np.minimum(start + gap, T) - start
    unc = float(amb.sum())
    if unc > T / 10:
        raise StepTooCoarse(f"unresolved width {unc:.4g} exceeds T/10; use a step below {res:.4g}")
    a = MeasureEstimate(float(T), "gap_dominated", float(inside.sum()), unc, res)
    b = MeasureEstimate(float(T), "gap_exceeded", float(np.sum(span - inside)), unc, res)
    return ABMeasure(a=a, b=b, excluded=excluded)


def _montgomery_integrand(t):
    return 1.0 - np.sinc(t) ** 2


def montgomery_integral(alpha: float) -> float:
    """Integral over [0, alpha] of 1 - (sin pi t / pi t)^2."""
    if not alpha >= 0:
        raise PreconditionError(f"alpha must be >= 0, got {alpha}")
    if alpha == 0:
        return 0.0
    value, _ = quad(_montgomery_integrand, 0.0, alpha, epsabs=1e-13, epsrel=1e-13, limit=500)
    return float(value)


def pair_correlation(table: ZeroTable, T: float, alpha_grid) -> PairCorrelationReport:
    """Ordered pairs 0 < gamma - gamma' <= 2 pi alpha / log(T / 2 pi), both <= T, over N(T)."""
    alpha = np.asarray(alpha_grid, dtype=float)
    if alpha.ndim != 1 or alpha.size == 0 or np.any(alpha <= 0) or np.any(np.diff(alpha) <= 0):
        raise PreconditionError("alpha_grid must be positive and strictly increasing")
    if not T > TWO_PI:
        raise PreconditionError(f"need T > 2 pi, got {T}")
    table.require(T)
    g = table.ordinates[: int(np.searchsorted(table.ordinates, T, side="right"))]
    scale = TWO_PI / math.log(T / TWO_PI)
    idx = np.arange(g.size)
    counts = np.array(
        [np.sum(np.searchsorted(g, g + a * scale, side="right") - idx - 1) for a in alpha],
        dtype=float,
    )
    n = max(g.size, 1)
    return PairCorrelationReport(
        T=float(T),
        alpha_grid=alpha,
        empirical=counts / n,
        gue_prediction=np.array([montgomery_integral(a) for a in alpha]),
        window_scale=scale,
        n_zeros=int(g.size),
    )


def gap_report(
    table: ZeroTable,
    T: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    alphas=(1.0, 2.0),
    counts: bool = True,
) -> GapReport:
    """Gaps with their power sums and, optionally, the A/B/D counts."""
    base = gaps(table, T)
    sums = {float(a): gap_power_sum(table, T, a) for a in alphas}
    if not counts:
        return GapReport(base.T, base.gaps, base.normalized_gaps, sums)
    c = abd_counts(table, T, cfg)
    return GapReport(base.T, base.gaps, base.normalized_gaps, sums, c.A, c.B, c.D, c.N0)
