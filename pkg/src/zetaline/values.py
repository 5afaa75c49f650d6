"""Value distribution of |zeta(1/2 + it)|.

Measures of the small-value sets {t <= T : |zeta| <= c}, the lognormal limit
law for log|zeta| (Selberg's central limit theorem), the fractional moments
that drive it, the small-exponent integral, and moments of increments of
S(t). All measures use |Z(t)|, which equals |zeta(1/2 + it)|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import ndtr

from ._levels import ZERO_GUARD, measure_below
from .core import DEFAULT_CONFIG, TWO_PI, EvalConfig, z_values
from .errors import DegenerateGrid, OutOfWindow, PreconditionError, StepTooCoarse
from .zeros import ZeroTable, count_main_term

MIN_DISTRIBUTION_T = 100.0
DEFAULT_K0 = 3.0


@dataclass(frozen=True)
class GridSample:
    """Z sampled at ``t = i * step``, i = 0..M, with ``M * step == T``."""

    T: float
    step: float
    t: np.ndarray = field(repr=False)
    z: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class MeasureEstimate:
    T: float
    set_spec: str
    value: float
    uncertainty: float
    resolution: float
    crossings: int = 0

    @property
    def ratio_to_T(self):
        return self.value / self.T


@dataclass(frozen=True)
class DistributionReport:
    T: float
    y_grid: np.ndarray = field(repr=False)
    empirical_cdf: np.ndarray = field(repr=False)
    phi_cdf: np.ndarray = field(repr=False)
    ks_distance: float = 0.0
    normalizer: float = 1.0
    samples: int = 0


@dataclass(frozen=True)
class MomentReport:
    T: float
    k: float
    exponent: float
    empirical: float
    predicted: float
    rel_error: float

    @property
    def ratio(self):
        return self.empirical / self.predicted


@dataclass(frozen=True)
class IntegralReport:
    T: float
    lam: float
    lam_max: float
    value: float

    @property
    def ratio_to_T(self):
        return self.value / self.T


def default_measure_step(T: float) -> float:
    """Sixteen samples per mean zero gap at height T."""
    return TWO_PI / (16.0 * max(math.log(T / TWO_PI), 1.0)) if T > 0 else 1.0


def sample_grid(
    T: float, step: float | None = None, cfg: EvalConfig = DEFAULT_CONFIG, jobs: int = 1
) -> GridSample:
    """Evaluate Z on a uniform grid over [0, T].

    The step is adjusted down so that a whole number of cells tiles [0, T].
    """
    if not (T > 0 and math.isfinite(T)):
        raise PreconditionError(f"T must be positive, got {T}")
    step = default_measure_step(T) if step is None else step
    if not step > 0:
        raise PreconditionError(f"step must be positive, got {step}")
    m = max(1, int(math.ceil(T / step - 1e-9)))
    t = np.linspace(0.0, T, m + 1)
    z = z_values(t, cfg, jobs=jobs)[0]
    return GridSample(T=float(T), step=T / m, t=t, z=z)


def _samples(T, step, cfg, samples):
    if samples is None:
        return sample_grid(T, step, cfg)
    if samples.T != T:
        raise PreconditionError(f"samples cover (0, {samples.T}], asked for T={T}")
    return samples


def _level_estimate(grid, level, cfg, spec):
    inside, ambiguous, crossings = measure_below(grid.t, grid.z, level, cfg)
    cell = np.diff(grid.t)
    return MeasureEstimate(
        T=grid.T,
        set_spec=spec,
        value=float(inside.sum()),
        uncertainty=float(cell[ambiguous].sum()),
        resolution=grid.step,
        crossings=int(crossings.sum()),
    )


def _check_resolution(est):
    if est.uncertainty > est.T / 10:
        raise StepTooCoarse(
            f"{est.set_spec}: unresolved width {est.uncertainty:.4g} exceeds T/10; "
            f"use a step below {est.resolution:.4g}"
        )
    return est


def level_set_measure(
    T: float,
    c: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    step: float | None = None,
    samples: GridSample | None = None,
) -> MeasureEstimate:
    """mu{0 < t <= T : |zeta(1/2 + it)| <= c}."""
    if not c > 0:
        raise PreconditionError(f"c must be positive, got {c}")
    grid = _samples(T, step, cfg, samples)
    return _check_resolution(_level_estimate(grid, c, cfg, f"below_c({c:g})"))


def band_measure(
    T: float,
    c1: float,
    c2: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    step: float | None = None,
    samples: GridSample | None = None,
) -> MeasureEstimate:
    """mu{0 < t <= T : c1 <= |zeta(1/2 + it)| <= c2} from one set of samples."""
    if not 0 < c1 <= c2:
        raise PreconditionError(f"need 0 < c1 <= c2, got c1={c1}, c2={c2}")
    grid = _samples(T, step, cfg, samples)
    spec = f"band({c1:g},{c2:g})"
    if c1 == c2:
        return MeasureEstimate(grid.T, spec, 0.0, 0.0, grid.step)
    lo = _level_estimate(grid, c1, cfg, spec)
    hi = _level_estimate(grid, c2, cfg, spec)
    _check_resolution(lo)
    _check_resolution(hi)
    return MeasureEstimate(
        T=grid.T,
        set_spec=spec,
        value=hi.value - lo.value,
        uncertainty=hi.uncertainty + lo.uncertainty,
        resolution=grid.step,
        crossings=hi.crossings + lo.crossings,
    )


def gaussian_band_prediction(T: float, a: float, b: float, psi: float | None = None) -> float:
    """T * integral of exp(-pi v^2) over [a, b] / sqrt(pi psi), with psi = log log T.

    This is the Gaussian measure predicted for {e^a <= |zeta| <= e^b}; the
    density exp(-pi v^2) is that of N(0, 1/(2 pi)), so the integral is a
    difference of Phi at a * sqrt(2 / psi) and b * sqrt(2 / psi).
    """
    psi = math.log(math.log(T)) if psi is None else psi
    scale = math.sqrt(2.0 / psi)
    return T * float(ndtr(b * scale) - ndtr(a * scale))


def phi(y):
    """Standard normal distribution function (the probability integral)."""
    out = ndtr(np.asarray(y, dtype=float))
    return float(out) if np.ndim(out) == 0 else out


def clt_normalizer(T: float) -> float:
    return math.sqrt(0.5 * math.log(math.log(T)))


def clt_distribution(
    T: float,
    step: float | None = None,
    y_grid=None,
    cfg: EvalConfig = DEFAULT_CONFIG,
    samples: GridSample | None = None,
) -> DistributionReport:
    """Empirical law of log|zeta(1/2 + it)| / sqrt(1/2 log log T) against Phi."""
    if not T >= MIN_DISTRIBUTION_T:
        raise PreconditionError(f"need T >= {MIN_DISTRIBUTION_T:g}, got {T}")
    y = np.linspace(-4.0, 4.0, 161) if y_grid is None else np.asarray(y_grid, dtype=float)
    if y.ndim != 1 or y.size == 0 or np.any(np.diff(y) <= 0):
        raise DegenerateGrid("y_grid must be a non-empty strictly increasing sequence")
    grid = _samples(T, step, cfg, samples)
    az = np.abs(grid.z[1:])
    az = az[az >= ZERO_GUARD]
    norm = clt_normalizer(T)
    x = np.sort(np.log(az) / norm)
    emp = np.searchsorted(x, y, side="right") / x.size
    ref = phi(y)
    return DistributionReport(
        T=float(T),
        y_grid=y,
        empirical_cdf=emp,
        phi_cdf=np.asarray(ref),
        ks_distance=float(np.max(np.abs(emp - ref))),
        normalizer=norm,
        samples=int(x.size),
    )


def _trapezoid_mean(grid, values):
    w = np.full(values.size, grid.step)
    w[0] = w[-1] = 0.5 * grid.step
    return float(np.dot(w, values)) / grid.T


def selberg_window(T: float, k0: float = DEFAULT_K0):
    return math.exp(-math.sqrt(math.log(math.log(T)))), k0


def selberg_moment(
    T: float,
    k: float,
    step: float | None = None,
    cfg: EvalConfig = DEFAULT_CONFIG,
    samples: GridSample | None = None,
    k0: float = DEFAULT_K0,
    enforce_window: bool = True,
) -> MomentReport:
    """(1/T) int_0^T |zeta|^(2k (2 log log T)^-1/2) dt against exp(k^2/2)."""
    if not T >= MIN_DISTRIBUTION_T:
        raise PreconditionError(f"need T >= {MIN_DISTRIBUTION_T:g}, got {T}")
    lo, hi = selberg_window(T, k0)
    if enforce_window and not lo <= k <= hi:
        raise OutOfWindow(f"k={k} outside [{lo:.4g}, {hi:g}] at T={T:g}")
    grid = _samples(T, step, cfg, samples)
    p = 2.0 * k / math.sqrt(2.0 * math.log(math.log(T)))
    empirical = _trapezoid_mean(grid, np.abs(grid.z) ** p)
    predicted = math.exp(0.5 * k * k)
    return MomentReport(
        T=float(T),
        k=float(k),
        exponent=p,
        empirical=empirical,
        predicted=predicted,
        rel_error=abs(empirical - predicted) / predicted,
    )


def small_exponent_max(T: float) -> float:
    """(psi(T) log log T)^-1/2 with psi(T) = log log T / (9 (log log log T)^2)."""
    ll = math.log(math.log(T))
    lll = math.log(ll)
    psi = ll / (9.0 * lll * lll)
    return 1.0 / math.sqrt(psi * ll)


def small_exponent_integral(
    T: float,
    lam: float,
    step: float | None = None,
    cfg: EvalConfig = DEFAULT_CONFIG,
    samples: GridSample | None = None,
) -> IntegralReport:
    """int_0^T |zeta(1/2 + it)|^lam dt for lam in the admissible window."""
    if not T >= MIN_DISTRIBUTION_T:
        raise PreconditionError(f"need T >= {MIN_DISTRIBUTION_T:g}, got {T}")
    lam_max = small_exponent_max(T)
    if not 0 <= lam <= lam_max * (1 + 1e-12):
        raise OutOfWindow(f"lambda={lam} outside [0, {lam_max:.6g}] at T={T:g}")
    grid = _samples(T, step, cfg, samples)
    value = T * _trapezoid_mean(grid, np.abs(grid.z) ** lam)
    return IntegralReport(T=float(T), lam=float(lam), lam_max=lam_max, value=value)


def _gauss_nodes(n=5):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def s_diff_moment(
    T: float, H: float, h: float, k: int, table: ZeroTable
) -> MomentReport:
    """int_T^{T+H} (S(t+h) - S(t))^(2k) dt against its main term.

    S(t+h) - S(t) is a step function (the zero count over (t, t+h]) minus the
    smooth drift of the main term; the integral is taken exactly over the
    pieces between jumps, each cut to length at most h/8, with 5-point
    Gauss-Legendre for the drift.
    """
    if not (T > 1 and T ** 0.6 <= H <= T):
        raise OutOfWindow(f"need T^0.6 <= H <= T, got T={T}, H={H}")
    if not 0 < h < 1:
        raise OutOfWindow(f"need 0 < h < 1, got {h}")
    if int(k) != k or k < 1:
        raise PreconditionError(f"k must be a positive integer, got {k}")
    k = int(k)
    table.require(T + H + 1)
    g = table.ordinates
    lo, hi = T, T + H
    inner = g[(g > lo) & (g < hi)]
    shifted = g[(g - h > lo) & (g - h < hi)] - h
    cuts = np.unique(np.concatenate([[lo, hi], inner, shifted]))
    # split every smooth piece into sub-pieces no longer than h/8
    pieces = np.maximum(1, np.ceil(np.diff(cuts) / (h / 8))).astype(int)
    start = np.repeat(cuts[:-1], pieces)
    width = np.repeat(np.diff(cuts) / pieces, pieces)
    offset = np.arange(pieces.sum()) - np.repeat(np.cumsum(pieces) - pieces, pieces)
    a = start + offset * width
    b = np.append(a[1:], hi)
    mid = 0.5 * (a + b)
    jumps = table.count_upto(mid + h) - table.count_upto(mid)
    x, w = _gauss_nodes()
    half = 0.5 * (b - a)
    nodes = mid[:, None] + half[:, None] * x
    drift = count_main_term(nodes + h) - count_main_term(nodes)
    vals = (jumps[:, None] - drift) ** (2 * k)
    empirical = float(np.sum(half * (vals @ w)))
    predicted = (
        H * math.factorial(2 * k) / ((2 * math.pi ** 2) ** k * math.factorial(k))
        * math.log(2 + h * math.log(T)) ** k
    )
    return MomentReport(
        T=float(T),
        k=float(k),
        exponent=float(2 * k),
        empirical=empirical,
        predicted=predicted,
        rel_error=abs(empirical - predicted) / predicted,
    )
