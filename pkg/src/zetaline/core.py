"""Evaluation of theta(t), Z(t) and zeta(1/2 + it) on the critical line.

Two independent routes are provided:

* the Riemann-Siegel formula (main sum plus up to five correction terms),
  used for ``t >= EvalConfig.rs_min_t``; and
* Euler-Maclaurin summation, used below the crossover and as a slow oracle
  anywhere in its accuracy domain.

Everything runs in binary64. The vectorised kernel :func:`z_values` is what
the statistics modules call; :func:`z_function` and :func:`zeta_half` wrap it
for single points.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.special import bernoulli, factorial, loggamma

from ._rs_tables import COEFFS
from .errors import PreconditionError

__all__ = [
    "EvalConfig",
    "DEFAULT_CONFIG",
    "ZetaSample",
    "theta",
    "z_values",
    "z_function",
    "zeta_half",
    "em_zeta",
]

EPS = float(np.finfo(float).eps)
TWO_PI = 2.0 * math.pi
LOG_PI = math.log(math.pi)

_THETA_SERIES_MIN_T = 10.0
# theta(t) ~ t/2 log(t/2pi) - t/2 - pi/8 + sum c_j t^(1-2j)
_THETA_SERIES = (1 / 48, 7 / 5760, 31 / 80640, 127 / 430080, 511 / 1216512)

# Horner order (highest power first) for np.polyval.
_RS_POLY = tuple(np.array(c[::-1], dtype=float) for c in COEFFS)

# Remainder constants M_K with |Z - Z_K| <= M_K * tau**(-(2K+3)/2), tau = sqrt(t/2pi).
# Twice the largest residual against an arbitrary-precision Z(t) over 30 <= t <= 3000.
# For K <= 3 these sit just above max|C_{K+1}|, i.e. the first omitted term.
_RS_BOUND = (0.062, 0.011, 9.3e-4, 9.5e-4, 3.6e-4)

_EM_MAX_CORRECTIONS = 30
_B = bernoulli(2 * _EM_MAX_CORRECTIONS)
_EM_COEF = np.array(
    [_B[2 * k] / factorial(2 * k, exact=False) for k in range(1, _EM_MAX_CORRECTIONS + 1)]
)

# elements per work block in the main-sum kernel
_BLOCK = 1 << 16


@dataclass(frozen=True)
class EvalConfig:
    """Knobs for the evaluation kernels.

    ``rs_min_t`` is the height where Riemann-Siegel takes over from
    Euler-Maclaurin, ``em_terms`` the minimum Euler-Maclaurin summation length
    and ``rs_corrections`` the index of the last Riemann-Siegel correction
    term kept (0 keeps only C_0).
    """

    rs_min_t: float = 400.0
    em_terms: int = 50
    rs_corrections: int = 4

    def __post_init__(self):
        if not (self.rs_min_t > 0 and math.isfinite(self.rs_min_t)):
            raise PreconditionError(f"rs_min_t must be positive, got {self.rs_min_t}")
        if int(self.em_terms) != self.em_terms or self.em_terms < 10:
            raise PreconditionError(f"em_terms must be an integer >= 10, got {self.em_terms}")
        if self.rs_corrections not in (0, 1, 2, 3, 4):
            raise PreconditionError(
                f"rs_corrections must be in 0..4, got {self.rs_corrections}"
            )


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class ZetaSample:
    t: float
    theta: float
    z: float
    zeta_re: float
    zeta_im: float
    err_bound: float

    @property
    def zeta(self) -> complex:
        return complex(self.zeta_re, self.zeta_im)


def _theta_array(t):
    t = np.asarray(t, dtype=float)
    a = np.abs(t)
    out = np.empty_like(a)
    big = a >= _THETA_SERIES_MIN_T
    if big.any():
        tb = a[big]
        inv = 1.0 / tb
        inv2 = inv * inv
        series = 0.0
        for c in reversed(_THETA_SERIES):
            series = series * inv2 + c
        out[big] = 0.5 * tb * np.log(tb / TWO_PI) - 0.5 * tb - math.pi / 8 + series * inv
    small = ~big
    if small.any():
        ts = a[small]
        out[small] = loggamma(0.25 + 0.5j * ts).imag - 0.5 * ts * LOG_PI
    return np.sign(t) * out


def theta(t):
    """Riemann-Siegel theta function, odd in ``t``.

    Uses the asymptotic series for ``|t| >= 10`` (error below 1e-13 there) and
    the complex log-Gamma function below. Accepts scalars or arrays.
    """
    out = _theta_array(t)
    return float(out) if out.ndim == 0 else out


def _main_sum(t, th, n_terms):
    """2 * sum_{n <= N} n^-1/2 cos(theta - t log n), one N per point.

    Points are grouped by their N so every row is reduced over exactly its own
    terms; the result for a point does not depend on what it was batched with.
    """
    out = np.zeros_like(t)
    order = np.argsort(n_terms, kind="stable")
    ns = n_terms[order]
    cuts = np.flatnonzero(np.diff(ns)) + 1
    for lo, hi in zip(np.r_[0, cuts], np.r_[cuts, ns.size]):
        n = int(ns[lo])
        if n <= 0:
            continue
        k = np.arange(1, n + 1, dtype=float)
        logk = np.log(k)
        w = 1.0 / np.sqrt(k)
        rows = max(1, _BLOCK // n)
        for a in range(lo, hi, rows):
            idx = order[a : min(a + rows, hi)]
            ph = np.multiply.outer(t[idx], logk)
            np.subtract(th[idx, None], ph, out=ph)
            np.cos(ph, out=ph)
            ph *= w
            out[idx] = 2.0 * ph.sum(axis=1)
    return out


def _rs_z(t, th, corrections):
    tau = np.sqrt(t / TWO_PI)
    n_terms = np.floor(tau).astype(np.int64)
    main = _main_sum(t, th, n_terms)
    z = 2.0 * (tau - n_terms) - 1.0
    inv_tau = 1.0 / tau
    corr = np.polyval(_RS_POLY[corrections], z)
    for k in range(corrections - 1, -1, -1):
        corr = np.polyval(_RS_POLY[k], z) + corr * inv_tau
    sign = np.where(n_terms % 2 == 1, 1.0, -1.0)
    value = main + sign * corr / np.sqrt(tau)
    # truncation + worst-case phase rounding in the main sum
    trunc = _RS_BOUND[corrections] * tau ** (-(2 * corrections + 3) / 2)
    phase = np.abs(th) + t * np.log(np.maximum(n_terms, 1)) + 1.0
    rounding = 8.0 * EPS * phase * np.sqrt(np.maximum(n_terms, 1))
    return value, trunc + rounding


def _em_zeta_array(sigma, t, terms):
    """Euler-Maclaurin zeta(sigma + it) with remainder bound, vectorised over t."""
    t = np.asarray(t, dtype=float)
    s = sigma + 1j * t
    n = np.arange(1, terms, dtype=float)
    logn = np.log(n)
    head = np.exp(-np.multiply.outer(s, logn))
    partial = head.sum(axis=-1)
    big_n = float(terms)
    n_pow = np.exp(-s * math.log(big_n))  # N^-s
    value = partial + big_n * n_pow / (s - 1.0) + 0.5 * n_pow

    # T_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
    tk = np.empty(s.shape + (_EM_MAX_CORRECTIONS,), dtype=complex)
    poch = s.copy()
    power = n_pow / big_n
    for k in range(1, _EM_MAX_CORRECTIONS + 1):
        tk[..., k - 1] = _EM_COEF[k - 1] * poch * power
        poch = poch * (s + 2 * k - 1) * (s + 2 * k)
        power = power / (big_n * big_n)
    # stop just before the smallest term
    stop = np.argmin(np.abs(tk), axis=-1)
    keep = np.arange(_EM_MAX_CORRECTIONS) < stop[..., None]
    value = value + np.where(keep, tk, 0.0).sum(axis=-1)
    first_omitted = np.abs(np.take_along_axis(tk, stop[..., None], axis=-1)[..., 0])
    m = stop.astype(float)
    factor = np.abs(s + 2 * m + 1) / (sigma + 2 * m + 1)
    # phase rounding in t log n dominates the summation error
    scale = np.abs(head) * (1.0 + np.multiply.outer(np.abs(t), logn))
    rounding = 4.0 * EPS * (scale.sum(axis=-1) + np.abs(value) * (1.0 + np.abs(t)) + 1.0)
    return value, factor * first_omitted + rounding


def em_zeta(sigma: float, t: float, terms: int):
    """Euler-Maclaurin evaluation of zeta(sigma + it).

    Returns ``(value, bound)`` where ``bound`` covers the truncated remainder
    and summation rounding. Intended as an oracle: the accuracy domain is
    ``0.4 <= sigma <= 2.1``, ``terms >= 10`` and ``|t| <= 10 * terms``.
    """
    if not 0.4 <= sigma <= 2.1:
        raise PreconditionError(f"sigma={sigma} outside [0.4, 2.1]")
    if int(terms) != terms or terms < 10:
        raise PreconditionError(f"terms must be an integer >= 10, got {terms}")
    if not abs(t) <= 10 * terms:
        raise PreconditionError(f"|t|={abs(t)} exceeds 10*terms={10 * terms}")
    if sigma == 1.0 and t == 0.0:
        raise PreconditionError("pole at s = 1")
    value, bound = _em_zeta_array(float(sigma), np.array([float(t)]), int(terms))
    return complex(value[0]), float(bound[0])


def _em_length(cfg, t_max):
    return max(int(cfg.em_terms), int(math.ceil(t_max / 3.0)) + 1)


def z_values(t, cfg: EvalConfig = DEFAULT_CONFIG, jobs: int = 1):
    """Vectorised Z(t) for ``t >= 0``.

    Returns ``(z, err)`` arrays shaped like ``t``; ``err`` bounds ``|Z - z|``.
    With ``jobs > 1`` contiguous chunks are evaluated in worker processes;
    each value depends only on its own ``t``, so the result is identical.
    """
    t = np.asarray(t, dtype=float)
    flat = np.ravel(t)
    if flat.size and not (np.all(np.isfinite(flat)) and flat.min() >= 0.0):
        raise PreconditionError("z_values needs finite t >= 0 (Z is even; pass |t|)")
    if jobs > 1 and flat.size >= 1024 * jobs:
        chunks = np.array_split(flat, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(z_values, chunks, [cfg] * jobs))
        z = np.concatenate([p[0] for p in parts])
        err = np.concatenate([p[1] for p in parts])
        return z.reshape(t.shape), err.reshape(t.shape)
    th = _theta_array(flat)
    z = np.empty_like(flat)
    err = np.empty_like(flat)
    rs = flat >= max(cfg.rs_min_t, TWO_PI)
    if rs.any():
        z[rs], err[rs] = _rs_z(flat[rs], th[rs], cfg.rs_corrections)
    em = ~rs
    if em.any():
        te = flat[em]
        terms = _em_length(cfg, float(te.max()))
        value, bound = _em_zeta_array(0.5, te, terms)
        z[em] = (np.exp(1j * th[em]) * value).real
        err[em] = bound + 4.0 * EPS * (np.abs(th[em]) + 1.0) * np.abs(value)
    return z.reshape(t.shape), err.reshape(t.shape)


def z_function(t: float, cfg: EvalConfig = DEFAULT_CONFIG) -> ZetaSample:
    """Z(t) = exp(i theta(t)) zeta(1/2 + it) at a single height ``t >= 0``."""
    if not t >= 0:
        raise PreconditionError(f"z_function needs t >= 0, got {t}")
    return zeta_half(t, cfg)


def zeta_half(t: float, cfg: EvalConfig = DEFAULT_CONFIG) -> ZetaSample:
    """zeta(1/2 + it) = Z(t) exp(-i theta(t)) for any finite ``t``."""
    t = float(t)
    if not math.isfinite(t):
        raise PreconditionError(f"t must be finite, got {t}")
    z, err = z_values(np.array([abs(t)]), cfg)
    z = float(z[0])
    th = theta(t)
    return ZetaSample(
        t=t,
        theta=th,
        z=z,
        zeta_re=z * math.cos(th),
        zeta_im=-z * math.sin(th),
        err_bound=float(err[0]),
    )
