"""Measure of {t : |Z(t)| <= level} over a sampled grid.

The grid cells are classified from their endpoint samples. Cells where the
level could be crossed (a sign change of |Z| - level, a zero of Z between two
samples above the level, or a sample close to the level relative to the local
curvature of Z) are probed at their quarter points. Near-level extrema of |Z|
among the samples are then located by golden-section search, so that a short
excursion across the level between two samples is not missed. Finally each
piece between consecutive samples is split at any zero of Z it contains, and
every remaining crossing is refined to ``CROSS_TOL`` as a root of Z -/+ level.
"""

from __future__ import annotations

import math

import numpy as np

from ._roots import refine_brackets
from .core import z_values

CROSS_TOL = 1e-8
ZERO_GUARD = 1e-12
EXTREMUM_ITER = 48
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _curvature(z):
    """Per-cell bound on the departure of Z from its chord, from second differences."""
    d2 = np.zeros(z.size)
    if z.size >= 3:
        d2[1:-1] = np.abs(z[:-2] - 2.0 * z[1:-1] + z[2:])
        d2[0], d2[-1] = d2[1], d2[-2]
    return np.maximum(d2[:-1], d2[1:])


def _excess(z, lev):
    """|Z| - level, with |Z| under the zero guard always counted as inside."""
    f = np.abs(z) - lev
    return np.where(np.abs(z) < ZERO_GUARD, -np.abs(f), f)


def _probe(t, z, level, cfg, probe_margin):
    """Merged samples (grid plus quarter-point probes) and the ambiguous-cell mask."""
    fa, fb = _excess(z[:-1], level), _excess(z[1:], level)
    ina, inb = fa <= 0, fb <= 0
    probe = (ina != inb) | ((z[:-1] * z[1:] < 0) & ~ina & ~inb)
    near = np.minimum(np.abs(fa), np.abs(fb)) <= probe_margin * _curvature(z)
    probe |= near & np.isfinite(level)

    pc = np.flatnonzero(probe)
    h = (t[pc + 1] - t[pc])[:, None]
    qt = t[pc][:, None] + h * np.array([0.25, 0.5, 0.75])
    qz = z_values(qt.ravel(), cfg)[0].reshape(qt.shape)
    f5 = np.abs(np.column_stack([z[pc], qz, z[pc + 1]])) - level[pc][:, None]
    changes = np.count_nonzero((f5[:, :-1] <= 0) != (f5[:, 1:] <= 0), axis=1)
    ambiguous = np.zeros(level.size, dtype=bool)
    ambiguous[pc[changes >= 2]] = True

    # merged sequence: cell i contributes t[i] and, if probed, its three probes
    extra = np.zeros(level.size, dtype=np.intp)
    extra[pc] = 3
    pos = np.arange(level.size) + np.concatenate([[0], np.cumsum(extra)[:-1]])
    n = t.size + 3 * pc.size
    mt, mz = np.empty(n), np.empty(n)
    mt[pos], mz[pos] = t[:-1], z[:-1]
    mt[-1], mz[-1] = t[-1], z[-1]
    qpos = pos[pc][:, None] + np.arange(1, 4)
    mt[qpos], mz[qpos] = qt, qz
    owner = np.repeat(np.arange(level.size), 1 + extra)
    return mt, mz, owner, ambiguous


def _extremum_points(t, z, lev, cfg):
    """Sample points to add where an extremum of |Z| crosses the level unseen.

    Candidates are interior samples that are a discrete local maximum of |Z|
    below the level (or a local minimum above it), with no sign change of Z
    on either side and within a second-difference margin of the level.
    """
    if t.size < 3:
        return np.empty(0), np.empty(0)
    zl, zm, zr = z[:-2], z[1:-1], z[2:]
    al, am, ar = np.abs(zl), np.abs(zm), np.abs(zr)
    lv_l, lv_r = lev[:-1], lev[1:]
    fm = am - lv_l
    same_sign = (zl * zm > 0) & (zm * zr > 0)
    inside = (fm <= 0) & (al <= lv_l) & (ar <= lv_r)
    outside = (fm > 0) & (al > lv_l) & (ar > lv_r)
    is_max = (am >= al) & (am >= ar)
    is_min = (am <= al) & (am <= ar)
    margin = np.abs(zl - 2.0 * zm + zr) + ZERO_GUARD
    cand = (
        same_sign
        & (lv_l == lv_r)
        & np.isfinite(lv_l)
        & ((inside & is_max) | (outside & is_min))
        & (np.abs(fm) <= margin)
    )
    ci = np.flatnonzero(cand)
    if ci.size == 0:
        return np.empty(0), np.empty(0)
    # maximise s * |Z| with s = +1 for inside maxima, -1 for outside minima
    s = np.where(inside[ci], 1.0, -1.0)
    target = lv_l[ci]
    lo, hi = t[ci].copy(), t[ci + 2].copy()
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    z1, z2 = z_values(x1, cfg)[0], z_values(x2, cfg)[0]
    best_x, best_z = t[ci + 1].copy(), z[ci + 1].copy()
    for _ in range(EXTREMUM_ITER):
        for x, zx in ((x1, z1), (x2, z2)):
            better = s * np.abs(zx) > s * np.abs(best_z)
            best_x = np.where(better, x, best_x)
            best_z = np.where(better, zx, best_z)
        crossed = s * (np.abs(best_z) - target) > 0
        if np.all(crossed):
            break
        left = s * np.abs(z1) >= s * np.abs(z2)
        lo, hi = np.where(left, lo, x1), np.where(left, x2, hi)
        x1, x2, z1, z2 = (
            np.where(left, hi - _GOLDEN * (hi - lo), x2),
            np.where(left, x1, lo + _GOLDEN * (hi - lo)),
            np.where(left, 0.0, z2),
            np.where(left, z1, 0.0),
        )
        zp = z_values(np.where(left, x1, x2), cfg)[0]
        z1 = np.where(left, zp, z1)
        z2 = np.where(left, z2, zp)
    crossed = s * (np.abs(best_z) - target) > 0
    return best_x[crossed], best_z[crossed]


def measure_below(t, z, level, cfg, probe_margin=1.0):
    """Length of {|Z| <= level} inside each cell ``[t[i], t[i+1]]``.

    ``level`` holds one threshold per cell (``np.inf`` allowed). Returns
    ``(inside, ambiguous, crossings)``: the measured length per cell, a mask
    of probed cells whose five samples show two or more sign changes of
    |Z| - level, and the number of refined crossings per cell.
    """
    ncell = t.size - 1
    level = np.broadcast_to(np.asarray(level, dtype=float), (ncell,))
    mt, mz, owner, ambiguous = _probe(t, z, level, cfg, probe_margin)

    ex, ez = _extremum_points(mt, mz, level[owner], cfg)
    if ex.size:
        order = np.argsort(ex)
        ex, ez = ex[order], ez[order]
        at = np.searchsorted(mt, ex)
        mt, mz = np.insert(mt, at, ex), np.insert(mz, at, ez)
        owner = np.insert(owner, at, owner[at - 1])

    a, b = mt[:-1].copy(), mt[1:].copy()
    fza, fzb = mz[:-1].copy(), mz[1:].copy()
    lev = level[owner]

    # split pieces with a zero of Z when part of them can lie above the level
    split = (fza * fzb < 0) & ((np.abs(fza) > lev) | (np.abs(fzb) > lev))
    si = np.flatnonzero(split)
    if si.size:
        zero = refine_brackets(
            lambda x, idx: z_values(x, cfg)[0], a[si], b[si], fza[si], fzb[si], CROSS_TOL
        )
        a = np.concatenate([a, zero])
        b = np.concatenate([b, b[si]])
        fza = np.concatenate([fza, np.zeros(si.size)])
        fzb = np.concatenate([fzb, fzb[si]])
        owner = np.concatenate([owner, owner[si]])
        lev = np.concatenate([lev, lev[si]])
        b[si] = zero
        fzb[si] = 0.0

    in_a, in_b = _excess(fza, lev) <= 0, _excess(fzb, lev) <= 0
    length = np.where(in_a & in_b, b - a, 0.0)
    cross = np.flatnonzero(in_a != in_b)
    if cross.size:
        # the crossing is where Z reaches the level on the side of the outer endpoint
        outer = np.where(in_a[cross], fzb[cross], fza[cross])
        target = np.sign(outer) * lev[cross]

        def g(x, idx):
            return z_values(x, cfg)[0] - target[idx]

        r = refine_brackets(
            g, a[cross], b[cross], fza[cross] - target, fzb[cross] - target, CROSS_TOL
        )
        length[cross] = np.where(in_a[cross], r - a[cross], b[cross] - r)

    inside = np.bincount(owner, weights=length, minlength=ncell)
    crossings = np.bincount(owner[cross], minlength=ncell)
    return inside, ambiguous, crossings
