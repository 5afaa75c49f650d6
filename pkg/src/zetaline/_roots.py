"""Vectorised root refinement on many brackets at once."""

from __future__ import annotations

import numpy as np

from .errors import UnresolvedInterval

MAX_ITER = 200


class _Brackets:
    def __init__(self, lo, hi, flo, fhi):
        self.lo, self.hi = lo, hi
        self.flo, self.fhi = flo, fhi
        # Illinois-scaled copies of flo/fhi used only for the interpolation
        self.glo, self.ghi = flo.copy(), fhi.copy()
        self.side = np.zeros(lo.size, dtype=np.int8)
        self.slo = np.sign(flo)
        self.root = np.full(lo.size, np.nan)

    def update(self, idx, x, fx):
        """Replace the endpoint of each bracket ``idx`` that shares the sign of ``fx``."""
        hit = fx == 0
        self.root[idx[hit]] = x[hit]
        same = (np.sign(fx) == self.slo[idx]) & ~hit
        other = ~same & ~hit
        ia, ib = idx[same], idx[other]
        self.lo[ia], self.flo[ia], self.glo[ia] = x[same], fx[same], fx[same]
        self.ghi[ia] *= np.where(self.side[ia] == -1, 0.5, 1.0)
        self.side[ia] = -1
        self.hi[ib], self.fhi[ib], self.ghi[ib] = x[other], fx[other], fx[other]
        self.glo[ib] *= np.where(self.side[ib] == 1, 0.5, 1.0)
        self.side[ib] = 1
        return ~hit


def refine_brackets(func, lo, hi, flo, fhi, tol, max_iter=MAX_ITER):
    """Shrink every bracket ``[lo, hi]`` around a sign change of ``func``.

    ``func(x, idx)`` evaluates the function of bracket ``idx[j]`` at ``x[j]``.
    Each round evaluates an Illinois regula-falsi point and then a second
    point just past the root as extrapolated from the first, so a good
    estimate closes the bracket from both sides. A bisection replaces the
    interpolation whenever the previous round failed to halve the width.
    Returns midpoints of final brackets of width <= ``tol`` (or exact roots
    where ``func`` hit 0).
    """
    br = _Brackets(
        np.array(lo, dtype=float),
        np.array(hi, dtype=float),
        np.array(flo, dtype=float),
        np.array(fhi, dtype=float),
    )
    n = br.lo.size
    if n == 0:
        return br.root
    if np.any(np.sign(br.flo) * np.sign(br.fhi) > 0):
        raise ValueError("every bracket needs a sign change")
    br.root[br.flo == 0] = br.lo[br.flo == 0]
    at_hi = (br.fhi == 0) & np.isnan(br.root)
    br.root[at_hi] = br.hi[at_hi]
    width_prev = np.full(n, np.inf)
    active = np.flatnonzero(np.isnan(br.root))

    for _ in range(max_iter):
        w = br.hi[active] - br.lo[active]
        small = w <= tol
        done = active[small]
        br.root[done] = 0.5 * (br.lo[done] + br.hi[done])
        active, w = active[~small], w[~small]
        if active.size == 0:
            return br.root
        a, b = br.lo[active], br.hi[active]
        ga, gb = br.glo[active], br.ghi[active]
        x = (a * gb - b * ga) / (gb - ga)
        bisect = (w > 0.5 * width_prev[active]) | ~((x > a) & (x < b))
        x = np.where(bisect, 0.5 * (a + b), x)
        width_prev[active] = w
        fx = np.asarray(func(x, active), dtype=float)
        live = br.update(active, x, fx)

        # overshoot the secant step from x by half again to straddle the root
        idx, x, fx = active[live], x[live], fx[live]
        lo_, hi_ = br.lo[idx], br.hi[idx]
        slope = (br.fhi[idx] - br.flo[idx]) / (hi_ - lo_)
        step = -1.5 * fx / slope
        min_step = 0.25 * tol
        step = np.where(np.abs(step) < min_step, np.copysign(min_step, step), step)
        y = x + step
        inside = (y > lo_) & (y < hi_) & np.isfinite(y)
        if inside.any():
            iy = idx[inside]
            fy = np.asarray(func(y[inside], iy), dtype=float)
            br.update(iy, y[inside], fy)
        active = active[np.isnan(br.root[active])]
    if active.size:
        raise UnresolvedInterval(
            f"{active.size} bracket(s) did not shrink below {tol} in {max_iter} rounds, "
            f"e.g. [{br.lo[active[0]]!r}, {br.hi[active[0]]!r}]"
        )
    return br.root
