"""Zero gaps versus the size of zeta between the zeros.

Scans the zeros up to T, then reports how many gaps are at least as large as
the maximum of |zeta| on them, the measure of the set where |zeta| stays
below the local gap, and the pair correlation against the GUE prediction.

    python3 demos/zero_gaps.py --T 10000
"""

import argparse

import numpy as np

from zetaline.gaps import GAP_MARGIN, ab_measure, abd_counts, fujii_bound, gap_power_sum, gaps, pair_correlation
from zetaline.storage import load_or_scan
from zetaline.zeros import verify_completeness


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--T", type=float, default=1e4)
    args = parser.parse_args()
    T = args.T

    table = load_or_scan(0.0, T + GAP_MARGIN)
    check = verify_completeness(table)
    print(f"{len(table)} zeros up to {table.range_hi:g}; N - main term = {check.residual:+.3f}")

    g = gaps(table, T)
    print(f"mean normalised gap {g.normalized_gaps.mean():.4f}, largest {g.normalized_gaps.max():.3f}")
    print(f"sum of squared gaps / Fujii bound = {gap_power_sum(table, T, 2.0) / fujii_bound(T):.4f}")

    c = abd_counts(table, T)
    print(f"A = {c.A}, B = {c.B}, B / N0 = {c.B / c.N0:.4f}")
    a, b = ab_measure(table, T)
    print(f"mu(A) / T = {a.value / T:.4f}, mu(B) / T = {b.value / T:.4f}")

    pc = pair_correlation(table, T, np.array([0.25, 0.5, 1.0, 1.5, 2.0]))
    print("\nalpha   pairs / N    GUE integral")
    for al, e, p in zip(pc.alpha_grid, pc.empirical, pc.gue_prediction):
        print(f"{al:5.2f}   {e:9.4f}   {p:9.4f}")


if __name__ == "__main__":
    main()
