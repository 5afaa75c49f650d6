"""log|zeta(1/2 + it)| is approximately Gaussian with variance (1/2) log log T.

Prints the empirical distribution function of the normalised logarithm
against Phi, and the first Selberg moment against exp(1/2).

    python3 demos/lognormal_law.py --T 100000
"""

import argparse

import numpy as np

from zetaline.values import clt_distribution, sample_grid, selberg_moment


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--T", type=float, default=1e5)
    args = parser.parse_args()

    grid = sample_grid(args.T)
    rep = clt_distribution(args.T, y_grid=np.arange(-3.0, 3.01, 0.5), samples=grid)
    print(f"T = {args.T:g}, {rep.samples} samples, normaliser {rep.normalizer:.4f}")
    print("     y   empirical      Phi(y)")
    for y, e, p in zip(rep.y_grid, rep.empirical_cdf, rep.phi_cdf):
        print(f"{y:6.2f}   {e:9.4f}   {p:9.4f}")
    print(f"KS distance over the default grid: {clt_distribution(args.T, samples=grid).ks_distance:.4f}")

    m = selberg_moment(args.T, 1.0, samples=grid)
    print(f"\nmean of |zeta|^{m.exponent:.4f}: {m.empirical:.5f}, limit exp(1/2) = {m.predicted:.5f}")


if __name__ == "__main__":
    main()
