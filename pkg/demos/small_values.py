"""How often is |zeta(1/2 + it)| small?

Prints the share of (0, T] where |zeta| <= 1 (its limit is one half) and the
measure of a few bands e^a <= |zeta| <= e^b next to the Gaussian prediction.

    python3 demos/small_values.py --T 10000
"""

import argparse
import math

from zetaline.values import band_measure, gaussian_band_prediction, level_set_measure, sample_grid


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--T", type=float, default=1e4)
    args = parser.parse_args()
    T = args.T

    for height in (T / 100, T / 10, T):
        est = level_set_measure(height, 1.0)
        print(f"T = {height:>9.0f}   mu(|zeta| <= 1) / T = {est.ratio_to_T:.4f}   (+- {est.uncertainty / height:.1e})")

    grid = sample_grid(T)
    print(f"\nbands at T = {T:g}: measured against T * [Phi(b sqrt(2/psi)) - Phi(a sqrt(2/psi))]")
    for a, b in [(-3, -1), (-1, 0), (0, 1), (1, 3)]:
        got = band_measure(T, math.exp(a), math.exp(b), samples=grid).value
        want = gaussian_band_prediction(T, a, b)
        print(f"  [{a:+d}, {b:+d}]   measured {got:9.1f}   predicted {want:9.1f}   ratio {got / want:.3f}")


if __name__ == "__main__":
    main()
