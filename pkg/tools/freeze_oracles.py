"""Print the reference values frozen into the test suite.

Every value here comes from mpmath at 30 digits or from a brute-force
computation that shares no code with the package, so the tests compare the
package against independent arithmetic. Run with ``python3 tools/freeze_oracles.py``.
"""

import mpmath as mp

mp.mp.dps = 30


def main():
    print("theta(100) =", mp.nstr(mp.siegeltheta(100), 20))
    print("theta(20) =", mp.nstr(mp.siegeltheta(20), 20))
    print("theta(3) =", mp.nstr(mp.siegeltheta(3), 20))
    print("zeta(1/2) =", mp.nstr(mp.zeta(0.5), 20))
    for t in (5, 17.5, 50, 99.9, 1000, 5000.25):
        print(f"Z({t}) =", mp.nstr(mp.siegelz(t), 20))
    z = mp.zeta(mp.mpc(0.5, 1000))
    print("zeta(1/2+1000i) =", mp.nstr(z.real, 20), mp.nstr(z.imag, 20))
    for n in (1, 2, 29, 30, 649):
        print(f"gamma_{n} =", mp.nstr(mp.zetazero(n).imag, 20))
    print("main(100) =", mp.nstr(100 / (2 * mp.pi) * mp.log(100 / (2 * mp.pi)) - 100 / (2 * mp.pi) + mp.mpf(7) / 8, 20))
    print("main(20) =", mp.nstr(20 / (2 * mp.pi) * mp.log(20 / (2 * mp.pi)) - 20 / (2 * mp.pi) + mp.mpf(7) / 8, 20))
    print("phi(1) =", mp.nstr(mp.quad(lambda u: mp.exp(-u * u / 2), [-mp.inf, 0, 1]) / mp.sqrt(2 * mp.pi), 20))
    print("phi(-2.5) =", mp.nstr(mp.quad(lambda u: mp.exp(-u * u / 2), [-mp.inf, -2.5]) / mp.sqrt(2 * mp.pi), 20))
    f = lambda t: 1 - (mp.sinpi(t) / (mp.pi * t)) ** 2 if t else mp.mpf(0)
    for a in (0.5, 1, 2):
        print(f"montgomery({a}) =", mp.nstr(mp.quad(f, [0, a]), 20))
    print("zeta(2, em) =", mp.nstr(mp.zeta(2), 20))
    z = mp.zeta(mp.mpc(0.75, 40))
    print("zeta(0.75+40i) =", mp.nstr(z.real, 20), mp.nstr(z.imag, 20))
    # mu{0 < t <= 100 : |Z| <= 1} by a midpoint Riemann sum at step 2e-3
    h = mp.mpf("0.002")
    n = 50000
    inside = sum(1 for k in range(n) if abs(mp.siegelz(h * (k + mp.mpf(0.5)))) <= 1)
    print("mu(A_1(100)) midpoint sum =", mp.nstr(inside * h, 12))


if __name__ == "__main__":
    main()
