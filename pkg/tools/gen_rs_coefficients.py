"""Generate the Riemann-Siegel correction polynomials C_0..C_4.

Each C_k(p) is a combination of derivatives of

    Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)

and is tabulated here as a power series in z = 2p - 1 (Psi is entire, so the
series converge on the whole of [-1, 1]). Run once with mpmath installed and
redirect the output into ``src/zetaline/_rs_tables.py``.
"""
import mpmath as mp

mp.mp.dps = 120
DEG = 110


def psi_series(deg):
    pi = mp.pi
    num = mp.taylor(lambda x: mp.cos(pi * x**2 / 2 - 5 * pi / 8), 0, deg)
    den = mp.taylor(lambda x: mp.cos(pi * x), 0, deg)
    out = []
    for n in range(deg + 1):
        acc = num[n] - sum(den[k] * out[n - k] for k in range(1, n + 1))
        out.append(acc / den[0])
    return [-c for c in out]


def deriv_p(coeffs, m):
    """m-th derivative with respect to p (d/dp = 2 d/dz) as a z-series."""
    c = list(coeffs)
    for _ in range(m):
        c = [2 * (n + 1) * c[n + 1] for n in range(len(c) - 1)] + [mp.mpf(0)]
    return c


def combo(terms, length):
    out = [mp.mpf(0)] * length
    for weight, series in terms:
        for n in range(length):
            out[n] += weight * series[n]
    return out


def main():
    pi = mp.pi
    psi = psi_series(DEG)
    d = {m: deriv_p(psi, m) for m in range(13)}
    L = DEG - 12
    cs = [
        combo([(1, d[0])], L),
        combo([(-1 / (96 * pi**2), d[3])], L),
        combo([(1 / (64 * pi**2), d[2]), (1 / (18432 * pi**4), d[6])], L),
        combo([(-1 / (64 * pi**2), d[1]), (-1 / (3840 * pi**4), d[5]),
               (-1 / (5308416 * pi**6), d[9])], L),
        combo([(1 / (128 * pi**2), d[0]), (19 / (24576 * pi**4), d[4]),
               (11 / (5898240 * pi**6), d[8]), (1 / (2038431744 * pi**8), d[12])], L),
    ]
    print('"""Riemann-Siegel correction polynomials C_0..C_4 in z = 2p - 1.')
    print('')
    print('Generated by tools/gen_rs_coefficients.py; do not edit by hand.')
    print('Coefficients are in increasing powers of z.')
    print('"""')
    print()
    for k, c in enumerate(cs):
        # drop the tail once terms are negligible on |z| <= 1
        last = max(n for n in range(L) if abs(c[n]) > mp.mpf("1e-22"))
        vals = [mp.nstr(c[n], 20) for n in range(last + 1)]
        zs = mp.linspace(-1, 1, 2001)
        peak = max(abs(mp.polyval(list(reversed(c[: last + 1])), z)) for z in zs)
        print(f"# degree {last}, max |C{k}| on [-1, 1] = {mp.nstr(peak, 8)}")
        print(f"_C{k} = (")
        for v in vals:
            print(f"    {v},")
        print(")")
        print()
    print("COEFFS = (_C0, _C1, _C2, _C3, _C4)")


if __name__ == "__main__":
    main()
