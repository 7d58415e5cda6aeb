#!/usr/bin/env python3
"""Generate Chebyshev coefficients and reference values for specfun.hpp.

The large-argument branch of the Bessel evaluators uses modulus/phase
Chebyshev expansions in z = 128/x^2 - 1 (x >= 8).  Coefficients are fitted
against mpmath at 50 digits and truncated at the 1e-19 level, then verified
on a dense grid.  Run from the repository root:

    python3 tools/gen_specfun_coeffs.py
"""

import mpmath as mp

mp.mp.dps = 50

X_SPLIT = 8.0
NFIT = 96


def modulus_phase(order, x):
    j = mp.besselj(order, x)
    y = mp.bessely(order, x)
    m = mp.sqrt(j * j + y * y)
    shift = mp.pi / 4 if order == 0 else 3 * mp.pi / 4
    # principal-value phase relative to the leading asymptotic phase x - shift
    delta = mp.arg((j + 1j * y) * mp.exp(-1j * (x - shift)))
    return m * mp.sqrt(mp.pi * x / 2), delta * x


def cheb_fit(f, n):
    nodes = [mp.cos(mp.pi * (j + mp.mpf(1) / 2) / n) for j in range(n)]
    vals = [f(z) for z in nodes]
    coeffs = []
    for k in range(n):
        s = mp.fsum(vals[j] * mp.cos(mp.pi * k * (j + mp.mpf(1) / 2) / n)
                    for j in range(n))
        coeffs.append(2 * s / n)
    return coeffs


def cheb_eval(coeffs, z):
    b0, b1 = mp.mpf(0), mp.mpf(0)
    for c in reversed(coeffs[1:]):
        b0, b1 = 2 * z * b0 - b1 + c, b0
    return z * b0 - b1 + coeffs[0] / 2


def x_of_z(z):
    return mp.sqrt(128 / (z + 1))


def fit_and_check(name, f):
    coeffs = cheb_fit(lambda z: f(x_of_z(z)), NFIT)
    ncut = NFIT
    while ncut > 1 and abs(coeffs[ncut - 1]) < mp.mpf("1e-19"):
        ncut -= 1
    coeffs = coeffs[:ncut]
    worst = mp.mpf(0)
    for i in range(2001):
        z = -1 + mp.mpf(2) * i / 2000
        x = x_of_z(z) if z > -1 else mp.mpf("1e8")
        approx = cheb_eval(coeffs, z)
        exact = f(x)
        worst = max(worst, abs(approx - exact) / abs(exact))
    print(f"// {name}: {ncut} terms, max rel fit error {mp.nstr(worst, 3)}")
    print(f"inline constexpr std::array<double, {ncut}> {name} = {{")
    for c in coeffs:
        print(f"    {mp.nstr(c, 19, strip_zeros=False)},")
    print("};\n")


def freeze_grid():
    xs = ["1e-8", "1e-6", "1e-3", "0.1", "0.5", "1.0", "2.0",
          "2.404825557695773", "3.0", "5.0", "7.9", "8.0", "8.1", "10.0",
          "15.7", "20.0", "31.4159", "50.0", "75.3", "100.0", "141.42",
          "200.0"]
    print("// x, J0, J1, Y0, Y1  (mpmath, 50 digits, rounded to double)")
    for xs_ in xs:
        x = mp.mpf(xs_)
        row = [x, mp.besselj(0, x), mp.besselj(1, x),
               mp.bessely(0, x), mp.bessely(1, x)]
        print("    {" + ", ".join(mp.nstr(v, 17) for v in row) + "},")


def freeze_mie(k, obs_angles):
    # sound-soft unit circle, incident direction (-1, 0), coefficients
    # a_m = -J_m(k)/H^(1)_m(k); far field in the e^{ikr}/sqrt(r) convention
    theta_d = mp.pi
    pref = mp.sqrt(2 / (mp.pi * k)) * mp.exp(-1j * mp.pi / 4)
    for th in obs_angles:
        s = mp.mpc(0)
        for m in range(0, 120):
            h = mp.besselj(m, k) + 1j * mp.bessely(m, k)
            a = -mp.besselj(m, k) / h
            term = a * mp.cos(m * (th - theta_d))
            s += term if m == 0 else 2 * term
        u = pref * s
        print(f"    // k={mp.nstr(k,17)} theta={mp.nstr(th,17)}")
        print("    {" + mp.nstr(mp.re(u), 17) + ", " + mp.nstr(mp.im(u), 17) + "},")


if __name__ == "__main__":
    fit_and_check("kM0Cheb", lambda x: modulus_phase(0, x)[0])
    fit_and_check("kT0Cheb", lambda x: modulus_phase(0, x)[1])
    fit_and_check("kM1Cheb", lambda x: modulus_phase(1, x)[0])
    fit_and_check("kT1Cheb", lambda x: modulus_phase(1, x)[1])
    print("// scalar references")
    print("Y1(1) =", mp.nstr(mp.bessely(1, mp.mpf(1)), 30))
    print("H0(1) =", mp.nstr(mp.besselj(0, mp.mpf(1)), 30), "+ i*",
          mp.nstr(mp.bessely(0, mp.mpf(1)), 30))
    print("y0 first zero =", mp.nstr(mp.findroot(lambda x: mp.bessely(0, x), 0.9), 30))
    print("j0 first zero =", mp.nstr(mp.findroot(lambda x: mp.besselj(0, x), 2.4), 30))
    freeze_grid()
    freeze_mie(mp.pi, [0, mp.pi / 3, mp.pi / 2, mp.pi])
    freeze_mie(2 * mp.pi, [0, mp.pi / 2])
