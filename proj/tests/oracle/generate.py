"""Regenerates tests/oracle_values.hpp from mpmath (30 digits, more where noted)."""
import mpmath as mp

mp.mp.dps = 30
out = []


def c(v):
    v = mp.mpc(v)
    return "{%s, %s}" % (mp.nstr(v.real, 20), mp.nstr(v.imag, 20))


def r(v):
    return mp.nstr(mp.mpf(v), 20)


def table(name, rows, kind):
    out.append("inline const %s %s[] = {" % (kind, name))
    for row in rows:
        out.append("    {%s}," % ", ".join(row))
    out.append("};")


gamma_pts = [mp.mpc(0.5, 0), mp.mpc(3.7, 0), mp.mpc(0.3, 1.2), mp.mpc(-2.5, 0.7), mp.mpc(-7.3, -3.1),
             mp.mpc(12.5, 30), mp.mpc(-20.2, 15), mp.mpc(1, -45), mp.mpc(45, 0.1), mp.mpc(0.001, 0),
             mp.mpc(-0.999, 0), mp.mpc(1, 1)]
table("kGammaOracle", [[c(w), c(mp.gamma(w))] for w in gamma_pts], "ComplexPair")

si_pts = [0.1, 0.5, 1, 2, 3.9, 4.1, 7.5, 10, 33.3, 100, 1e4]
table("kSiCiOracle", [[r(x), r(mp.si(x)), r(mp.ci(x))] for x in si_pts], "RealTriple")

hyp_pts = [(mp.mpc(1, -0.5), mp.mpc(0, 0.5), mp.mpc(1, -2), 0.3),
           (mp.mpc(0.5, 1), mp.mpc(-1.5, 2), mp.mpc(2.5, -1), 0.65),
           (mp.mpc(1, -0.025), mp.mpc(0, 0.025), mp.mpc(1, -32.5), 0.5),
           (mp.mpc(3, 0), mp.mpc(-2, 0), mp.mpc(0.5, 0), 0.9),
           (mp.mpc(1, -4), mp.mpc(0, 4), mp.mpc(1, 2.6), 0.1)]
table("kHypOracle", [[c(a), c(b), c(cc), r(x), c(mp.hyp2f1(a, b, cc, x))] for a, b, cc, x in hyp_pts],
      "HypRow")

leg_pts = [(mp.mpc(0, 2), mp.mpc(0, -2), 0.6043677771171636), (mp.mpc(0.3, 0.4), mp.mpc(-0.5, 1.2), -0.35),
           (mp.mpc(0, 0.7), mp.mpc(0.25, 0), 0.0)]
table("kLegendreOracle",
      [[c(mu), c(nu), r(t), c(mp.legenp(nu, mu, t, type=2))] for mu, nu, t in leg_pts], "LegendreRow")


def psi_plus_smooth(z, al, k, x):
    a, b = 1 - z / (2 * al), z / (2 * al)
    ika = 1j * k / al
    if x >= 0:
        xi = 1 / (mp.exp(2 * al * x) + 1)
        g = mp.gamma(1 + b - ika) * mp.gamma(1 - b - ika) / mp.gamma(1 - ika) ** 2
        return g * 2 * k / (2 * k + 1j * z) * mp.exp(1j * k * x) * mp.hyp2f1(a, b, 1 - ika, xi) / mp.sqrt(2 * mp.pi)
    xi = 1 / (mp.exp(-2 * al * x) + 1)
    R = -(mp.gamma(1 + ika) * mp.gamma(1 + b - ika) * mp.gamma(1 - b - ika) / mp.gamma(1 - ika)
          * (2 * al / mp.pi) * mp.sinh(mp.pi * 1j * z / (2 * al)) / (2 * k + 1j * z))
    return (mp.exp(1j * k * x) * mp.hyp2f1(a, b, 1 + ika, xi)
            + R * mp.exp(-1j * k * x) * mp.hyp2f1(a, b, 1 - ika, xi)) / mp.sqrt(2 * mp.pi)


def psi_minus_smooth_legendre(z, al, k, x):
    # Independent route through the Ferrers function; near tau = -1 it needs extra digits.
    with mp.workdps(80):
        return mp.gamma(1 - 1j * k / al) * mp.legenp(-z / (2 * al), 1j * k / al, -mp.tanh(al * x), type=2) / mp.sqrt(2 * mp.pi)


smooth_pts = [(2j, 0.5, 1.2, 0.7), (2j, 0.5, 1.2, -1.3), (2j, 2.0, 2.5, 0.2), (2j, 2.0, 0.4, -0.6),
              (-1j, 1.5, mp.mpc(0.8, 0.3), 1.1), (2j, 40.0, 1.3, 0.8)]
table("kSmoothOracle",
      [[c(z), r(al), c(k), r(x), c(psi_plus_smooth(mp.mpc(z), al, mp.mpc(k), x)),
        c(psi_minus_smooth_legendre(mp.mpc(z), al, mp.mpc(k), x))] for z, al, k, x in smooth_pts],
      "SmoothRow")


def cauchy_quad(rr, k0, A):
    f = lambda k: mp.exp(1j * k * rr) / (k - k0)
    eps = mp.mpf(0.25)
    left = mp.quad(f, mp.linspace(-A, k0 - eps, 40))
    right = mp.quad(f, mp.linspace(k0 + eps, A, 40))
    arc = mp.quad(lambda t: f(k0 + eps * mp.exp(1j * (mp.pi - t))) * (-1j * eps * mp.exp(1j * (mp.pi - t))), [0, mp.pi])
    return left + arc + right


cauchy_pts = [(0.5, 1.0, 20.0), (2.0, 1.0, 10.0), (0.1, -0.7, 5.0), (3.3, 2.0, 30.0)]
table("kCauchyOracle", [[r(rr), r(k0), r(A), c(cauchy_quad(rr, k0, A))] for rr, k0, A in cauchy_pts],
      "CauchyRow")


# sup of 2|(1 + 1/xi) sin xi| and of Si(r)(1 + r)/r, at their interior stationary points
sin_factor = lambda x: (1 + 1 / x) * mp.sin(x)
xi_star = mp.findroot(lambda x: mp.diff(sin_factor, x), 1.2)
si_ratio = lambda t: mp.si(t) * (1 + t) / t
r_star = mp.findroot(lambda t: mp.diff(si_ratio, t), 3.0)
out.append("inline constexpr double kSinFactorSup = %s;" % r(2 * sin_factor(xi_star)))
out.append("inline constexpr double kSiRatioSup = %s;" % r(si_ratio(r_star)))
out.append("inline constexpr double kSiAtPi = %s;" % r(mp.si(mp.pi)))

header = ["#pragma once", "", "// Generated by tests/oracle/generate.py (mpmath, 30+ digits). Do not edit.", "",
          "#include <complex>", "", "namespace oracle {", "",
          "using C = std::complex<double>;",
          "struct ComplexPair { C w, value; };",
          "struct RealTriple { double x, si, ci; };",
          "struct HypRow { C a, b, c; double arg; C value; };",
          "struct LegendreRow { C mu, nu; double tau; C value; };",
          "struct SmoothRow { C z; double alpha; C k; double x; C psi_plus, psi_minus; };",
          "struct CauchyRow { double r, k0, A; C value; };", ""]
print("\n".join(header + out + ["", "}  // namespace oracle"]))
