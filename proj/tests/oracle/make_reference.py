#!/usr/bin/env python3
"""Writes tests/reference_values.hpp from independent high-precision oracles.

Kernels come from exact monomial moments (beta/Dirichlet integrals) and the
moment-matrix formula K_n(x,y) = m(x)^T M^{-1} m(y), P_n = K_n - K_{n-1};
nothing here shares code or formulas with the C++ library.
"""
import itertools
import pathlib

import mpmath as mp

mp.mp.dps = 50


def monomials(d, n):
    out = []
    for deg in range(n + 1):
        for e in itertools.product(range(deg + 1), repeat=d):
            if sum(e) == deg:
                out.append(e)
    return out


def ball_moment(kappa, mu, nu, e):
    if any(k % 2 for k in e):
        return mp.mpf(0)
    d = len(kappa)
    g = sum(kappa)
    radial = mp.beta((sum(e) + 2 * g + 2 * nu + d) / mp.mpf(2), mu + mp.mpf(1) / 2) / 2
    halves = [(ei + 2 * ki + 1) / mp.mpf(2) for ei, ki in zip(e, kappa)]
    sphere = 2 * mp.fprod(mp.gamma(h) for h in halves) / mp.gamma(mp.fsum(halves))
    return radial * sphere


def simplex_moment(kappa, mu, nu, e):
    a = [ei + ki + mp.mpf(1) / 2 for ei, ki in zip(e, kappa)]
    A = mp.fsum(a)
    return mp.fprod(mp.gamma(x) for x in a) / mp.gamma(A) * mp.beta(A + nu, mu + mp.mpf(1) / 2)


def reproducing(moment, kappa, mu, nu, n, x, y):
    d = len(kappa)
    mons = monomials(d, n)
    m0 = moment(kappa, mu, nu, (0,) * d)
    M = mp.matrix(len(mons), len(mons))
    for i, a in enumerate(mons):
        for j, b in enumerate(mons):
            M[i, j] = moment(kappa, mu, nu, tuple(p + q for p, q in zip(a, b))) / m0
    mx = mp.matrix([mp.fprod(mp.mpf(c) ** p for c, p in zip(x, a)) for a in mons])
    my = mp.matrix([mp.fprod(mp.mpf(c) ** p for c, p in zip(y, a)) for a in mons])
    return (mx.T * mp.lu_solve(M, my))[0]


def kernel(moment, kappa, mu, nu, n, x, y):
    k = reproducing(moment, kappa, mu, nu, n, x, y)
    if n > 0:
        k -= reproducing(moment, kappa, mu, nu, n - 1, x, y)
    return k


def fmt(v):
    return mp.nstr(v, 20, min_fixed=-3, max_fixed=3)


def arr(v):
    return "{" + ", ".join(repr(float(c)) for c in v) + "}"


cases = [
    ("ball", [0.5, 0.0], 1.0, 0.5, [0.3, -0.4], [-0.5, 0.2]),
    ("ball", [0.0, 0.0], 0.5, 0.0, [0.6, 0.1], [0.2, 0.7]),
    ("ball", [0.3, 0.7], 0.0, 1.5, [-0.2, 0.5], [0.45, 0.35]),
    ("ball", [0.3, 0.7, 0.5], 0.5, 0.5, [0.2, -0.3, 0.4], [-0.1, 0.5, 0.3]),
    ("ball", [0.5, 0.0, 0.0], 1.0, 0.0, [0.5, 0.1, -0.2], [0.1, -0.6, 0.3]),
    ("simplex", [0.3, 0.7], 0.5, 0.5, [0.2, 0.3], [0.5, 0.1]),
    ("simplex", [0.0, 0.0], 1.0, 0.0, [0.1, 0.6], [0.35, 0.35]),
    ("simplex", [0.5, 0.0, 0.0], 0.0, 1.5, [0.2, 0.1, 0.3], [0.1, 0.5, 0.2]),
]

lines = [
    "#pragma once",
    "",
    "// Generated by tests/oracle/make_reference.py (mpmath, 50 digits). Do not edit.",
    "",
    "#include <vector>",
    "",
    "namespace reference {",
    "",
    "struct KernelCase {",
    "  const char* domain;",
    "  std::vector<double> kappa;",
    "  double mu, nu;",
    "  std::vector<double> x, y;",
    "  std::vector<double> values;  // P_n(x,y), n = 0..4",
    "};",
    "",
    "inline const std::vector<KernelCase> kernels = {",
]
for dom, kappa, mu, nu, x, y in cases:
    moment = ball_moment if dom == "ball" else simplex_moment
    kk = [mp.mpf(k) for k in kappa]
    vals = [kernel(moment, kk, mp.mpf(mu), mp.mpf(nu), n, x, y) for n in range(5)]
    lines.append(f'    {{"{dom}", {arr(kappa)}, {mu!r}, {nu!r}, {arr(x)}, {arr(y)},')
    lines.append("     {" + ", ".join(fmt(v) for v in vals) + "}},")
lines.append("};")
lines.append("")

half = mp.mpf(1) / 2
scalars = {}
# P_5^{(1/2,-1/2)}(0.3) from the hypergeometric series.
scalars["jacobi_5_half_mhalf_03"] = mp.jacobi(5, half, -half, mp.mpf("0.3"))
# Squared norm of P_2^{(3/2,-1/2)} under the probability-normalized weight.
w = lambda t: (1 - t) ** mp.mpf(1.5) * (1 + t) ** (-half)
scalars["jacobi_norm_2_15_mhalf"] = mp.quad(lambda t: mp.jacobi(2, 1.5, -half, t) ** 2 * w(t), [-1, 1]) / mp.quad(
    w, [-1, 1])
# Z_4^{3/2}(-0.2) = ((n+l)/l) C_n^l.
scalars["gegenbauer_Z_4_15_m02"] = (4 + mp.mpf(1.5)) / mp.mpf(1.5) * mp.gegenbauer(4, 1.5, mp.mpf("-0.2"))
# C_2^{(1,1/2)}(0.4) = (3/2)_1/(1)_1 P_1^{(1/2,0)}(2*0.16-1).
scalars["gen_gegenbauer_2_1_half_04"] = mp.mpf(1.5) * mp.jacobi(1, half, 0, 2 * mp.mpf("0.16") - 1)
# int t^6 (1-t)^{1/2} (1+t)^{-1/2} dt as a beta integral: 2^{a+b+1} sum_k C(6,k)(-1)^(6-k) 2^k B(...)
a, b = half, -half
scalars["jacobi_moment_t6"] = mp.quad(lambda t: t**6 * (1 - t) ** a * (1 + t) ** b, [-1, 0, 1])
# Normalized second moment of the ball weight, d=2, kappa=(0.3,0.7), mu=1, nu=1/2.
kap = [mp.mpf("0.3"), mp.mpf("0.7")]
m0 = ball_moment(kap, mp.mpf(1), half, (0, 0))
scalars["ball_norm2_moment"] = (ball_moment(kap, mp.mpf(1), half, (2, 0)) + ball_moment(kap, mp.mpf(1), half,
                                                                                       (0, 2))) / m0
# Normalized first moment of the simplex weight, d=2, kappa=(0.3,0.7), mu=1, nu=1/2.
s0 = simplex_moment(kap, mp.mpf(1), half, (0, 0))
scalars["simplex_x1_moment"] = simplex_moment(kap, mp.mpf(1), half, (1, 0)) / s0
# b_{kappa,mu,nu} = 1 / int_B W dx, same parameters.
scalars["b_ball_03_07_1_half"] = 1 / m0
# Uniform ball second moment, d=3: 1/(d+2).
scalars["ball_x1sq_uniform_d3"] = ball_moment([0, 0, 0], half, 0, (2, 0, 0)) / ball_moment([0, 0, 0], half, 0, (0, 0, 0))

for k, v in scalars.items():
    lines.append(f"inline constexpr double {k} = {fmt(v)};")
lines += ["", "}  // namespace reference", ""]

out = pathlib.Path(__file__).resolve().parent.parent / "reference_values.hpp"
out.write_text("\n".join(lines))
print(out)
