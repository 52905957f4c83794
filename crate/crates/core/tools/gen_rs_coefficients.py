#!/usr/bin/env python3
"""Regenerate src/zeros/rs_coefficients.rs.

Expands psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) as a power series in
x = p - 1/2 at 120 significant digits, then forms the Riemann-Siegel remainder
functions C0..C4 from derivatives of psi and rounds their coefficients to f64.
"""
import mpmath as mp

mp.mp.dps = 120
K = 45
D = 2 * K
a = 2 * mp.pi
b = 5 * mp.pi / 8

# psi(x) = -cos(2 pi x^2 - 5 pi / 8) / cos(2 pi x), even in x; series in y = x^2.
num = []
for k in range(K):
    c = (-1) ** (k // 2) * a ** k / mp.factorial(k) * (mp.cos(b) if k % 2 == 0 else mp.sin(b))
    num.append(-c)
den = [(-1) ** k * (2 * mp.pi) ** (2 * k) / mp.factorial(2 * k) for k in range(K)]
q = []
for k in range(K):
    q.append((num[k] - sum(q[j] * den[k - j] for j in range(k))) / den[0])

psi = [mp.mpf(0)] * D
for k in range(K):
    psi[2 * k] = q[k]


def deriv(s, m):
    out = [mp.mpf(0)] * len(s)
    for n in range(m, len(s)):
        out[n - m] = s[n] * mp.factorial(n) / mp.factorial(n - m)
    return out


def comb(*terms):
    out = [mp.mpf(0)] * D
    for c, m in terms:
        d = deriv(psi, m)
        for i in range(D):
            out[i] += c * d[i]
    return out


pi = mp.pi
C = [
    comb((1, 0)),
    comb((-1 / (96 * pi ** 2), 3)),
    comb((1 / (64 * pi ** 2), 2), (1 / (18432 * pi ** 4), 6)),
    comb((-1 / (64 * pi ** 2), 1), (-1 / (3840 * pi ** 4), 5), (-1 / (5308416 * pi ** 6), 9)),
    comb(
        (1 / (128 * pi ** 2), 0),
        (mp.mpf(19) / (24576 * pi ** 4), 4),
        (mp.mpf(11) / (5898240 * pi ** 6), 8),
        (1 / (2038431744 * pi ** 8), 12),
    ),
]

lines = [
    "// Generated by tools/gen_rs_coefficients.py; do not edit by hand.",
    "",
    "//! Power-series coefficients of the Riemann-Siegel remainder functions",
    "//! C0..C4 in the variable x = p - 1/2, where p is the fractional part of",
    "//! sqrt(t / 2 pi). Index i holds the coefficient of x^i.",
    "",
]
for k, c in enumerate(C):
    t = [float(v) for v in c]
    n = len(t)
    while n > 0 and abs(t[n - 1]) * 0.5 ** (n - 1) < 1e-22:
        n -= 1
    t = t[:n]
    lines.append(f"pub(crate) const C{k}: [f64; {n}] = [")
    for v in t:
        lines.append(f"    {v!r},")
    lines.append("];")
    lines.append("")
open("../src/zeros/rs_coefficients.rs", "w").write("\n".join(lines))
