"""Independent reference computations used to freeze expected test values.

These deliberately avoid the library's own evaluation paths: plain brute
force summation (with a first-order tail correction), iterated averaging for
alternating series, and arbitrary-precision direct sums.
"""

import math

import mpmath as mp
import numpy as np


def brute_2f1_at_1(c, a, b, n=200000):
    """Partial sums of F(c, a; b; 1) plus a t_n * n / (b-a-c) tail estimate."""
    k = np.arange(n, dtype=float)
    ratios = (c + k) * (a + k) / ((b + k) * (k + 1.0))
    terms = np.cumprod(ratios)
    s = 1.0 + terms.sum()
    return float(s + terms[-1] * n / (b - a - c))


def averaged_alternating_2f1_at_minus1(a, b, n=60):
    """F(a, b; a-b+1; -1) by iterated averaging of partial sums."""
    t = 1.0
    parts = [1.0]
    for k in range(n):
        t *= -(a + k) * (b + k) / ((a - b + 1.0 + k) * (k + 1.0))
        parts.append(parts[-1] + t)
    row = parts
    while len(row) > 1:
        row = [0.5 * (row[i] + row[i + 1]) for i in range(len(row) - 1)]
    return row[0]


def mp_phi(alpha, beta, x, dps=40):
    """Direct high-precision sum of the phi series."""
    with mp.workdps(dps):
        a, b, z = mp.mpf(alpha), mp.mpf(beta), mp.mpf(x)
        term = mp.mpf(1)
        total = mp.mpf(1)
        k = 0
        while True:
            term = term * (a + k) * z / ((b + k) * (k + 1))
            total += term
            if abs(term) < mp.eps * abs(total) and k > 5:
                return float(total)
            k += 1


def mp_psi(alpha, x, dps=40):
    with mp.workdps(dps):
        a, z = mp.mpf(alpha), mp.mpf(x)
        term = mp.mpf(1)
        total = mp.mpf(1)
        k = 0
        while True:
            term = term * z / ((a + k) * (k + 1))
            total += term
            if abs(term) < mp.eps * abs(total) and k > 5:
                return float(total)
            k += 1


#: 10 e^10 E1(10), the Laplace-kernel integral at alpha = beta = 1, x = 10,
#: computed with mpmath's exponential integral at 40 digits.
CHI_1_1_10 = 0.9156333393978808
