"""Shared test utilities: comparisons and the extended-precision Pade oracle.

The oracle is deliberately independent of the library's convergent path:
the operand series is produced through log/exp recurrences (not the direct
power recurrence) and the [n/n] Pade system is solved densely with mpmath
at 50 significant digits.
"""

import mpmath as mp
import numpy as np

mp.mp.dps = 50


def assert_coeffs_close(actual, expected, rtol, label=""):
    """Per-coefficient relative comparison with a scale floor.

    A coefficient that is essentially zero relative to the largest expected
    coefficient is compared absolutely against that floor instead of by
    ratio, so exact zeros do not divide by zero.
    """
    a = np.asarray(actual, dtype=float)
    e = np.asarray(expected, dtype=float)
    assert a.shape == e.shape, f"{label}: shape {a.shape} vs {e.shape}"
    scale = np.max(np.abs(e))
    floor = 1e-9 * scale
    for k, (av, ev) in enumerate(zip(a, e)):
        tol = rtol * max(abs(ev), floor)
        assert abs(av - ev) <= tol, (
            f"{label}: coeff {k}: {av!r} vs {ev!r} "
            f"(|delta|={abs(av - ev):.3e}, tol={tol:.3e})"
        )


def max_rel_err(actual, expected):
    a = np.asarray(actual, dtype=float)
    e = np.asarray(expected, dtype=float)
    scale = np.max(np.abs(e))
    return max(
        abs(av - ev) / max(abs(ev), 1e-9 * scale) for av, ev in zip(a, e)
    )


def _mp_series_div(num, den, K):
    q = [mp.mpf(0)] * (K + 1)
    for k in range(K + 1):
        acc = num[k] if k < len(num) else mp.mpf(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * q[k - j]
        q[k] = acc / den[0]
    return q


def mp_fractional_power_series(num, den, gamma, K):
    """Series of (num/den)**gamma via log/exp recurrences in mpmath."""
    num = [mp.mpf(v) for v in num]
    den = [mp.mpf(v) for v in den]
    g = _mp_series_div(num, den, K)
    # L = log(g):  m L_m g_0 = m g_m - sum_{j=1..m-1} j L_j g_{m-j}
    L = [mp.log(g[0])]
    for m in range(1, K + 1):
        acc = m * g[m]
        for j in range(1, m):
            acc -= j * L[j] * g[m - j]
        L.append(acc / (m * g[0]))
    # E = exp(gamma L):  m E_m = gamma sum_{j=1..m} j L_j E_{m-j}
    gamma = mp.mpf(gamma)
    E = [g[0] ** gamma]
    for m in range(1, K + 1):
        acc = mp.mpf(0)
        for j in range(1, m + 1):
            acc += j * L[j] * E[m - j]
        E.append(gamma * acc / m)
    return E


def mp_pade(series, n):
    """Dense [n/n] Pade solve of a series (mpf list) at 50 digits.

    Returns (num, den) as float arrays normalized to den[0] = 1.
    """
    c = list(series)
    A = mp.matrix(n, n)
    rhs = mp.matrix(n, 1)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            k = n + i - j
            A[i - 1, j - 1] = c[k] if k >= 0 else mp.mpf(0)
        rhs[i - 1] = -c[n + i]
    q = mp.lu_solve(A, rhs)
    qfull = [mp.mpf(1)] + [q[i] for i in range(n)]
    p = []
    for k in range(n + 1):
        acc = mp.mpf(0)
        for j in range(0, min(k, n) + 1):
            acc += qfull[j] * c[k - j]
        p.append(acc)
    return (
        np.array([float(v) for v in p]),
        np.array([float(v) for v in qfull]),
    )
