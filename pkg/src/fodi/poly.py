"""Polynomials and rational functions in x = z^-1 with real coefficients.

Coefficients are stored in ascending powers of x, i.e. ``coeffs[k]``
multiplies ``x**k``.  This is the natural order for power-series and
Toeplitz indexing, and it matches how discrete transfer functions are
written in ascending powers of z^-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegreeZero, NearPole

#: coefficients with |c| <= TRIM_REL * max|c| are treated as convolution noise
TRIM_REL = 1e-12

#: |den(x)| below NEAR_POLE_REL * max|den coeffs| counts as a pole hit
NEAR_POLE_REL = 1e-12


def _trim(coeffs: np.ndarray, rel: float = TRIM_REL) -> np.ndarray:
    """Drop trailing coefficients that are negligible next to the largest one."""
    c = np.asarray(coeffs, dtype=float)
    scale = np.max(np.abs(c)) if c.size else 0.0
    if scale == 0.0:
        return np.zeros(1)
    keep = c.size
    while keep > 1 and abs(c[keep - 1]) <= rel * scale:
        keep -= 1
    return c[:keep].copy()


@dataclass(frozen=True)
class Polynomial:
    """Real polynomial in x = z^-1, ascending coefficient order."""

    coeffs: tuple

    def __init__(self, coeffs: Sequence[float]):
        c = [float(v) for v in coeffs]
        if not c:
            raise ValueError("empty coefficient sequence; the zero polynomial is [0]")
        if not all(np.isfinite(c)):
            raise ValueError("non-finite polynomial coefficient")
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        c = _trim(np.asarray(self.coeffs))
        return len(c) - 1

    def is_zero(self) -> bool:
        return all(v == 0.0 for v in self.coeffs)

    def trimmed(self) -> "Polynomial":
        return Polynomial(_trim(np.asarray(self.coeffs)))

    def __call__(self, x):
        """Evaluate at a (possibly complex, possibly array) point via Horner."""
        acc = 0.0 * np.asarray(x) + self.coeffs[-1]
        for c in self.coeffs[-2::-1]:
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(n)
        a[: len(self.coeffs)] = self.coeffs
        a[: len(other.coeffs)] += other.coeffs
        return Polynomial(_trim(a))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(n)
        a[: len(self.coeffs)] = self.coeffs
        a[: len(other.coeffs)] -= other.coeffs
        return Polynomial(_trim(a))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial([0.0])
        return Polynomial(_trim(np.convolve(self.coeffs, other.coeffs)))

    def scaled(self, factor: float) -> "Polynomial":
        return Polynomial(np.asarray(self.coeffs) * float(factor))


def from_roots(root_list, leading: float = 1.0, imag_tol: float = 1e-10) -> Polynomial:
    """Rebuild a real polynomial (ascending in x) from its root multiset.

    ``leading`` multiplies the monic product.  Residual imaginary parts of
    the reconstructed coefficients must stay below ``imag_tol`` relative to
    the coefficient scale; conjugate root pairs therefore have to be passed
    together.
    """
    roots = np.asarray(list(root_list), dtype=complex)
    if roots.size == 0:
        return Polynomial([float(leading)])
    desc = np.poly(roots) * complex(leading)
    scale = np.max(np.abs(desc))
    if scale > 0 and np.max(np.abs(desc.imag)) > imag_tol * scale:
        raise ValueError("root set is not closed under conjugation")
    return Polynomial(desc.real[::-1])


def roots(p: Polynomial) -> np.ndarray:
    """All complex roots of ``p`` in x, companion-matrix based.

    One Newton polish step is applied to every eigenvalue.  Raises
    :class:`DegreeZero` for (numerically) constant polynomials.
    """
    c = _trim(np.asarray(p.coeffs))
    if len(c) < 2:
        raise DegreeZero("constant polynomial has no roots")
    r = np.roots(c[::-1])
    dc = c[1:] * np.arange(1, len(c))
    for i, x0 in enumerate(r):
        fp = np.polyval(dc[::-1], x0)
        if fp != 0:
            step = np.polyval(c[::-1], x0) / fp
            if np.isfinite(step):
                r[i] = x0 - step
    return r


@dataclass(frozen=True)
class RationalFn:
    """Ratio of two real polynomials in x = z^-1."""

    num: Polynomial
    den: Polynomial

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def reciprocal(self) -> "RationalFn":
        if self.num.is_zero():
            raise ZeroDivisionError("cannot invert: zero numerator")
        return RationalFn(self.den, self.num)

    def canonical(self) -> "RationalFn":
        """Normalize so the denominator's constant term is 1.

        If the constant term vanishes, the leading nonzero denominator
        coefficient is scaled to 1 instead.  Printed convergents carry an
        arbitrary overall scale; only canonical forms are comparable.
        """
        num = _trim(np.asarray(self.num.coeffs))
        den = _trim(np.asarray(self.den.coeffs))
        pivot = den[0]
        if pivot == 0.0:
            pivot = den[np.flatnonzero(den)[0]]
        return RationalFn(Polynomial(num / pivot), Polynomial(den / pivot))


def eval_unit_circle(r: RationalFn, omega: float, T: float) -> complex:
    """Evaluate ``r`` at z = e^{j omega T}, i.e. at x = e^{-j omega T}.

    Parameters
    ----------
    omega : frequency in rad/s, 0 < omega <= pi/T (up to rounding).
    T : sampling time in seconds.

    Raises
    ------
    NearPole
        When ``|den(x)|`` falls below ``NEAR_POLE_REL * max|den coeffs|``,
        e.g. for an integrator pole at z = 1 as omega -> 0.
    """
    if omega <= 0.0 or omega > np.pi / T * (1 + 1e-12):
        raise ValueError(f"omega={omega} outside (0, pi/T] for T={T}")
    x = np.exp(-1j * omega * T)
    d = complex(r.den(x))
    guard = NEAR_POLE_REL * max(abs(c) for c in r.den.coeffs)
    if abs(d) < guard:
        raise NearPole(omega, abs(d))
    return complex(r.num(x)) / d
