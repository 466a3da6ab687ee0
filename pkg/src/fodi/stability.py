"""Pole/zero analysis, filter inversion, and unstable-pole reflection.

The z-plane picture of a transfer function written in x = z^-1: a root of
a coefficient polynomial at x = x0 maps to z = 1/x0, and a degree deficit
(numerator shorter than denominator, or vice versa) contributes roots at
z = 0 for the shorter side.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .cfe import IIRFilter
from .errors import ZeroNumerator
from .poly import Polynomial, RationalFn, from_roots, roots

#: |p| within 1 +- UNIT_CIRCLE_TOL of the unit circle counts as marginal
UNIT_CIRCLE_TOL = 1e-9

STABLE = "stable"
MARGINAL = "marginally_stable"
UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityReport:
    poles: tuple
    zeros: tuple
    classification: str
    min_phase: bool


def _z_plane_roots(poly: Polynomial, deficit: int):
    """Map x-roots to z = 1/x and add ``deficit`` roots at z = 0."""
    out = [0j] * deficit
    if poly.degree >= 1:
        for x0 in roots(poly):
            out.append(1.0 / x0 if x0 != 0 else complex(np.inf))
    return out


def analyze(f: IIRFilter) -> StabilityReport:
    """Z-plane poles/zeros and the stability classification of a filter."""
    tf = f.tf
    dn = tf.num.degree
    dd = tf.den.degree
    zeros = _z_plane_roots(tf.num, max(dd - dn, 0))
    poles = _z_plane_roots(tf.den, max(dn - dd, 0))
    if poles:
        top = max(abs(p) for p in poles)
        if top > 1.0 + UNIT_CIRCLE_TOL:
            cls = UNSTABLE
        elif top >= 1.0 - UNIT_CIRCLE_TOL:
            cls = MARGINAL
        else:
            cls = STABLE
    else:
        cls = STABLE
    min_phase = all(abs(z) <= 1.0 + UNIT_CIRCLE_TOL for z in zeros)
    return StabilityReport(tuple(poles), tuple(zeros), cls, min_phase)


def invert(f: IIRFilter) -> IIRFilter:
    """Swap numerator and denominator and flip the element kind."""
    if f.tf.num.is_zero():
        raise ZeroNumerator("cannot invert a filter with zero numerator")
    tf = f.tf.reciprocal().canonical()
    kind = "integrator" if f.spec.kind == "differentiator" else "differentiator"
    return IIRFilter(
        tf=tf,
        spec=replace(f.spec, kind=kind),
        num_degree=tf.num.degree,
        den_degree=tf.den.degree,
    )


def reflect_unstable_poles(f: IIRFilter) -> IIRFilter:
    """Reflect every pole with |p| > 1 into the unit circle, gain-compensated.

    A pole p is replaced by 1/conj(p); on |z| = 1 the identity
    |z - p| = |p| * |z - 1/conj(p)| makes the swap magnitude-neutral once
    each reflected denominator factor is scaled by |p|.  Phase is knowingly
    altered.  Poles on the unit circle itself (the integrators' z = 1) are
    left alone.  Stable inputs pass through unchanged.
    """
    den = f.tf.den.trimmed()
    if den.degree < 1:
        return f
    x_roots = roots(den)
    # pole z = 1/x0 is outside the unit circle iff |x0| < 1 (within tol);
    # x0 = 0 (a pole at z = infinity) is not reflectable and left alone
    unstable = (np.abs(x_roots) < 1.0 / (1.0 + UNIT_CIRCLE_TOL)) & (np.abs(x_roots) > 0)
    if not np.any(unstable):
        return f
    new_roots = x_roots.copy()
    gain = 1.0
    for i in np.flatnonzero(unstable):
        x0 = x_roots[i]
        new_roots[i] = 1.0 / np.conj(x0)
        gain *= abs(x0)  # equals 1/|p|; scales den so |H| is preserved
    lead = den.coeffs[den.degree]
    new_den = from_roots(new_roots, lead * gain)
    tf = RationalFn(f.tf.num, new_den).canonical()
    return IIRFilter(
        tf=tf, spec=f.spec, num_degree=tf.num.degree, den_degree=tf.den.degree
    )
