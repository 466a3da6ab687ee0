"""Catalogue of generating functions mapping 1/s onto rationals in z^-1.

Five families are supported, each parameterized by the sampling time T and,
for the interpolated ones, a weight alpha in [0, 1]:

    euler          T / (1 - x)
    tustin         (T/2) (1 + x) / (1 - x)
    simpson        (T/3) (1 + 4x + x^2) / ((1 + x)(1 - x))
    al-alaoui      alpha * euler + (1 - alpha) * tustin
                   = (T(1+alpha)/2) (1 + ((1-alpha)/(1+alpha)) x) / (1 - x)
    chen-vinagre   alpha * simpson + (1 - alpha) * tustin
                   = (T(3-alpha)/6) (1 + (2(3+alpha)/(3-alpha)) x + x^2)
                     / ((1 + x)(1 - x))

with x = z^-1.  The canonical orientation is the INTEGRATOR (the mixtures
above are integrator identities); the differentiator is its reciprocal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadAlpha, BadT
from .poly import Polynomial, RationalFn, from_roots, roots

EULER = "euler"
TUSTIN = "tustin"
SIMPSON = "simpson"
AL_ALAOUI = "al-alaoui"
CHEN_VINAGRE = "chen-vinagre"

PURE_FAMILIES = (EULER, TUSTIN, SIMPSON)
INTERPOLATED_FAMILIES = (AL_ALAOUI, CHEN_VINAGRE)
FAMILIES = PURE_FAMILIES + INTERPOLATED_FAMILIES

#: conventional fixed weights (Al-Alaoui's classical operator uses 3/4;
#: the mixed Tustin-Simpson scheme has no canonical weight, 1/2 is used)
NOMINAL_ALPHA = {AL_ALAOUI: 0.75, CHEN_VINAGRE: 0.5}

#: pole/zero pairs closer than this are considered removable
CANCEL_TOL = 1e-9


@dataclass(frozen=True)
class GeneratingFunction:
    """A family tag plus its parameters; alpha is ignored for pure families."""

    family: str
    alpha: float = 0.0
    T: float = 1.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not 0.0 <= self.alpha <= 1.0:
            raise BadAlpha(f"alpha={self.alpha} outside [0, 1]")
        if not self.T > 0.0:
            raise BadT(f"sampling time T={self.T} must be positive")


def _cancel_common_factors(r: RationalFn, tol: float = CANCEL_TOL) -> RationalFn:
    """Remove numerator/denominator root pairs closer than ``tol``.

    Only fires when a pair is actually detected, so exact coefficient
    constructions pass through untouched.
    """
    if r.num.degree < 1 or r.den.degree < 1:
        return r
    nr = list(roots(r.num))
    dr = list(roots(r.den))
    kept_n = []
    cancelled = False
    for rn in nr:
        hit = None
        for i, rd in enumerate(dr):
            if abs(rn - rd) <= tol * max(1.0, abs(rd)):
                hit = i
                break
        if hit is None:
            kept_n.append(rn)
        else:
            del dr[hit]
            cancelled = True
    if not cancelled:
        return r
    n_lead = r.num.coeffs[r.num.degree]
    d_lead = r.den.coeffs[r.den.degree]
    return RationalFn(from_roots(kept_n, n_lead), from_roots(dr, d_lead))


def integrator_form(gf: GeneratingFunction) -> RationalFn:
    """Rational approximation of 1/s for ``gf``, canonicalized.

    The interpolated families return the simplified pure-family form at
    alpha exactly 0 or 1, with removable factors already cancelled.
    """
    T = gf.T
    family, alpha = gf.family, gf.alpha
    if family == AL_ALAOUI:
        if alpha == 1.0:
            family = EULER
        elif alpha == 0.0:
            family = TUSTIN
    elif family == CHEN_VINAGRE:
        if alpha == 1.0:
            family = SIMPSON
        elif alpha == 0.0:
            family = TUSTIN

    if family == EULER:
        r = RationalFn(Polynomial([T]), Polynomial([1.0, -1.0]))
    elif family == TUSTIN:
        r = RationalFn(Polynomial([T / 2, T / 2]), Polynomial([1.0, -1.0]))
    elif family == SIMPSON:
        r = RationalFn(Polynomial([T / 3, 4 * T / 3, T / 3]), Polynomial([1.0, 0.0, -1.0]))
    elif family == AL_ALAOUI:
        s = T * (1 + alpha) / 2
        r = RationalFn(
            Polynomial([s, s * (1 - alpha) / (1 + alpha)]),
            Polynomial([1.0, -1.0]),
        )
    else:  # chen-vinagre, interior alpha
        s = T * (3 - alpha) / 6
        r = RationalFn(
            Polynomial([s, s * 2 * (3 + alpha) / (3 - alpha), s]),
            Polynomial([1.0, 0.0, -1.0]),
        )
    return _cancel_common_factors(r).canonical()


def differentiator_form(gf: GeneratingFunction) -> RationalFn:
    """Rational approximation of s: the reciprocal of :func:`integrator_form`."""
    return integrator_form(gf).reciprocal().canonical()


def orientation_form(gf: GeneratingFunction, kind: str) -> RationalFn:
    """Dispatch on the element kind ("integrator" or "differentiator")."""
    if kind == "integrator":
        return integrator_form(gf)
    if kind == "differentiator":
        return differentiator_form(gf)
    raise ValueError(f"unknown element kind {kind!r}")


def is_interpolated(family: str) -> bool:
    return family in INTERPOLATED_FAMILIES


def family_degree(family: str) -> int:
    """Degree of the family's rational form (max of num/den degrees)."""
    return 2 if family in (SIMPSON, CHEN_VINAGRE) else 1
