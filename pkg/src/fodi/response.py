"""Frequency grids, ideal fractional-element responses, and Bode data."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cfe import IIRFilter
from .errors import BadRange
from .poly import NEAR_POLE_REL, RationalFn

#: lower edge of any evaluation band, rad/s
OMEGA_FLOOR = 1e-4

#: default number of grid points
DEFAULT_POINTS = 1000


def nyquist(T: float) -> float:
    """Band upper edge pi/T in rad/s."""
    return np.pi / T


@dataclass(frozen=True)
class FrequencyGrid:
    """Strictly increasing log-spaced angular frequencies, rad/s."""

    omegas: tuple

    @property
    def count(self) -> int:
        return len(self.omegas)

    def array(self) -> np.ndarray:
        return np.asarray(self.omegas)


@dataclass(frozen=True)
class BodeSample:
    omega: float
    mag_db: float
    phase_deg: float


def make_grid(omega_min: float, omega_max: float, N: int) -> FrequencyGrid:
    """N log-spaced points on [omega_min, omega_max], endpoints included."""
    if N < 2:
        raise BadRange(f"need at least 2 grid points, got {N}")
    if not 0.0 < omega_min < omega_max:
        raise BadRange(f"need 0 < omega_min < omega_max, got [{omega_min}, {omega_max}]")
    if omega_min < OMEGA_FLOOR:
        raise BadRange(f"omega_min={omega_min} below the {OMEGA_FLOOR} rad/s floor")
    return FrequencyGrid(tuple(np.geomspace(omega_min, omega_max, N)))


def default_grid(T: float, N: int = DEFAULT_POINTS) -> FrequencyGrid:
    """The standard evaluation band [1e-4, pi/T]."""
    return make_grid(OMEGA_FLOOR, nyquist(T), N)


def ideal_response(gamma: float, kind: str, grid: FrequencyGrid) -> list:
    """Bode data of the ideal element s^gamma (or s^-gamma).

    A differentiator has magnitude 20*gamma*log10(omega) dB and constant
    phase +90*gamma degrees; an integrator negates both.
    """
    sign = 1.0 if kind == "differentiator" else -1.0
    w = grid.array()
    mag = sign * 20.0 * gamma * np.log10(w)
    phase = sign * 90.0 * gamma
    return [BodeSample(float(o), float(m), phase) for o, m in zip(w, mag)]


def _freq_eval(tf: RationalFn, omegas: np.ndarray, T: float):
    """Vectorized unit-circle evaluation with a near-pole exclusion mask."""
    x = np.exp(-1j * omegas * T)
    num = np.polyval(np.asarray(tf.num.coeffs)[::-1], x)
    den = np.polyval(np.asarray(tf.den.coeffs)[::-1], x)
    guard = NEAR_POLE_REL * np.max(np.abs(tf.den.coeffs))
    ok = np.abs(den) >= guard
    H = np.empty_like(x)
    H[ok] = num[ok] / den[ok]
    H[~ok] = np.nan
    return H, ok


def response_curves(tf: RationalFn, grid: FrequencyGrid, T: float):
    """(omegas, mag_db, phase_deg, kept_mask) for the non-excluded points.

    Phase is unwrapped along ascending frequency, seeded at the lowest
    kept point; excluded (near-pole) points are dropped before unwrapping.
    """
    w = grid.array()
    H, ok = _freq_eval(tf, w, T)
    kept = H[ok]
    mag = 20.0 * np.log10(np.abs(kept))
    phase = np.degrees(np.unwrap(np.angle(kept)))
    return w[ok], mag, phase, ok


def filter_response(f: IIRFilter, grid: FrequencyGrid):
    """Bode samples of a realized filter plus the excluded-point count."""
    w, mag, phase, ok = response_curves(f.tf, grid, f.spec.gf.T)
    samples = [
        BodeSample(float(o), float(m), float(p)) for o, m, p in zip(w, mag, phase)
    ]
    return samples, int(np.size(ok) - np.count_nonzero(ok))


def simpson_recurrence(x, T: float) -> np.ndarray:
    """Time-domain output of y[k] = (T/3)(x[k] + 4x[k-1] + x[k-2]) + y[k-2].

    Zero initial conditions; this is the quadratic-fit quadrature rule whose
    z-transform is the second-order integrator map, used as a cross-check
    oracle for the transfer-function path.
    """
    x = np.asarray(x, dtype=float)
    y = np.zeros_like(x)
    for k in range(x.size):
        acc = x[k]
        if k >= 1:
            acc += 4.0 * x[k - 1]
        if k >= 2:
            acc += x[k - 2]
        y[k] = (T / 3.0) * acc
        if k >= 2:
            y[k] += y[k - 2]
    return y
