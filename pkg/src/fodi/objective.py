"""Weighted magnitude/phase deviation between a filter and the ideal element."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cfe import IIRFilter, RealizationSpec, realize
from .errors import FodiError, SpecMismatch
from .genfunc import GeneratingFunction
from .response import FrequencyGrid, nyquist, response_curves

NORMS = ("L1", "L2")


@dataclass(frozen=True)
class ObjectiveConfig:
    """Weight, band and units of the deviation cost.

    Magnitude deviations are in dB, phase deviations in degrees; the norm
    is L1 (sum of absolute deviations) unless L2 (Euclidean) is selected.
    """

    w: float
    grid: FrequencyGrid
    gamma: float
    kind: str
    T: float
    norm: str = "L1"

    def __post_init__(self):
        if not 0.0 <= self.w <= 1.0:
            raise ValueError(f"w={self.w} outside [0, 1]")
        if self.norm not in NORMS:
            raise ValueError(f"norm must be one of {NORMS}")
        if self.grid.omegas[-1] > nyquist(self.T) * (1 + 1e-12):
            raise ValueError("grid exceeds the Nyquist bound pi/T")


@dataclass(frozen=True)
class ObjectiveValue:
    J: float
    J_mag: float
    J_phase: float
    excluded_points: int


INFEASIBLE = ObjectiveValue(math.inf, math.inf, math.inf, 0)


def _norm(dev: np.ndarray, norm: str) -> float:
    # summation order is fixed ascending in omega for determinism
    if norm == "L1":
        return float(np.sum(np.abs(dev)))
    return float(np.sqrt(np.sum(dev * dev)))


def evaluate(f: IIRFilter, cfg: ObjectiveConfig) -> ObjectiveValue:
    """J = w * J_mag + (1 - w) * J_phase over the configured grid.

    Deviation convention is ideal minus filter.  Near-pole points are
    excluded from both components and counted.
    """
    spec = f.spec
    if (spec.gamma, spec.kind, spec.gf.T) != (cfg.gamma, cfg.kind, cfg.T):
        raise SpecMismatch(
            f"filter spec (gamma={spec.gamma}, kind={spec.kind}, T={spec.gf.T}) "
            f"does not match objective (gamma={cfg.gamma}, kind={cfg.kind}, T={cfg.T})"
        )
    w_kept, mag, phase, ok = response_curves(f.tf, cfg.grid, cfg.T)
    sign = 1.0 if cfg.kind == "differentiator" else -1.0
    ideal_mag = sign * 20.0 * cfg.gamma * np.log10(w_kept)
    ideal_phase = sign * 90.0 * cfg.gamma
    J_mag = _norm(ideal_mag - mag, cfg.norm)
    J_phase = _norm(ideal_phase - phase, cfg.norm)
    J = cfg.w * J_mag + (1.0 - cfg.w) * J_phase
    return ObjectiveValue(J, J_mag, J_phase, int(np.size(ok) - np.count_nonzero(ok)))


def evaluate_alpha(alpha: float, family: str, order: int, cfg: ObjectiveConfig) -> ObjectiveValue:
    """The 1-D objective seen by the optimizer: alpha -> J.

    Composes the generating function, the order-n realization and
    :func:`evaluate`.  A realization failure (singular table, breakdown)
    yields the infinite-cost sentinel so the optimizer stays total.
    """
    gf = GeneratingFunction(family, alpha=alpha, T=cfg.T)
    try:
        f = realize(RealizationSpec(cfg.gamma, cfg.kind, order, gf))
    except FodiError:
        return INFEASIBLE
    return evaluate(f, cfg)
