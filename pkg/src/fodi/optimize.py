"""Real-coded GA over the interpolation weight, plus a grid-search oracle.

The landscape is a single bounded real variable, so the GA is deliberately
conventional: tournament selection, blend (BLX-0.5) crossover, clipped
Gaussian mutation and a small elite.  The behavioral contract is that it
must not lose to an exhaustive 1e-3 grid search on the catalogue
objectives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import AllInfeasible

Objective = Callable[[float], float]


@dataclass(frozen=True)
class GAConfig:
    population: int = 24
    generations: int = 60
    crossover_rate: float = 0.9
    mutation_rate: float = 0.15
    mutation_sigma: float = 0.05
    tournament: int = 3
    elitism: int = 2
    seed: int = 0
    bounds: tuple = (0.0, 1.0)

    def __post_init__(self):
        lo, hi = self.bounds
        if not (0.0 <= lo < hi <= 1.0):
            raise ValueError(f"bounds {self.bounds} must be within [0, 1]")
        if self.population < 4:
            raise ValueError("population must be at least 4")
        if not 0 <= self.elitism < self.population:
            raise ValueError("elitism must be smaller than the population")


@dataclass(frozen=True)
class OptimizationResult:
    alpha_opt: float
    J_min: float
    J_nominal: float
    history: tuple = field(default_factory=tuple)
    evaluations: int = 0


def grid_search(objective: Objective, lo: float, hi: float, step: float):
    """Exhaustive minimum over the inclusive grid lo, lo+step, ..., hi.

    Ties break toward the smaller argument.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    count = int(round((hi - lo) / step))
    best_a, best_j = lo, math.inf
    for k in range(count + 1):
        a = min(lo + k * step, hi)
        j = objective(a)
        if j < best_j:
            best_a, best_j = a, j
    return best_a, best_j


def ga_minimize(objective: Objective, cfg: GAConfig,
                nominal_alpha: float | None = None) -> OptimizationResult:
    """Minimize a total objective over cfg.bounds; deterministic per seed.

    ``nominal_alpha`` optionally names the family's conventional weight;
    its objective value is reported alongside for dominance comparisons.
    """
    rng = np.random.default_rng(cfg.seed)
    lo, hi = cfg.bounds
    evaluations = 0

    def fitness(a: float) -> float:
        nonlocal evaluations
        evaluations += 1
        return float(objective(float(a)))

    # seed the corners and the midpoint, fill the rest uniformly
    pop = np.empty(cfg.population)
    pop[0], pop[1], pop[2] = lo, hi, 0.5 * (lo + hi)
    pop[3:] = rng.uniform(lo, hi, cfg.population - 3)
    scores = np.array([fitness(a) for a in pop])
    if not np.any(np.isfinite(scores)):
        raise AllInfeasible("no feasible individual in the initial population")

    history = []
    for _ in range(cfg.generations):
        order = np.argsort(scores, kind="stable")
        pop, scores = pop[order], scores[order]
        history.append(float(scores[0]))

        children = list(pop[: cfg.elitism])
        child_scores = list(scores[: cfg.elitism])
        while len(children) < cfg.population:
            pair = []
            for _ in range(2):
                contenders = rng.integers(0, cfg.population, cfg.tournament)
                pair.append(pop[contenders[np.argmin(scores[contenders])]])
            p1, p2 = pair
            if rng.random() < cfg.crossover_rate:
                span = abs(p1 - p2)
                lo_b = min(p1, p2) - 0.5 * span
                hi_b = max(p1, p2) + 0.5 * span
                c1 = rng.uniform(lo_b, hi_b)
                c2 = rng.uniform(lo_b, hi_b)
            else:
                c1, c2 = p1, p2
            for c in (c1, c2):
                if rng.random() < cfg.mutation_rate:
                    c += rng.normal(0.0, cfg.mutation_sigma)
                c = float(np.clip(c, lo, hi))
                if len(children) < cfg.population:
                    children.append(c)
                    child_scores.append(fitness(c))
        pop = np.array(children)
        scores = np.array(child_scores)
        if not np.any(np.isfinite(scores)):
            raise AllInfeasible("entire generation evaluated infeasible")

    best = int(np.argmin(scores))
    history.append(float(scores[best]))
    running = np.minimum.accumulate(history)

    j_nominal = fitness(nominal_alpha) if nominal_alpha is not None else math.nan
    return OptimizationResult(
        alpha_opt=float(pop[best]),
        J_min=float(scores[best]),
        J_nominal=j_nominal,
        history=tuple(float(v) for v in running),
        evaluations=evaluations,
    )
