"""Rational IIR approximation of fractional-order differ-integrators.

A generating function (Euler, Tustin, Simpson, or a weighted interpolation
of them) is raised to a fractional power as a power series, and the
series' diagonal Pade convergent becomes an order-n IIR filter for
s^gamma or s^-gamma.  The interpolation weight can be tuned by a genetic
algorithm against a weighted magnitude/phase deviation from the ideal
element.
"""

from .cfe import (
    ContinuedFraction,
    IIRFilter,
    PowerSeries,
    RealizationSpec,
    cf_terms,
    collapse,
    convergent,
    realize,
    series_fractional_power,
)
from .genfunc import (
    FAMILIES,
    GeneratingFunction,
    NOMINAL_ALPHA,
    differentiator_form,
    integrator_form,
)
from .objective import ObjectiveConfig, ObjectiveValue, evaluate, evaluate_alpha
from .optimize import GAConfig, OptimizationResult, ga_minimize, grid_search
from .poly import Polynomial, RationalFn, eval_unit_circle, roots
from .response import (
    BodeSample,
    FrequencyGrid,
    default_grid,
    filter_response,
    ideal_response,
    make_grid,
    simpson_recurrence,
)
from .stability import StabilityReport, analyze, invert, reflect_unstable_poles

__version__ = "0.1.0"

__all__ = [
    "BodeSample",
    "ContinuedFraction",
    "FAMILIES",
    "FrequencyGrid",
    "GAConfig",
    "GeneratingFunction",
    "IIRFilter",
    "NOMINAL_ALPHA",
    "ObjectiveConfig",
    "ObjectiveValue",
    "OptimizationResult",
    "Polynomial",
    "PowerSeries",
    "RationalFn",
    "RealizationSpec",
    "StabilityReport",
    "analyze",
    "cf_terms",
    "collapse",
    "convergent",
    "default_grid",
    "differentiator_form",
    "eval_unit_circle",
    "evaluate",
    "evaluate_alpha",
    "filter_response",
    "ga_minimize",
    "grid_search",
    "ideal_response",
    "integrator_form",
    "invert",
    "make_grid",
    "realize",
    "reflect_unstable_poles",
    "roots",
    "series_fractional_power",
    "simpson_recurrence",
]
