"""Fractional powers of generating functions and their rational convergents.

The realization pipeline is

    generating function -> R(x)          rational, analytic at x = 0
    R(x)**gamma         -> power series  truncated Taylor coefficients
    series              -> [n/n] convergent (diagonal Pade), the IIR filter

The convergent is produced by developing the series into a regular
continued fraction (Viskovatov form, constant partial denominators and
linear-in-x partial numerators) and collapsing the first 2n terms with the
three-term recurrence.  Degenerate developments fall back to a direct
Toeplitz solve of the Pade system.  Both paths must re-expand to the input
series through x^(2n); that residual check is what certifies a convergent.

All series and convergent arithmetic runs in extended precision
(numpy longdouble, 80-bit on x86) and is rounded to double at the end.
Raw convergents can span twenty-plus decades before normalization, so the
extra digits are not optional.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import Breakdown, NotAnalytic, SingularTable
from .genfunc import GeneratingFunction, orientation_form
from .poly import Polynomial, RationalFn

LD = np.longdouble

#: guard terms appended past the 2n+1 coefficients a convergent needs
GUARD_TERMS = 4

#: per-coefficient relative tolerance of the convergent residual check
RESIDUAL_RTOL = 1e-7

#: leading coefficients below this (relative) are a CF breakdown
BREAKDOWN_REL = 1e-12

KINDS = ("differentiator", "integrator")


@dataclass(frozen=True)
class PowerSeries:
    """Truncated Taylor coefficients about x = 0; coeffs[k] multiplies x^k."""

    coeffs: tuple

    def __init__(self, coeffs):
        c = tuple(float(v) for v in coeffs)
        if not c:
            raise ValueError("empty power series")
        object.__setattr__(self, "coeffs", c)

    @property
    def truncation(self) -> int:
        """K such that powers x^0 .. x^K are represented."""
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class ContinuedFraction:
    """Terms (a_i, b_i) of a_0 + b_1 x / (a_1 + b_2 x / (a_2 + ...)).

    The development used here is the regular (Viskovatov) normal form:
    a_i = 1 for i >= 1 and the b_i carry the information.  b_0 is unused
    and stored as 0.  The term list is diagnostic; only collapsed
    convergents enter the filter pipeline.
    """

    terms: tuple

    def __init__(self, terms):
        object.__setattr__(
            self, "terms", tuple((float(a), float(b)) for a, b in terms)
        )

    @property
    def depth(self) -> int:
        return len(self.terms) - 1


@dataclass(frozen=True)
class RealizationSpec:
    """What to realize: s^(+-gamma) at a given order with a given base map."""

    gamma: float
    kind: str
    order: int
    gf: GeneratingFunction

    def __post_init__(self):
        if not 0.0 < self.gamma <= 1.0:
            raise ValueError(f"gamma={self.gamma} outside (0, 1]")
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if self.order < 1:
            raise ValueError("order must be a positive integer")


@dataclass(frozen=True)
class IIRFilter:
    """A realized discrete-time approximation of s^(+-gamma)."""

    tf: RationalFn
    spec: RealizationSpec
    num_degree: int
    den_degree: int


# ----------------------------------------------------------------------
# extended-precision series kernels
# ----------------------------------------------------------------------

def _series_div(num, den, K: int) -> np.ndarray:
    """First K+1 Taylor coefficients of num(x)/den(x); den[0] != 0."""
    num = np.asarray(num, dtype=LD)
    den = np.asarray(den, dtype=LD)
    q = np.zeros(K + 1, dtype=LD)
    for k in range(K + 1):
        acc = num[k] if k < len(num) else LD(0)
        j = min(k, len(den) - 1)
        if j >= 1:
            acc -= np.dot(den[1 : j + 1], q[k - j : k][::-1])
        q[k] = acc / den[0]
    return q


def _series_inv(g: np.ndarray) -> np.ndarray:
    """Reciprocal series of g to the same truncation; g[0] != 0."""
    inv = np.zeros_like(g)
    inv[0] = 1 / g[0]
    for k in range(1, len(g)):
        j = min(k, len(g) - 1)
        inv[k] = -np.dot(g[1 : j + 1], inv[k - j : k][::-1]) / g[0]
    return inv


def _series_pow(g: np.ndarray, gamma, K: int) -> np.ndarray:
    """Taylor coefficients of g(x)**gamma via the power recurrence.

    With f = g**gamma, differentiating f' g = gamma f g' termwise gives

        k c_k = sum_{j=1..k} (gamma j - (k - j)) g_j c_{k-j} / g_0

    which needs only g_0 != 0 (and g_0 > 0 for a real branch).
    """
    gamma = LD(gamma)
    c = np.zeros(K + 1, dtype=LD)
    c[0] = g[0] ** gamma
    for k in range(1, K + 1):
        j = min(k, len(g) - 1)
        weights = gamma * np.arange(1, j + 1, dtype=LD) - np.arange(k - 1, k - j - 1, -1, dtype=LD)
        c[k] = np.dot(weights * g[1 : j + 1], c[k - j : k][::-1]) / (k * g[0])
    return c


def _viskovatov_terms(c: np.ndarray, depth: int):
    """Regular C-fraction terms of the series c, up to ``depth`` of them.

    Development step: with f = a + x g(x), set b = g(0) and recurse on
    f' = b / g (constant term 1).  A remainder that vanishes entirely
    terminates the fraction (the series was rational); a vanishing g(0)
    with nonzero higher terms is a genuine breakdown.
    """
    scale = float(np.max(np.abs(c)))
    terms = [(c[0], LD(0))]
    f = np.array(c, dtype=LD)
    for i in range(1, depth + 1):
        g = f[1:]
        if g.size == 0 or float(np.max(np.abs(g))) <= BREAKDOWN_REL * scale:
            break
        b = g[0]
        if abs(float(b)) <= BREAKDOWN_REL * float(np.max(np.abs(g))):
            raise Breakdown(f"vanishing partial numerator at depth {i}")
        f = b * _series_inv(g)
        terms.append((LD(1), b))
    return terms


def _collapse_terms(terms):
    """Three-term recurrence turning CF terms into (num, den) arrays."""
    p_prev, p = np.array([LD(1)]), np.array([terms[0][0]], dtype=LD)
    q_prev, q = np.array([LD(0)]), np.array([LD(1)])
    for a, b in terms[1:]:
        p_new = np.zeros(max(len(p), len(p_prev) + 1), dtype=LD)
        p_new[: len(p)] = a * p
        p_new[1 : len(p_prev) + 1] += b * p_prev
        q_new = np.zeros(max(len(q), len(q_prev) + 1), dtype=LD)
        q_new[: len(q)] = a * q
        q_new[1 : len(q_prev) + 1] += b * q_prev
        p_prev, p, q_prev, q = p, p_new, q, q_new
        m = max(float(np.max(np.abs(p))), float(np.max(np.abs(q))))
        if m > 1e80:  # joint rescale; the ratio is unchanged
            p, p_prev, q, q_prev = p / m, p_prev / m, q / m, q_prev / m
    return p, q


def _pade_toeplitz(c: np.ndarray, n: int):
    """Direct [n/n] Pade solve: q_0 = 1, Toeplitz system for q_1..q_n.

    Gaussian elimination with partial pivoting in longdouble; a vanishing
    pivot is treated as a free variable set to zero, which serves the
    rank-deficient-but-consistent tables (gamma = 1 on a low-degree
    rational).  The residual check decides whether the answer stands.
    """
    A = np.zeros((n, n + 1), dtype=LD)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            k = n + i - j
            A[i - 1, j - 1] = c[k] if k >= 0 else LD(0)
        A[i - 1, n] = -c[n + i]
    pivots = []
    col_scale = float(np.max(np.abs(A))) or 1.0
    for col in range(n):
        piv = col + int(np.argmax(np.abs(A[col:, col])))
        A[[col, piv]] = A[[piv, col]]
        if abs(float(A[col, col])) <= 1e-18 * col_scale:
            A[col, col:] = LD(0)  # free variable -> q[col+1] = 0
            continue
        pivots.append(abs(float(A[col, col])))
        for r in range(col + 1, n):
            A[r, col:] -= (A[r, col] / A[col, col]) * A[col, col:]
    q = np.zeros(n + 1, dtype=LD)
    q[0] = LD(1)
    for r in range(n - 1, -1, -1):
        if A[r, r] == 0:
            q[r + 1] = LD(0)
            continue
        q[r + 1] = (A[r, n] - np.dot(A[r, r + 1 : n], q[r + 2 : n + 1])) / A[r, r]
    p = np.array(
        [np.dot(q[: k + 1], c[k :: -1][: k + 1]) for k in range(n + 1)], dtype=LD
    )
    cond = (max(pivots) / min(pivots)) if pivots else np.inf
    return p, q, cond


def _residual_ok(c: np.ndarray, p: np.ndarray, q: np.ndarray, through: int,
                 rtol: float = RESIDUAL_RTOL) -> bool:
    """Does p/q re-expand to c through x^through, per-coefficient relative?"""
    if abs(float(q[0])) == 0.0:
        return False
    back = _series_div(p, q, through)
    ref = np.asarray(c[: through + 1], dtype=LD)
    scale = float(np.max(np.abs(ref)))
    for a, b in zip(back, ref):
        if abs(float(a - b)) > rtol * max(abs(float(b)), 1e-9 * scale):
            return False
    return True


def _convergent_core(c: np.ndarray, n: int):
    """Viskovatov development with direct-solve fallback, residual-checked."""
    p = q = None
    try:
        terms = _viskovatov_terms(c, 2 * n)
        p, q = _collapse_terms(terms)
    except Breakdown:
        pass
    if p is None or len(p) > n + 1 or len(q) > n + 1 or not _residual_ok(c, p, q, 2 * n):
        p, q, cond = _pade_toeplitz(c, n)
        if not _residual_ok(c, p, q, 2 * n):
            raise SingularTable(
                f"[{n}/{n}] Pade system failed the residual check", condition=cond
            )
    return p, q


def _operand_series(r: RationalFn, gamma: float, K: int) -> np.ndarray:
    """Longdouble series of r(x)**gamma; validates analyticity at x = 0."""
    num = np.asarray(r.num.coeffs, dtype=LD)
    den = np.asarray(r.den.coeffs, dtype=LD)
    nscale = float(np.max(np.abs(num)))
    dscale = float(np.max(np.abs(den)))
    if dscale == 0.0 or abs(float(den[0])) <= 1e-300 * dscale:
        raise NotAnalytic("denominator vanishes at x = 0")
    if nscale == 0.0 or abs(float(num[0])) <= 1e-300 * nscale:
        raise NotAnalytic("numerator vanishes at x = 0")
    g = _series_div(num, den, K)
    if float(g[0]) <= 0.0:
        raise NotAnalytic(
            "operand constant term is not positive; no real fractional power branch"
        )
    return _series_pow(g, gamma, K)


# ----------------------------------------------------------------------
# public operations
# ----------------------------------------------------------------------

def series_fractional_power(r: RationalFn, gamma: float, K: int) -> PowerSeries:
    """First K+1 Taylor coefficients of (num/den)**gamma about x = 0.

    Any scalar prefactor carried by ``r`` (e.g. the generating-function
    gain) ends up folded into the coefficients through c_0 = r(0)**gamma.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    return PowerSeries(_operand_series(r, gamma, K).astype(float))


def cf_terms(s: PowerSeries, depth: int) -> ContinuedFraction:
    """Continued-fraction development of a power series to ``depth`` terms.

    Raises :class:`Breakdown` on a degenerate (defective-table) step; the
    caller is expected to fall back to :func:`convergent`'s direct solve.
    """
    if depth > s.truncation - 1 and depth > 0:
        raise ValueError(f"depth {depth} needs at least {depth + 1} coefficients")
    if s.coeffs[0] == 0.0:
        raise Breakdown("series constant term is zero")
    terms = _viskovatov_terms(np.asarray(s.coeffs, dtype=LD), depth)
    return ContinuedFraction([(float(a), float(b)) for a, b in terms])


def collapse(cf: ContinuedFraction) -> RationalFn:
    """Collapse CF terms into a rational function via the three-term recurrence."""
    p, q = _collapse_terms([(LD(a), LD(b)) for a, b in cf.terms])
    return RationalFn(Polynomial(p.astype(float)), Polynomial(q.astype(float))).canonical()


def convergent(s: PowerSeries, n: int) -> RationalFn:
    """The [n/n] rational matching ``s`` through x^(2n), canonicalized.

    Equivalent to truncating the continued-fraction expansion at depth 2n;
    computed via the CF development with a Toeplitz-solve fallback, and
    certified by re-expansion against ``s``.
    """
    if s.truncation < 2 * n:
        raise ValueError(f"[{n}/{n}] convergent needs at least {2 * n + 1} coefficients")
    p, q = _convergent_core(np.asarray(s.coeffs, dtype=LD), n)
    return RationalFn(Polynomial(p.astype(float)), Polynomial(q.astype(float))).canonical()


def realize(spec: RealizationSpec) -> IIRFilter:
    """Order-n IIR approximation of s^(+-gamma) for the given base map.

    Differentiators are realized by direct expansion of the
    differentiator-oriented operand, not by inverting the integrator
    realization; inversion is a separate, stability-aware operation.
    """
    n = spec.order
    base = orientation_form(spec.gf, spec.kind)
    c = _operand_series(base, spec.gamma, 2 * n + GUARD_TERMS)
    p, q = _convergent_core(c, n)
    tf = RationalFn(Polynomial(p.astype(float)), Polynomial(q.astype(float))).canonical()
    return IIRFilter(
        tf=tf, spec=spec, num_degree=tf.num.degree, den_degree=tf.den.degree
    )
