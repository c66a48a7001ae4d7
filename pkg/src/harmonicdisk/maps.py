"""Harmonic maps ``f = s + conj(t)``, class parameters, extremal constructors.

The map family studied here is cut out of the normalized harmonic functions
by a three-parameter differential inequality; see :mod:`harmonicdisk.membership`
for the inequality itself.  This module owns the data model: the parameter
triple, the normalized map, the sharp extremal constructors, and the analytic
slices ``s + eps*t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NormalizationError
from .sampling import MembershipVerdict, PolarGrid, verdict_from_margins
from .series import COEFF_TOL, DEFAULT_ORDER, TruncatedSeries, check_disk_point, eval_many

#: A holding sense-preservation verdict with margin below this is flagged
#: near-degenerate: extremal maps attain equality only as |z| -> 1, so
#: boundary grids need a soft signal distinct from failure.
NEAR_DEGENERATE_MARGIN = 1e-6


@dataclass(frozen=True)
class ClassParams:
    """Parameter triple (gamma, delta, lam) with 0 <= lam < gamma <= delta."""

    gamma: float
    delta: float
    lam: float

    def __post_init__(self):
        for name in ("gamma", "delta", "lam"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v)):
                raise DomainError(f"{name} must be a finite real number")
            object.__setattr__(self, name, float(v))
        if self.delta < self.gamma:
            raise DomainError(f"gamma <= delta violated: gamma={self.gamma}, delta={self.delta}")
        if not 0.0 <= self.lam < self.gamma:
            raise DomainError(f"0 <= lambda < gamma violated: lambda={self.lam}, gamma={self.gamma}")

    def coefficient_weight(self, m: int) -> float:
        """The multiplier m^2 * [2*gamma + (delta-gamma)*(m-1)] of index m."""
        return m * m * (2.0 * self.gamma + (self.delta - self.gamma) * (m - 1))

    def coefficient_budget(self) -> float:
        """Right side 2*(gamma - lambda) of the sufficient coefficient sum."""
        return 2.0 * (self.gamma - self.lam)


def _check_normalized(series: TruncatedSeries, want_unit_slope: bool, label: str) -> None:
    if series.order < 1:
        raise NormalizationError(f"{label} must have order >= 1")
    c0 = series.coeff(0)
    c1 = series.coeff(1)
    if abs(c0) > COEFF_TOL:
        raise NormalizationError(f"{label}[0]: {label}(0) must be 0, got {c0}")
    if want_unit_slope:
        if abs(c1 - 1.0) > COEFF_TOL:
            raise NormalizationError(f"{label}[1]: {label}'(0) must be 1, got {c1}")
    else:
        if abs(c1) > COEFF_TOL:
            raise NormalizationError(f"{label}[1]: {label}'(0) must be 0, got {c1}")


@dataclass(frozen=True)
class HarmonicMap:
    """Normalized planar harmonic map ``f(z) = s(z) + conj(t(z))``.

    Normalization: s(0) = 0, s'(0) = 1, t(0) = t'(0) = 0, enforced up to the
    series tolerance.  The analytic part s and co-analytic part t may be
    stored at different truncation orders.
    """

    s: TruncatedSeries
    t: TruncatedSeries

    def __post_init__(self):
        _check_normalized(self.s, want_unit_slope=True, label="s")
        _check_normalized(self.t, want_unit_slope=False, label="t")

    @property
    def order(self) -> int:
        return max(self.s.order, self.t.order)

    def evaluate(self, z: complex) -> complex:
        """Map value ``s(z) + conj(t(z))`` for |z| <= 1."""
        z = check_disk_point(z)
        return self.s.evaluate(z) + self.t.evaluate(z).conjugate()

    def analytic_slice(self, eps: complex) -> TruncatedSeries:
        """The analytic function ``s + eps*t`` for unimodular eps.

        Membership of the harmonic map in the inequality class is equivalent
        to all of these slices satisfying the analytic form of the
        inequality, which is what makes them the work-horse of the sampled
        checks.
        """
        eps = complex(eps)
        if abs(abs(eps) - 1.0) > 1e-12:
            raise DomainError(f"slice parameter must satisfy |eps| = 1, got |eps| = {abs(eps)}")
        n = max(self.s.order, self.t.order)
        return TruncatedSeries(self.s.pad_to(n).coeffs + eps * self.t.pad_to(n).coeffs)


def evaluate_map_many(f: HarmonicMap, z: np.ndarray) -> np.ndarray:
    """Vectorized ``s(z) + conj(t(z))`` on an array of disk points."""
    return eval_many(f.s, z) + np.conj(eval_many(f.t, z))


def identity_map(order: int = 1) -> HarmonicMap:
    """The map f(z) = z, padded to the requested order."""
    return HarmonicMap(TruncatedSeries.identity(order), TruncatedSeries.zero(max(order, 1)))


def make_extremal_single(p: ClassParams, m: int, order: int | None = None) -> HarmonicMap:
    """Map ``z + c * conj(z)**m`` attaining the sharp co-analytic bound at index m.

    The coefficient is c = 2*(gamma - lam) / (m^2 * [2*gamma + (delta-gamma)*(m-1)]).
    """
    if m < 2:
        raise DomainError("extremal coefficient index must be >= 2")
    order = max(DEFAULT_ORDER, m) if order is None else order
    if order < m:
        raise DomainError("order must be at least the coefficient index")
    c = p.coefficient_budget() / p.coefficient_weight(m)
    return HarmonicMap(
        TruncatedSeries.identity(order),
        TruncatedSeries.monomial(m, c, order=order),
    )


def make_extremal_full(p: ClassParams, order: int = DEFAULT_ORDER) -> HarmonicMap:
    """Analytic map ``z + sum_m a_m z**m`` attaining every modulus bound at once.

    Each a_m equals 4*(gamma - lam) / (m^2 * [2*gamma + (delta-gamma)*(m-1)]),
    twice the single-index co-analytic bound; t is identically zero.  The same
    series generates the sharp growth envelope, so evaluating this map at real
    positive z reproduces the upper growth bound term for term.
    """
    if order < 2:
        raise DomainError("full extremal needs order >= 2")
    coeffs = np.zeros(order + 1, dtype=np.complex128)
    coeffs[1] = 1.0
    for m in range(2, order + 1):
        coeffs[m] = 2.0 * p.coefficient_budget() / p.coefficient_weight(m)
    return HarmonicMap(TruncatedSeries(coeffs), TruncatedSeries.zero(order))


def sense_preserving_check(f: HarmonicMap, grid: PolarGrid | None = None) -> MembershipVerdict:
    """Sampled check of |s'(z)| > |t'(z)|, the sense-preservation criterion.

    Margin is the minimum of |s'| - |t'| over the grid; the witness is the
    argmin point.  Holding verdicts with margin below
    :data:`NEAR_DEGENERATE_MARGIN` carry the near-degenerate flag.
    """
    grid = grid or PolarGrid()
    pts = grid.points()
    sp = eval_many(f.s.derivative(), pts)
    tp = eval_many(f.t.derivative(), pts)
    margins = np.abs(sp) - np.abs(tp)
    return verdict_from_margins(
        margins, pts, grid.describe(), degenerate_below=NEAR_DEGENERATE_MARGIN
    )
