"""The third-order differential inequality and its membership tests.

The defining inequality of the map family, at parameters (gamma, delta, lam)
with 0 <= lam < gamma <= delta, reads

    Re[L s(z) - lam] > |L t(z)|        for all |z| < 1,

where L h = gamma*h' + delta*z*h'' + ((delta-gamma)/2)*z^2*h'''.  Sampled
checks evaluate the inequality on a polar grid; a failing verdict exhibits a
violating point, a holding verdict means "not falsified at this resolution".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NormalizationError
from .maps import ClassParams, HarmonicMap
from .sampling import MembershipVerdict, PolarGrid, verdict_from_margins
from .series import COEFF_TOL, TruncatedSeries, check_disk_point, eval_many


def _operator_values(h: TruncatedSeries, p: ClassParams, z: np.ndarray) -> np.ndarray:
    """L h on an array of disk points, via the three formal derivatives."""
    d1 = eval_many(h.derivative(1), z)
    d2 = eval_many(h.derivative(2), z)
    d3 = eval_many(h.derivative(3), z)
    return p.gamma * d1 + p.delta * z * d2 + 0.5 * (p.delta - p.gamma) * z * z * d3


def apply_operator(h: TruncatedSeries, p: ClassParams, z: complex) -> complex:
    """Value of gamma*h'(z) + delta*z*h''(z) + ((delta-gamma)/2)*z^2*h'''(z)."""
    z = check_disk_point(z)
    return complex(_operator_values(h, p, np.asarray(z)))


@dataclass(frozen=True)
class SufficientCondition:
    """Result of the coefficient-sum membership test.

    ``total`` is sum over m >= 2 of m^2*[2*gamma+(delta-gamma)*(m-1)] *
    (|a_m| + |b_m|); membership is guaranteed whenever it does not exceed
    ``budget`` = 2*(gamma - lam).
    """

    holds: bool
    total: float
    budget: float


def membership_sufficient(f: HarmonicMap, p: ClassParams) -> SufficientCondition:
    """Coefficient-sum test: sufficient (not necessary) for membership."""
    total = 0.0
    for m in range(2, f.order + 1):
        total += p.coefficient_weight(m) * (abs(f.s.coeff(m)) + abs(f.t.coeff(m)))
    budget = p.coefficient_budget()
    return SufficientCondition(holds=total <= budget, total=total, budget=budget)


def membership_sampled(
    f: HarmonicMap, p: ClassParams, grid: PolarGrid | None = None
) -> MembershipVerdict:
    """Sampled defining inequality: margin = min Re[L s] - lam - |L t|."""
    grid = grid or PolarGrid()
    pts = grid.points()
    ls = _operator_values(f.s, p, pts)
    lt = _operator_values(f.t, p, pts)
    margins = np.real(ls) - p.lam - np.abs(lt)
    return verdict_from_margins(margins, pts, grid.describe())


def slice_membership_sampled(
    f: HarmonicMap, p: ClassParams, n_eps: int = 16, grid: PolarGrid | None = None
) -> MembershipVerdict:
    """Sampled slice form of the inequality: Re[L(s + eps*t)] > lam.

    The slice parameters are the n_eps-th roots of unity.  Finite eps
    sampling is a fidelity knob, not an equivalence: as n_eps grows the
    margin decreases toward the |L t| form of the test.
    """
    if n_eps < 4:
        raise DomainError("slice sampling needs n_eps >= 4")
    grid = grid or PolarGrid()
    pts = grid.points()
    ls = _operator_values(f.s, p, pts)
    lt = _operator_values(f.t, p, pts)
    eps = np.exp(2j * np.pi * np.arange(n_eps) / n_eps)
    stacked = np.real(ls[None, :, :] + eps[:, None, None] * lt[None, :, :]) - p.lam
    margins = stacked.min(axis=0)
    v = verdict_from_margins(margins, pts, f"{n_eps} slice values on {grid.describe()}")
    return MembershipVerdict(
        holds=v.holds,
        margin=v.margin,
        witness=v.witness,
        samples=int(stacked.size),
        near_degenerate=v.near_degenerate,
        evidence=v.evidence,
    )


def _check_slice_normalized(F: TruncatedSeries) -> None:
    if F.order < 1 or abs(F.coeff(0)) > COEFF_TOL or abs(F.coeff(1) - 1.0) > COEFF_TOL:
        raise NormalizationError("analytic test function must satisfy F(0)=0, F'(0)=1")


def close_to_convex_check(F: TruncatedSeries, grid: PolarGrid | None = None) -> MembershipVerdict:
    """Sampled Re F'(z) > 0, the analytic close-to-convexity criterion."""
    _check_slice_normalized(F)
    grid = grid or PolarGrid()
    pts = grid.points()
    margins = np.real(eval_many(F.derivative(), pts))
    return verdict_from_margins(margins, pts, grid.describe())


def half_plane_check(F: TruncatedSeries, grid: PolarGrid | None = None) -> MembershipVerdict:
    """Sampled Re(F(z)/z) > 1/2.

    F(z)/z is evaluated as the coefficient-shifted polynomial, so the origin
    needs no special casing (the shifted value at 0 is F'(0) = 1); grids here
    exclude 0 anyway.
    """
    _check_slice_normalized(F)
    grid = grid or PolarGrid()
    pts = grid.points()
    ratio = eval_many(TruncatedSeries(F.coeffs[1:]), pts)
    margins = np.real(ratio) - 0.5
    return verdict_from_margins(margins, pts, grid.describe())
