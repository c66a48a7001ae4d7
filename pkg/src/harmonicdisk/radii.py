"""Radii of fully convexity and fully starlikeness, plus a numeric oracle.

For the whole inequality class, every member is fully convex on |z| < r_c
and fully starlike on |z| < r_s, where r_c and r_s are the unique roots in
(0, 1) of an explicit cubic and quadratic in the class parameters.  Both
polynomials are positive at 0, negative at 1 and strictly decreasing in
between, so bracketed bisection is guaranteed to converge.  The numeric
radius oracle cross-validates those analytic radii against the per-circle
geometry tests for concrete members.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import geometry
from .errors import DomainError, InternalConsistencyError
from .maps import ClassParams, HarmonicMap

_BISECTION_CAP = 200

#: Scaled-term threshold of the series divergence detector: tails behaving
#: like c/m keep |m*term_m| near |c|, tails like c/m^2 push it to zero.
DIVERGENCE_THRESHOLD = 1e-3


def convex_radius_poly(p: ClassParams, r: float) -> float:
    """Cubic whose unique root in (0, 1) is the fully-convex radius.

    pc(r) = (-delta-2*gamma+lam) r^3 + (3*delta+6*gamma-3*lam) r^2
            + (-3*delta-7*gamma+4*lam) r + delta + gamma
    """
    g, d, lm = p.gamma, p.delta, p.lam
    return (
        ((-d - 2.0 * g + lm) * r + (3.0 * d + 6.0 * g - 3.0 * lm)) * r
        + (-3.0 * d - 7.0 * g + 4.0 * lm)
    ) * r + (d + g)


def starlike_radius_poly(p: ClassParams, r: float) -> float:
    """Quadratic whose unique root in (0, 1) is the fully-starlike radius.

    ps(r) = (delta+2*gamma-lam) r^2 + (-2*delta-4*gamma+2*lam) r + delta + gamma
    """
    g, d, lm = p.gamma, p.delta, p.lam
    a = d + 2.0 * g - lm
    return (a * r - 2.0 * a) * r + (d + g)


def starlike_radius_exact(p: ClassParams) -> float:
    """Closed-form smaller root of the starlike quadratic.

    With a = delta + 2*gamma - lam the quadratic is a*(r^2 - 2r) + delta +
    gamma, so the root in (0, 1) is 1 - sqrt((gamma - lam)/a).
    """
    a = p.delta + 2.0 * p.gamma - p.lam
    return 1.0 - math.sqrt((p.gamma - p.lam) / a)


@dataclass(frozen=True)
class RadiusReport:
    """A computed radius with the bracket and residual that certify it.

    For the bisection method, ``residual`` is |poly(radius)|.  For the
    numeric oracle, ``residual`` is the circle-test margin at the last
    certified passing radius, and a capped probe is reported with radius
    equal to the bracket's lower end (see ``note``).
    """

    radius: float
    bracket: tuple[float, float]
    residual: float
    iterations: int
    method: str
    note: str = ""


def _bisect_decreasing(poly, tol: float, what: str) -> RadiusReport:
    """Bisection on (0, 1) for a strictly decreasing polynomial.

    Runs until both the bracket width and the residual drop below *tol*
    (or the iteration cap / machine resolution), so the reported root
    satisfies |radius - root| <= tol/2 and |poly(radius)| <= tol.
    """
    if not (math.isfinite(tol) and tol > 0.0):
        raise DomainError("tolerance must be positive")
    lo, hi = 0.0, 1.0
    flo, fhi = poly(lo), poly(hi)
    if not (flo > 0.0 and fhi < 0.0):
        raise InternalConsistencyError(
            f"{what}: expected sign change on (0, 1), got p(0)={flo}, p(1)={fhi}"
        )
    iterations = 0
    while True:
        radius = 0.5 * (lo + hi)
        fmid = poly(radius)
        if radius <= lo or radius >= hi:
            break
        # the stop condition is checked before the bracket update so the
        # reported radius stays strictly inside with a certified residual
        if (hi - lo <= tol and abs(fmid) <= tol) or iterations >= _BISECTION_CAP:
            break
        iterations += 1
        if fmid > 0.0:
            lo = radius
        else:
            hi = radius
    return RadiusReport(
        radius=radius,
        bracket=(lo, hi),
        residual=abs(fmid),
        iterations=iterations,
        method="bisection",
    )


def radius_fully_convex(p: ClassParams, tol: float = 1e-9) -> RadiusReport:
    """Fully-convex radius of the class: root of the convex cubic in (0, 1)."""
    return _bisect_decreasing(lambda r: convex_radius_poly(p, r), tol, "convex radius cubic")


def radius_fully_starlike(p: ClassParams, tol: float = 1e-9) -> RadiusReport:
    """Fully-starlike radius of the class: root of the starlike quadratic.

    The bisection result is cross-checked against the closed-form quadratic
    root; disagreement beyond the tolerance is an internal error.
    """
    report = _bisect_decreasing(lambda r: starlike_radius_poly(p, r), tol, "starlike quadratic")
    exact = starlike_radius_exact(p)
    if abs(report.radius - exact) > tol + 1e-12:
        raise InternalConsistencyError(
            f"starlike radius {report.radius} disagrees with closed form {exact}"
        )
    return report


@dataclass(frozen=True)
class ThresholdReport:
    """Partial-sum solve of the convexity-threshold equation for lambda.

    The driving series has terms asymptotic to (6-2*delta)/((delta-1)*m), so
    it converges only where that leading coefficient vanishes; the detector
    flags everything else instead of extrapolating.  ``lam`` is None exactly
    when ``diverged`` is set.  No extrapolation to the infinite sum is
    performed: ``partial_sum``, the solved ``lam`` and first-omitted-term
    error estimates describe the N-term truncation only.
    """

    delta: float
    n_terms: int
    partial_sum: float
    diverged: bool
    min_scaled_term: float
    first_omitted_term: float
    lam: float | None = None
    lam_error_estimate: float | None = None


def _threshold_terms(delta: float, m: np.ndarray) -> np.ndarray:
    return (2.0 * m * (3.0 - delta) + (delta - 5.0)) / ((m + 1.0) * (m * (delta - 1.0) + 2.0))


def convexity_threshold_lambda(delta: float, n_terms: int = 10000) -> ThresholdReport:
    """Solve 7 - 3*delta = 4*lam + 4*(1-lam)*S_N for lam, or report divergence.

    S_N is the N-term partial sum of
    sum_m [2m(3-delta) + (delta-5)] / [(m+1)(m(delta-1)+2)].  Divergence is
    declared when |m*term_m| stays above :data:`DIVERGENCE_THRESHOLD` over
    the whole window m in [N/2, N]; the detector separates ~1/m tails from
    ~1/m^2 tails decisively at desk scale but cannot resolve deltas very
    close to the convergent point.
    """
    delta = float(delta)
    if not (math.isfinite(delta) and delta >= 1.0):
        raise DomainError("threshold solve needs delta >= 1")
    if n_terms < 10:
        raise DomainError("threshold solve needs n_terms >= 10")
    m = np.arange(1, n_terms + 1, dtype=np.float64)
    terms = _threshold_terms(delta, m)
    window = slice(n_terms // 2 - 1, n_terms)
    min_scaled = float(np.min(np.abs(m[window] * terms[window])))
    partial = float(np.sum(terms))
    first_omitted = abs(float(_threshold_terms(delta, np.array([n_terms + 1.0]))[0]))
    if min_scaled > DIVERGENCE_THRESHOLD:
        return ThresholdReport(
            delta=delta,
            n_terms=n_terms,
            partial_sum=partial,
            diverged=True,
            min_scaled_term=min_scaled,
            first_omitted_term=first_omitted,
        )
    lam = (7.0 - 3.0 * delta - 4.0 * partial) / (4.0 - 4.0 * partial)
    dlam_ds = 3.0 * (1.0 - delta) / (4.0 * (1.0 - partial) ** 2)
    return ThresholdReport(
        delta=delta,
        n_terms=n_terms,
        partial_sum=partial,
        diverged=False,
        min_scaled_term=min_scaled,
        first_omitted_term=first_omitted,
        lam=lam,
        lam_error_estimate=abs(dlam_ds) * first_omitted,
    )


_ORACLE_MIN = 1e-3
_ORACLE_MAX = 0.999


def numeric_radius_oracle(
    f: HarmonicMap,
    prop: str,
    tol: float = 1e-3,
    n_theta: int = 1024,
) -> RadiusReport:
    """Largest probed radius at which a per-circle geometry test passes.

    ``prop`` selects the circle test ("starlike" or "convex").  Bisection
    runs over (0.001, 0.999]; the caller is responsible for the map being
    sense-preserving on the probed region.  Since the class radii are
    guaranteed minima, a specific member may do better; a probe that passes
    at 0.999 is reported capped.
    """
    if prop == "starlike":
        test = geometry.starlike_on_circle
    elif prop == "convex":
        test = geometry.convex_on_circle
    else:
        raise DomainError(f"unknown circle property {prop!r} (want 'starlike' or 'convex')")
    if not (math.isfinite(tol) and tol > 0.0):
        raise DomainError("tolerance must be positive")

    v_lo = test(f, _ORACLE_MIN, n_theta)
    if not v_lo.holds:
        return RadiusReport(
            radius=0.5 * _ORACLE_MIN,
            bracket=(0.0, _ORACLE_MIN),
            residual=v_lo.margin,
            iterations=1,
            method="oracle",
            note=f"degenerate: {prop} fails even at r={_ORACLE_MIN}",
        )
    v_hi = test(f, _ORACLE_MAX, n_theta)
    if v_hi.holds:
        return RadiusReport(
            radius=_ORACLE_MAX,
            bracket=(_ORACLE_MAX, 1.0),
            residual=v_hi.margin,
            iterations=2,
            method="oracle",
            note=f"capped at probe maximum {_ORACLE_MAX}",
        )

    lo, hi = _ORACLE_MIN, _ORACLE_MAX
    residual = v_lo.margin
    iterations = 2
    while hi - lo > tol and iterations < _BISECTION_CAP:
        mid = 0.5 * (lo + hi)
        v = test(f, mid, n_theta)
        iterations += 1
        if v.holds:
            lo, residual = mid, v.margin
        else:
            hi = mid
    return RadiusReport(
        radius=0.5 * (lo + hi),
        bracket=(lo, hi),
        residual=residual,
        iterations=iterations,
        method="oracle",
    )
