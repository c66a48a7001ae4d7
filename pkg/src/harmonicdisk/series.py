"""Truncated complex power series on the closed unit disk.

A series is stored densely: ``coeffs[m]`` is the coefficient of ``z**m`` and
the truncation order is ``len(coeffs) - 1``.  All operations are pure
functions on immutable values, so instances can be shared freely between
threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import DomainError

#: Absolute tolerance for series-level equality checks.  Double-precision
#: Horner error on |z| <= 1 with order <= 256 stays far below this.
COEFF_TOL = 1e-12

#: Highest derivative order any consumer needs (the differential operator
#: uses at most the third derivative).
MAX_DERIVATIVE = 3

#: Rounding slack admitted when checking |z| <= 1 (grid points built from
#: cos/sin can overshoot the unit circle by a few ulp).
_EDGE_SLACK = 1e-12

#: Default truncation order for series built by map constructors.
DEFAULT_ORDER = 64


def _as_coeff_array(coeffs) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128))
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError("coefficients must form a nonempty 1-d sequence")
    if not np.all(np.isfinite(arr.view(np.float64))):
        raise DomainError("coefficients must be finite (no NaN/Inf)")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


def check_disk_point(z: complex) -> complex:
    """Validate that *z* is a finite point of the closed unit disk."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("evaluation point must be finite")
    if abs(z) > 1.0 + _EDGE_SLACK:
        raise DomainError(f"evaluation point must satisfy |z| <= 1, got |z| = {abs(z)}")
    return z


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Polynomial truncation ``sum(coeffs[m] * z**m for m in 0..order)``.

    Coefficients are kept in a read-only complex array.  The public
    constructors produce series of order >= 1; :meth:`derivative` may floor
    the order at 0 (a constant), which every operation accepts.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_coeff_array(self.coeffs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int = 1) -> "TruncatedSeries":
        """The zero series at the given order."""
        if order < 0:
            raise DomainError("order must be nonnegative")
        return cls(np.zeros(order + 1, dtype=np.complex128))

    @classmethod
    def identity(cls, order: int = 1) -> "TruncatedSeries":
        """The series of z itself, optionally padded with zero coefficients."""
        if order < 1:
            raise DomainError("identity series needs order >= 1")
        c = np.zeros(order + 1, dtype=np.complex128)
        c[1] = 1.0
        return cls(c)

    @classmethod
    def monomial(cls, m: int, c: complex = 1.0, order: int | None = None) -> "TruncatedSeries":
        """The series ``c * z**m`` stored at the given order (default m)."""
        if m < 0:
            raise DomainError("monomial exponent must be nonnegative")
        order = m if order is None else order
        if order < m:
            raise DomainError("order must be at least the monomial exponent")
        arr = np.zeros(order + 1, dtype=np.complex128)
        arr[m] = c
        return cls(arr)

    @classmethod
    def geometric(cls, order: int) -> "TruncatedSeries":
        """Truncation of z/(1-z): coefficients [0, 1, 1, ..., 1].

        This is the identity element of the coefficient-wise product.
        """
        if order < 1:
            raise DomainError("geometric series needs order >= 1")
        c = np.ones(order + 1, dtype=np.complex128)
        c[0] = 0.0
        return cls(c)

    # -- basic accessors ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, m: int) -> complex:
        """Coefficient of ``z**m``; zero beyond the stored order."""
        if m < 0:
            raise DomainError("coefficient index must be nonnegative")
        return complex(self.coeffs[m]) if m <= self.order else 0j

    def pad_to(self, order: int) -> "TruncatedSeries":
        """Zero-pad up to *order* (no-op if already at least that long)."""
        if order <= self.order:
            return self
        c = np.zeros(order + 1, dtype=np.complex128)
        c[: len(self.coeffs)] = self.coeffs
        return TruncatedSeries(c)

    # -- operations --------------------------------------------------------

    def evaluate(self, z: complex) -> complex:
        """Horner evaluation at a point of the closed unit disk."""
        z = check_disk_point(z)
        return complex(npoly.polyval(z, self.coeffs))

    def derivative(self, k: int = 1) -> "TruncatedSeries":
        """k-th formal derivative, 0 <= k <= 3.  Order floors at 0."""
        if not 0 <= k <= MAX_DERIVATIVE:
            raise DomainError(f"derivative order must be in 0..{MAX_DERIVATIVE}, got {k}")
        c = self.coeffs
        for _ in range(k):
            if len(c) == 1:
                c = np.zeros(1, dtype=np.complex128)
                break
            c = c[1:] * np.arange(1, len(c))
        return TruncatedSeries(c)

    def hadamard(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Coefficient-wise product, truncated to the shorter order."""
        n = min(self.order, other.order)
        return TruncatedSeries(self.coeffs[: n + 1] * other.coeffs[: n + 1])

    def scale_argument(self, r: float) -> "TruncatedSeries":
        """Coefficient map ``c[m] -> c[m] * r**(m-1)`` for 0 < r <= 1.

        For a normalized series s this realizes s(r z)/r, the dilation used
        when restricting a map to a smaller disk.
        """
        r = float(r)
        if not (math.isfinite(r) and 0.0 < r <= 1.0):
            raise DomainError(f"scale factor must lie in (0, 1], got {r}")
        powers = r ** (np.arange(len(self.coeffs)) - 1.0)
        return TruncatedSeries(self.coeffs * powers)


def eval_many(series: TruncatedSeries, z: np.ndarray) -> np.ndarray:
    """Vectorized Horner evaluation on an array of closed-disk points."""
    z = np.asarray(z, dtype=np.complex128)
    if z.size and not (np.all(np.isfinite(z.real)) and np.all(np.isfinite(z.imag))):
        raise DomainError("evaluation points must be finite")
    if z.size and float(np.max(np.abs(z))) > 1.0 + _EDGE_SLACK:
        raise DomainError("evaluation points must satisfy |z| <= 1")
    return npoly.polyval(z, series.coeffs)
