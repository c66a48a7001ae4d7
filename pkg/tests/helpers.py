"""Shared samplers for randomized tests.

Parameter magnitudes are kept moderate so absolute tolerances of 1e-12 on
operator identities stay meaningful in double precision.
"""

import numpy as np

from harmonicdisk import ClassParams, TruncatedSeries


def random_params(rng: np.random.Generator) -> ClassParams:
    gamma = float(rng.uniform(0.25, 2.0))
    delta = gamma * float(rng.uniform(1.0, 2.0))
    lam = float(rng.uniform(0.0, 0.8)) * gamma
    return ClassParams(gamma=gamma, delta=delta, lam=lam)


def random_series(rng: np.random.Generator, order: int, scale: float = 1.0) -> TruncatedSeries:
    c = scale * (rng.standard_normal(order + 1) + 1j * rng.standard_normal(order + 1))
    return TruncatedSeries(c)


def params_from(gamma: float, ratio: float, frac: float) -> ClassParams:
    """Build valid params from unconstrained draws (for hypothesis)."""
    return ClassParams(gamma=gamma, delta=gamma * ratio, lam=frac * gamma)
