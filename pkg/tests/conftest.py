import numpy as np
import pytest

from harmonicdisk import closure

from helpers import random_params

CORPUS_SEED = 20240809
CORPUS_SIZE = 200


@pytest.fixture(scope="session")
def corpus():
    """Random certified members paired with their parameters.

    Every member satisfies the sufficient coefficient condition by
    construction, so every class-wide guarantee must hold for all of them.
    """
    rng = np.random.default_rng(CORPUS_SEED)
    out = []
    for _ in range(CORPUS_SIZE):
        p = random_params(rng)
        out.append((p, closure.random_member(p, rng)))
    return out
