import numpy as np
import pytest

import tropt as t

WORKED = {
    "p": [3, 14],
    "q": [-12, -4],
    "g": [2, -8],
    "h": [6, 8],
    "B": [[0, -4], [-8, -6]],
}

POINTS = [[-7, 12], [2, 10], [-10, 3], [-4, 4], [-4, -3]]
WEIGHTS = [2, 1, 2, 1, 1]


@pytest.fixture
def mp():
    return t.MAX_PLUS


@pytest.fixture
def worked(mp):
    """The 2-D max-plus instance used by all the golden tests."""
    return dict(
        p=t.tvector(mp, WORKED["p"]),
        q=t.tvector(mp, WORKED["q"]),
        g=t.tvector(mp, WORKED["g"]),
        h=t.tvector(mp, WORKED["h"]),
        B=t.tmatrix(mp, WORKED["B"]),
    )


def random_feasible_instance(rng, n, *, with_box=True, mixed_B=False):
    """Integer max-plus instance with entries in [-10, 10] that is feasible
    by construction: rejection sampling rules out positive cycles in B and,
    when box bounds are present, violations of the closure condition."""
    while True:
        if mixed_B:
            B = rng.integers(-10, 11, size=(n, n)).astype(float)
            np.fill_diagonal(B, rng.integers(-10, 1, size=n))
            if _best_cycle(B) > 0:
                continue
        else:
            B = rng.integers(-10, 1, size=(n, n)).astype(float)
        g = h = None
        if with_box:
            g = rng.integers(-10, 0, size=n).astype(float)
            h = rng.integers(0, 11, size=n).astype(float)
            bstar = t.closure_entries(B)
            if (bstar - h[:, None] + g[None, :]).max() > 0:
                continue
        break
    p = rng.integers(-10, 11, size=n).astype(float)
    q = rng.integers(-10, 11, size=n).astype(float)
    return dict(B=B, p=p, q=q, g=g, h=h)


def _best_cycle(B):
    n = B.shape[0]
    best = float("-inf")
    power = B
    for _ in range(n):
        best = max(best, float(np.diagonal(power).max()))
        power = (power[:, :, None] + B[None, :, :]).max(axis=1)
    return best


def as_instance(sf, raw):
    mk = lambda v: None if v is None else t.tvector(sf, v)
    return t.ProblemInstance(
        sf,
        t.tvector(sf, raw["p"]),
        t.tvector(sf, raw["q"]),
        g=mk(raw["g"]),
        h=mk(raw["h"]),
        B=None if raw["B"] is None else t.tmatrix(sf, raw["B"]),
    )
