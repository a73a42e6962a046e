"""Brute-force verification of solver results on small instances.

The oracle evaluates the objective at every point of a finite grid that
satisfies the constraints, and returns the best value with all attaining
grid points.  It shares no formulas with the closed-form solvers, so an
agreement between the two is meaningful evidence.

The default grid step is 1/2: the closed-form optimum involves a square
root that halves an integer, so for integer instances the optimizers lie
on the half-integer lattice and the oracle is exact, not approximate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import DomainError, GridGuardError
from .solve import ProblemInstance
from .semifield import TropicalScalar

__all__ = ["GridSpec", "OracleResult", "default_grid", "brute_force_min"]

MAX_POINTS = 10**6


@dataclass(frozen=True)
class GridSpec:
    """A rectangular grid: per-dimension bounds plus a common step."""

    lower: np.ndarray
    upper: np.ndarray
    step: float = 0.5

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=np.float64)
        upper = np.asarray(self.upper, dtype=np.float64)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if lower.shape != upper.shape or lower.ndim != 1:
            raise DomainError("grid bounds must be flat vectors of equal length")
        if not np.isfinite(lower).all() or not np.isfinite(upper).all():
            raise DomainError("grid bounds must be finite")
        if (lower > upper).any():
            raise DomainError("grid lower bound exceeds upper bound")
        if not self.step > 0:
            raise DomainError("grid step must be positive")
        if self.point_count() > MAX_POINTS:
            raise GridGuardError(
                f"grid would hold {self.point_count()} points (limit {MAX_POINTS}); "
                f"increase the step (currently {self.step})"
            )

    def axis(self, i: int) -> np.ndarray:
        count = int(np.floor((self.upper[i] - self.lower[i]) / self.step + 1e-9)) + 1
        return self.lower[i] + self.step * np.arange(count)

    def point_count(self) -> int:
        total = 1
        for i in range(len(self.lower)):
            total *= int(np.floor((self.upper[i] - self.lower[i]) / self.step + 1e-9)) + 1
        return total

    def points(self) -> np.ndarray:
        """All grid points in lexicographic order, one per row."""
        axes = [self.axis(i) for i in range(len(self.lower))]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([m.reshape(-1) for m in mesh], axis=1)


@dataclass(frozen=True)
class OracleResult:
    """Best objective over the feasible grid, or empty when none is feasible."""

    min_value: TropicalScalar | None
    argmins: list = field(default_factory=list)
    feasible_count: int = 0

    @property
    def empty(self) -> bool:
        return self.min_value is None


def default_grid(inst: ProblemInstance, step: float = 0.5) -> GridSpec:
    """Grid bounds that provably contain the optimizer family.

    Bounded dimensions use [g, h] directly.  Unbounded ones get symmetric
    padding derived from the magnitudes of all finite inputs: the optimum
    never exceeds twice the largest magnitude D, so every optimizer
    coordinate lies within 3D of the origin.  Only the additive
    semifields have a natural real grid; pass an explicit GridSpec for
    the multiplicative ones.
    """
    if inst.sf.times:
        raise DomainError("no default grid for multiplicative semifields; pass a GridSpec")
    pools = [inst.p.data, inst.q.data]
    if inst.g is not None:
        pools.append(inst.g.data)
    if inst.h is not None:
        pools.append(inst.h.data)
    if inst.B is not None:
        pools.append(inst.B.data)
    finite = np.concatenate([p.reshape(-1) for p in pools])
    finite = finite[np.isfinite(finite)]
    d = float(np.abs(finite).max()) if finite.size else 1.0
    pad = 3.0 * d + 1.0
    lower = np.full(inst.n, -pad)
    upper = np.full(inst.n, pad)
    if inst.g is not None:
        gv = inst.g.data.reshape(-1)
        mask = np.isfinite(gv)
        if inst.sf.minimize:
            upper[mask] = np.minimum(upper[mask], gv[mask])
        else:
            lower[mask] = np.maximum(lower[mask], gv[mask])
    if inst.h is not None:
        hv = inst.h.data.reshape(-1)
        mask = np.isfinite(hv)
        if inst.sf.minimize:
            lower[mask] = np.maximum(lower[mask], hv[mask])
        else:
            upper[mask] = np.minimum(upper[mask], hv[mask])
    return GridSpec(lower, np.maximum(lower, upper), step)


def brute_force_min(
    inst: ProblemInstance,
    grid: GridSpec | None = None,
    eps: float | None = None,
) -> OracleResult:
    """Exhaustively minimize the objective over the feasible grid points.

    Only dimensions up to 3 are supported; the point count is capped by
    the GridSpec guard.  Argmins are reported in lexicographic order.
    """
    sf = inst.sf
    if inst.n > 3:
        raise DomainError(f"oracle supports dimension <= 3, got {inst.n}")
    if grid is None:
        grid = default_grid(inst)
    if len(grid.lower) != inst.n:
        raise DomainError(f"grid dimension {len(grid.lower)} != instance dimension {inst.n}")
    X = grid.points()
    sf.validate(X)

    n = inst.n
    B = inst.B.data if inst.B is not None else np.zeros((n, n))
    g = inst.g.data.reshape(-1) if inst.g is not None else np.zeros(n)
    h = inst.h.data.reshape(-1) if inst.h is not None else np.zeros(n)
    qc = inst.q.conj().data.reshape(-1)
    p = inst.p.data.reshape(-1)

    feas, vals = _kernels.grid_scan(
        X, B, inst.B is not None, g, inst.g is not None, h, inst.h is not None,
        p, qc, sf.minimize, sf.times,
    )
    count = int(feas.sum())
    if count == 0:
        return OracleResult(None, [], 0)
    fvals = vals[feas]
    best = float(fvals.max() if sf.minimize else fvals.min())
    hit = feas & np.asarray(sf.eq(vals, best, eps))
    argmins = [X[i].copy() for i in np.flatnonzero(hit)]
    return OracleResult(TropicalScalar(best, sf), argmins, count)
