"""tropt: closed-form optimization over idempotent semifields.

Library layout:

* :mod:`tropt.semifield` -- scalar algebra of the four semifields;
* :mod:`tropt.linalg`    -- matrices/vectors, trace, Kleene star, conjugation;
* :mod:`tropt.systems`   -- closed-form solutions of the linear inequalities;
* :mod:`tropt.solve`     -- the four minimax solvers;
* :mod:`tropt.oracle`    -- brute-force grid verification;
* :mod:`tropt.location`  -- minimax Chebyshev facility location;
* :mod:`tropt.probfile`  -- JSON problem files and reports;
* :mod:`tropt.svg`       -- deterministic SVG plots;
* :mod:`tropt.cli`       -- the ``tropt`` command.
"""

from .errors import (
    DimensionError,
    DomainError,
    GridGuardError,
    ProblemFileError,
    SemifieldMismatchError,
    TroptError,
)
from .linalg import TropicalMatrix, identity, tmatrix, trow, tvector, zeros
from .location import (
    LocationInstance,
    LocationSolution,
    build_pq,
    chebyshev_distance,
    closure_entries,
    solve_location,
    to_general_problem,
)
from .oracle import GridSpec, OracleResult, brute_force_min, default_grid
from .semifield import (
    MAX_PLUS,
    MAX_TIMES,
    MIN_PLUS,
    MIN_TIMES,
    SEMIFIELDS,
    Semifield,
    SemifieldKind,
    TropicalScalar,
    by_tag,
)
from .solve import (
    InfeasibilityReport,
    InfeasibleReason,
    ProblemInstance,
    SolutionSet,
    contains,
    objective,
    problem,
    solve_box_constrained,
    solve_general,
    solve_instance,
    solve_linear_constrained,
    solve_unconstrained,
    theta_forms_agree,
)
from .systems import ConeSolution, Infeasible, UpperSolution, solve_ax_le_d, solve_ax_plus_b_le_x

__version__ = "0.1.0"
