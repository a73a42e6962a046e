import itertools

import numpy as np
import pytest

import tropt as t
from tropt.errors import DimensionError, DomainError


class TestUpperBoundSystem:
    def test_worked_bound(self, mp):
        # A x <= d with the 2x2 matrix below and d = (2, 8)
        A = t.tmatrix(mp, [[0, -4], [-8, 0]])
        d = t.tvector(mp, [2, 8])
        sol = t.solve_ax_le_d(A, d)
        assert isinstance(sol, t.UpperSolution)
        assert sol.bound.tolist() == [[2], [6]]

    def test_bound_is_tight(self, mp):
        A = t.tmatrix(mp, [[0, -4], [-8, 0]])
        d = t.tvector(mp, [2, 8])
        bound = t.solve_ax_le_d(A, d).bound
        assert (A @ bound).leq(d)

    def test_rejects_bad_inputs(self, mp):
        A = t.tmatrix(mp, [[0, mp.zero], [0, mp.zero]])
        with pytest.raises(DomainError):
            t.solve_ax_le_d(A, t.tvector(mp, [1, 1]))
        with pytest.raises(DomainError):
            t.solve_ax_le_d(t.identity(mp, 2), t.tvector(mp, [1, mp.zero]))
        with pytest.raises(DimensionError):
            t.solve_ax_le_d(t.identity(mp, 2), t.tvector(mp, [1, 1, 1]))

    @pytest.mark.parametrize("sf", [t.MAX_PLUS, t.MIN_PLUS], ids=lambda sf: sf.tag)
    def test_sound_and_complete_on_grid(self, sf):
        # every grid point at or below the bound solves the system and
        # every grid solution sits at or below the bound
        rng = np.random.default_rng(5)
        for _ in range(30):
            m = int(rng.integers(1, 4))
            A = t.tmatrix(sf, rng.integers(-5, 6, size=(m, 2)).astype(float))
            d = t.tvector(sf, rng.integers(-5, 6, size=m).astype(float))
            bound = t.solve_ax_le_d(A, d).bound
            axis = np.arange(-12.0, 12.5, 1.0)
            for xv in itertools.product(axis, repeat=2):
                x = t.tvector(sf, list(xv))
                solves = (A @ x).leq(d)
                below = x.leq(bound)
                assert solves == below


class TestConeSystem:
    def test_worked_cone(self, worked, mp):
        b = t.tvector(mp, [-8, 3])
        sol = t.solve_ax_plus_b_le_x(worked["B"], b)
        assert isinstance(sol, t.ConeSolution)
        assert sol.generator.tolist() == [[0, -4], [-8, 0]]
        assert sol.lower is b

    def test_infeasible_cycle(self, mp):
        # the 2-cycle 3 + (-1) = 2 exceeds the semifield one
        A = t.tmatrix(mp, [[-1, 3], [-1, -2]])
        sol = t.solve_ax_plus_b_le_x(A, t.tvector(mp, [0, 0]))
        assert isinstance(sol, t.Infeasible)
        assert sol.power_trace == mp.scalar(2)

    def test_shape_checks(self, mp):
        with pytest.raises(DimensionError):
            t.solve_ax_plus_b_le_x(t.zeros(mp, 2, 3), t.tvector(mp, [0, 0]))
        with pytest.raises(DimensionError):
            t.solve_ax_plus_b_le_x(t.zeros(mp, 2, 2), t.tvector(mp, [0, 0, 0]))

    @pytest.mark.parametrize("sf", [t.MAX_PLUS, t.MIN_PLUS], ids=lambda sf: sf.tag)
    def test_cone_sound_and_complete_on_grid(self, sf):
        rng = np.random.default_rng(6)
        for _ in range(30):
            raw = rng.integers(-6, 1, size=(2, 2)).astype(float)
            A = t.tmatrix(sf, raw if sf is t.MAX_PLUS else -raw)
            braw = rng.integers(-4, 5, size=2).astype(float)
            b = t.tvector(sf, braw if sf is t.MAX_PLUS else -braw)
            sol = t.solve_ax_plus_b_le_x(A, b)
            assert isinstance(sol, t.ConeSolution)
            axis = np.arange(-10.0, 10.5, 1.0)
            for xv in itertools.product(axis, repeat=2):
                x = t.tvector(sf, list(xv))
                solves = ((A @ x) + b).leq(x)
                # membership: x = A* u for some u >= b iff A* x == x and b <= x
                member = (sol.generator @ x).eq(x) and b.leq(x)
                assert solves == member

    def test_generated_points_solve(self, mp):
        rng = np.random.default_rng(7)
        for _ in range(50):
            n = int(rng.integers(1, 5))
            A = t.tmatrix(mp, rng.integers(-6, 1, size=(n, n)).astype(float))
            b = t.tvector(mp, rng.integers(-4, 5, size=n).astype(float))
            sol = t.solve_ax_plus_b_le_x(A, b)
            u = b + t.tvector(mp, rng.integers(-4, 5, size=n).astype(float))
            x = sol.generator @ u
            assert ((A @ x) + b).leq(x)
