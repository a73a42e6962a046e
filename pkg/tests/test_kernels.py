"""Both kernel implementations must agree bit-for-bit on shared inputs.

The numba/numpy switch is read at import time, so the cross-path check
runs each path in its own interpreter and compares the serialized output.
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

import tropt as t
from tropt._kernels import (
    USING_NUMBA,
    grid_scan_numba,
    grid_scan_numpy,
    matmul_numba,
    matmul_numpy,
)

FLAVORS = [(False, False), (True, False), (False, True), (True, True)]


def _random_operands(rng, minimize, times, m, n, l):
    a = rng.integers(-8, 9, size=(m, n)).astype(float)
    b = rng.integers(-8, 9, size=(n, l)).astype(float)
    if times:
        a = np.exp(a / 4)
        b = np.exp(b / 4)
    return a, b


@pytest.mark.parametrize("minimize,times", FLAVORS)
def test_matmul_variants_agree(minimize, times):
    rng = np.random.default_rng(61)
    for _ in range(50):
        m, n, l = rng.integers(1, 7, size=3)
        a, b = _random_operands(rng, minimize, times, m, n, l)
        got_np = matmul_numpy(a, b, minimize, times)
        got_nb = matmul_numba(a, b, minimize, times)
        assert np.array_equal(got_np, got_nb)


@pytest.mark.parametrize("minimize,times", FLAVORS)
def test_matmul_with_zeros_agrees(minimize, times):
    sf = {
        (False, False): t.MAX_PLUS,
        (True, False): t.MIN_PLUS,
        (False, True): t.MAX_TIMES,
        (True, True): t.MIN_TIMES,
    }[(minimize, times)]
    rng = np.random.default_rng(62)
    for _ in range(50):
        m, n, l = rng.integers(1, 6, size=3)
        a, b = _random_operands(rng, minimize, times, m, n, l)
        a[rng.random(a.shape) < 0.3] = sf.zero
        b[rng.random(b.shape) < 0.3] = sf.zero
        got_np = matmul_numpy(a, b, minimize, times)
        got_nb = matmul_numba(a, b, minimize, times)
        assert np.array_equal(got_np, got_nb)
        assert not np.isnan(got_np).any()


@pytest.mark.parametrize("minimize,times", FLAVORS)
def test_grid_scan_variants_agree(minimize, times):
    rng = np.random.default_rng(63)
    for _ in range(30):
        n = int(rng.integers(1, 4))
        N = int(rng.integers(1, 200))
        X = rng.integers(-10, 11, size=(N, n)).astype(float)
        B = rng.integers(-6, 1, size=(n, n)).astype(float)
        g = rng.integers(-10, 0, size=n).astype(float)
        h = rng.integers(0, 11, size=n).astype(float)
        p = rng.integers(-10, 11, size=n).astype(float)
        qc = rng.integers(-10, 11, size=n).astype(float)
        if times:
            X, B, g, h, p, qc = (np.exp(v / 8) for v in (X, B, g, h, p, qc))
        if minimize:
            g, h = h, g
        for has_B in (False, True):
            for has_box in (False, True):
                args = (X, B, has_B, g, has_box, h, has_box, p, qc, minimize, times)
                f1, v1 = grid_scan_numpy(*args)
                f2, v2 = grid_scan_numba(*args)
                assert np.array_equal(f1, f2)
                assert np.array_equal(v1, v2)


def _run_probe(disable: str) -> dict:
    """Solve and grid-verify the shipped instance in a fresh interpreter."""
    probe = r"""
import json, sys
import numpy as np
import tropt as t
from tropt import _kernels

inst = t.problem(
    t.MAX_PLUS, [3, 14], [-12, -4], g=[2, -8], h=[6, 8], B=[[0, -4], [-8, -6]]
)
sol = t.solve_instance(inst)
res = t.brute_force_min(inst)
print(json.dumps({
    "using_numba": _kernels.USING_NUMBA,
    "theta": sol.theta.value,
    "u_hi": sol.u_hi.column_values().tolist(),
    "oracle_min": res.min_value.value,
    "argmins": [a.tolist() for a in res.argmins],
}))
"""
    env = dict(os.environ, TROPT_DISABLE_NUMBA=disable)
    out = subprocess.run(
        [sys.executable, "-c", probe], env=env, capture_output=True, text=True,
        cwd=str(Path(__file__).resolve().parent.parent), check=True,
    )
    return json.loads(out.stdout)


def test_both_paths_selected_by_env_and_agree():
    plain = _run_probe("1")
    jitted = _run_probe("0")
    assert plain["using_numba"] is False
    assert jitted["using_numba"] is True
    assert plain == {**jitted, "using_numba": False}


def test_flag_matches_current_process():
    expected = os.environ.get("TROPT_DISABLE_NUMBA", "").strip().lower() not in (
        "1", "true", "yes", "on",
    )
    assert USING_NUMBA is expected
