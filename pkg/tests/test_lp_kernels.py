import itertools
import os
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rational_vectors, small_rationals
from wvo import lp
from wvo._kernels import HAVE_NUMBA, INT_LIMIT, any_below, any_below_numpy, exact_any_below


def _vertex_optimum(c, A, b):
    """min c.x over {A x <= b} in the plane by enumerating vertices, bounded box assumed."""
    best = None
    for i, j in itertools.combinations(range(len(A)), 2):
        (a1, a2), (b1, b2) = A[i], A[j]
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        x = ((b[i] * b2 - a2 * b[j]) / det, (a1 * b[j] - b[i] * b1) / det)
        if all(r[0] * x[0] + r[1] * x[1] <= bb for r, bb in zip(A, b)):
            v = c[0] * x[0] + c[1] * x[1]
            best = v if best is None else min(best, v)
    return best


BOX = [(1, 0), (-1, 0), (0, 1), (0, -1)]


@given(rational_vectors(2), st.lists(st.tuples(rational_vectors(2), small_rationals()), max_size=4))
def test_simplex_matches_vertex_enumeration(c, cuts):
    A = BOX + [r for r, _ in cuts]
    b = [Fraction(3)] * 4 + [v for _, v in cuts]
    res = lp.linprog(c, A, b)
    best = _vertex_optimum(c, A, b)
    if best is None:
        assert res.status == lp.INFEASIBLE
    else:
        assert res.optimal and res.value == best
        # dual certificate: c + A^T lam = 0, lam >= 0, value = -b.lam
        lam = res.duals_ub
        assert all(v >= 0 for v in lam)
        assert all(c[j] + sum(lam[i] * A[i][j] for i in range(len(A))) == 0 for j in range(2))
        assert -sum(l * bb for l, bb in zip(lam, b)) == best


@given(rational_vectors(2), st.lists(st.tuples(rational_vectors(2), small_rationals()), max_size=5))
def test_backends_agree(c, cuts):
    A = [r for r, _ in cuts]
    b = [v for _, v in cuts]
    r1 = lp.linprog(c, A, b, backend="gmpy2")
    r2 = lp.linprog(c, A, b, backend="fraction")
    assert (r1.status, r1.value, r1.x) == (r2.status, r2.value, r2.x)
    s1 = lp.strict_feasible(A, b, nvars=2, backend="gmpy2")
    s2 = lp.strict_feasible(A, b, nvars=2, backend="fraction")
    assert (s1.feasible, s1.point) == (s2.feasible, s2.point)


def test_unbounded_and_infeasible():
    assert lp.linprog([-1], [[-1]], [0]).status == lp.UNBOUNDED
    assert lp.linprog([0], [[1], [-1]], [0, -1]).status == lp.INFEASIBLE


def test_strict_feasibility():
    # x < 0 and x >= 0 cannot both hold; x < 1 with x >= 0 can
    assert not lp.strict_feasible([[1]], [0], [[-1]], [0])
    r = lp.strict_feasible([[1]], [1], [[-1]], [0])
    assert r and 0 <= r.point[0] < 1
    assert lp.strict_feasible([[1]], [0], [[1], [-1]], [-1, 0]).domain_empty


def _brute_below(cand, pool):
    return np.array([any((r < c).all() for r in pool) for c in cand], dtype=bool)


@given(st.integers(1, 30), st.integers(1, 40), st.integers(1, 4), st.integers(0, 2**31))
def test_kernels_agree_with_loop(nc, npool, f, seed):
    rng = np.random.default_rng(seed)
    cand = rng.integers(-3, 4, size=(nc, f)).astype(np.int64)
    pool = rng.integers(-3, 4, size=(npool, f)).astype(np.int64)
    want = _brute_below(cand, pool)
    assert np.array_equal(any_below_numpy(cand, pool, budget=64), want)
    assert np.array_equal(any_below(cand, pool, "numpy"), want)
    if HAVE_NUMBA:
        assert np.array_equal(any_below(cand, pool, "numba"), want)


def test_exact_scores_with_fractions():
    rows = [(Fraction(1, 3), Fraction(1, 2)), (Fraction(1, 4), Fraction(1, 3)), (1, 0)]
    assert exact_any_below(rows, rows) == [True, False, False]


def test_exact_scores_overflow_falls_back():
    big = INT_LIMIT * 4
    rows = [(Fraction(big), 1), (Fraction(big - 1), 0)]
    assert exact_any_below(rows, rows) == [True, False]


def test_jit_flag_selects_numpy():
    env = dict(os.environ, WVO_JIT="0")
    out = subprocess.run(
        [sys.executable, "-c", "from wvo._kernels import KERNEL; print(KERNEL)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"


def test_backend_flag_selects_fraction():
    env = dict(os.environ, WVO_BACKEND="fraction")
    out = subprocess.run(
        [sys.executable, "-c", "from wvo._backend import BACKEND; print(BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "fraction"


def test_unknown_kernel_rejected():
    with pytest.raises(ValueError):
        any_below(np.zeros((1, 1), np.int64), np.zeros((1, 1), np.int64), "cuda")
