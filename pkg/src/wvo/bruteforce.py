"""Independent brute-force oracles used to cross-check the LP-based answers.

Nothing here calls the LP solver.  Finite-set oracles quantify over the
points directly; grid oracles enumerate a rational lattice inside a box and
score it with the integer dominance kernel.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from ._kernels import any_below
from .cone import Cone
from .problem import Polyhedron, Problem
from .rational import dot, matvec, sub, vec


def _beats(K: Cone, u, v) -> bool:
    """u - v in int K, evaluated facet by facet."""
    return all(dot(a, sub(u, v)) > 0 for a in K.facets)


def bf_wmax(M: Sequence, K: Cone) -> list:
    M = [vec(v) for v in M]
    return [v for v in M if not any(_beats(K, u, v) for u in M)]


def bf_wmin(M: Sequence, K: Cone) -> list:
    M = [vec(v) for v in M]
    return [v for v in M if not any(_beats(K, v, u) for u in M)]


def bf_wsup_contains(M: Sequence, K: Cone, y) -> bool:
    """y in cl(M - int K) and y not in M - int K.

    The closure is tested by perturbation: y lies in cl(M - int K) iff for
    some v, v - y + eps k0 is interior for all small eps > 0, which facet by
    facet is the lexicographic condition (a.(v - y), a.k0) > (0, 0).
    """
    y = vec(y)
    M = [vec(v) for v in M]
    k0 = K.interior_point()
    in_open = any(_beats(K, v, y) for v in M)
    if in_open:
        return False
    for v in M:
        d = sub(v, y)
        if all((dot(a, d), dot(a, k0)) > (0, 0) for a in K.facets):
            return True
    return False


def grid_axis(lo, hi, max_den: int) -> list[Fraction]:
    """All rationals in [lo, hi] whose denominator divides some d <= max_den."""
    lo, hi = Fraction(lo), Fraction(hi)
    vals = set()
    for d in range(1, max_den + 1):
        a = math.ceil(lo * d)
        b = math.floor(hi * d)
        vals.update(Fraction(k, d) for k in range(a, b + 1))
    return sorted(vals)


def grid_points(dim: int, lo, hi, max_den: int):
    axis = grid_axis(lo, hi, max_den)
    return itertools.product(axis, repeat=dim)


def _integer_grid(dim: int, lo, hi, max_den: int):
    """Grid points as integer numerators over the common denominator D = lcm(1..max_den)."""
    D = math.lcm(*range(1, max_den + 1))
    axis = [int(v * D) for v in grid_axis(lo, hi, max_den)]
    mesh = np.array(np.meshgrid(*([axis] * dim), indexing="ij"), dtype=np.int64).reshape(dim, -1).T
    return D, mesh


def _row_scale(values) -> int:
    return math.lcm(*(Fraction(v).denominator for v in values)) if values else 1


def _filter_polyhedron(P: Polyhedron, D: int, U: np.ndarray) -> np.ndarray:
    """Mask of lattice points u / D inside P, computed in exact integers."""
    keep = np.ones(U.shape[0], dtype=bool)
    for a, b in P.rows:
        s = _row_scale(list(a) + [b])
        ai = np.array([int(x * s) for x in a], dtype=np.int64)
        bi = int(b * s) * D
        keep &= U @ ai <= bi
    return keep


def feasible_grid(prob: Problem, lo=-4, hi=4, max_den: int = 4):
    """Feasible lattice points of A cap dom F cap dom G as (D, integer array)."""
    D, U = _integer_grid(prob.n, lo, hi, max_den)
    return D, U[_filter_polyhedron(prob.feasible_set, D, U)]


def _scores(prob: Problem, D: int, U: np.ndarray):
    """Integer scores A_K F(u / D) * (D * s) for all rows of U, with the scale."""
    F = prob.F
    s = _row_scale([x for r in F.matrix for x in r] + list(F.offset))
    Fm = np.array([[int(x * s) for x in r] for r in F.matrix], dtype=np.int64)
    f0 = np.array([int(x * s) * D for x in F.offset], dtype=np.int64)
    AK = np.array([[int(x) for x in a] for a in prob.K.facets], dtype=np.int64)
    vals = U @ Fm.T + f0
    return vals @ AK.T, D * s


def grid_weak_minimal(points: Sequence, prob: Problem, lo=-4, hi=4, max_den: int = 4, kernel=None) -> list[bool]:
    """For each x̄: no feasible grid x has F(x) - F(x̄) in -int K.

    Points are assumed feasible; the caller checks that separately.
    """
    D, U = feasible_grid(prob, lo, hi, max_den)
    pool, scale = _scores(prob, D, U)
    cand = []
    for x in points:
        Fx = matvec(prob.F.matrix, vec(x))
        Fx = tuple(v + o for v, o in zip(Fx, prob.F.offset))
        cand.append(tuple(dot(a, Fx) * scale for a in prob.K.facets))
    E = math.lcm(*(Fraction(v).denominator for r in cand for v in r)) if cand else 1
    cand_i = np.array([[int(v * E) for v in r] for r in cand], dtype=np.int64).reshape(len(cand), -1)
    pool_i = pool * E
    beaten = any_below(cand_i, pool_i, kernel)
    return [not b for b in beaten]


def grid_epi_shifted(L, y, T, prob: Problem, lo=-8, hi=8, max_den: int = 8, max_points: int = 400_000) -> bool:
    """Two-quantifier grid check of the shifted epigraph test over (x, s).

    Returns False as soon as a lattice (x, s) in C x S gives
    y - L x + F(x) + T G(x) + T s in -int K; True when none is found.
    """
    L, y, T = prob.L_matrix(L), prob.y_vector(y), prob.T_matrix(T)
    axis = grid_axis(lo, hi, max_den)
    n, p = prob.n, prob.p
    count = len(axis) ** (n + p)
    if count > max_points:
        raise ValueError(f"grid of {count} points is too large")
    base = prob.base_domain
    for u in itertools.product(axis, repeat=n + p):
        x, s = u[:n], u[n:]
        if not base.contains(x) or not prob.S.contains(s):
            continue
        v = [
            y[i]
            - dot(L[i], x)
            + dot(prob.F.matrix[i], x)
            + prob.F.offset[i]
            + dot(T[i], tuple(dot(g, x) + g0 for g, g0 in zip(prob.G.matrix, prob.G.offset)))
            + dot(T[i], s)
            for i in range(prob.m)
        ]
        if prob.K.interior_contains(tuple(-c for c in v)):
            return False
    return True
