"""Seeded random affine instances for property tests and audits.

Every instance lives in the box C = [-4, 4]^n so brute-force grid oracles
see the whole decision space.  Qualified instances get a Slater point by
construction: pick x0 and s0 in int S, then set g0 = -G x0 - s0.
Unqualified ones squeeze A onto a hyperplane through paired constraints
g(x) <= 0 and -g(x) <= 0, which kills both the Slater and the
relative-interior condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lp
from .cone import Cone
from .multipliers import qualification
from .problem import Polyhedron, Problem, VectorAffineMap
from .rational import Vector, dot, matvec, neg, sub, unit
from .sampling import rational, rational_matrix, rational_vector

BOX = 4


def random_ordering_cone(dim: int, rng) -> Cone:
    """Orthant half the time, otherwise a random pointed solid cone.

    Generators are unit vectors tilted by small nonnegative rationals, so
    they span R^dim and stay inside the open positive orthant side.
    """
    if dim == 1 or rng.random() < 0.5:
        return Cone.orthant(dim)
    gens = []
    for i in range(dim + int(rng.integers(0, 2))):
        base = unit(dim, i % dim)
        tilt = [Fraction(int(rng.integers(0, 3)), 4) for _ in range(dim)]
        gens.append(tuple(b + t for b, t in zip(base, tilt)))
    K = Cone.from_generators(dim, gens)
    if K.is_pointed and K.is_solid:
        return K
    return Cone.orthant(dim)  # pragma: no cover - tilted generators always span


def random_constraint_cone(dim: int, rng) -> Cone:
    return random_ordering_cone(dim, rng)


def _interior_grid_point(n: int, rng) -> Vector:
    return tuple(Fraction(int(rng.integers(-2, 3))) for _ in range(n))


def random_instance(rng, qualified: bool = True, n=None, m=None, p=None, max_tries: int = 50) -> Problem:
    for _ in range(max_tries):
        prob = _draw(rng, qualified, n, m, p)
        ok = qualification(prob).verdict
        if ok == qualified and not prob.feasible_set.is_empty():
            return prob
    raise RuntimeError("could not draw an instance with the requested qualification")  # pragma: no cover


def _draw(rng, qualified: bool, n, m, p) -> Problem:
    n = n or int(rng.integers(1, 4))
    m = m or int(rng.integers(1, 4))
    K = random_ordering_cone(m, rng)
    C = Polyhedron.box(n, -BOX, BOX)
    F = VectorAffineMap.make(
        rational_matrix(rng, m, n, -2, 2, (1, 2)), rational_vector(rng, m, -2, 2, (1, 2)), in_dim=n
    )
    x0 = _interior_grid_point(n, rng)
    if qualified:
        p = p or int(rng.integers(1, 4))
        S = random_constraint_cone(p, rng)
        Gm = rational_matrix(rng, p, n, -2, 2, (1, 2))
        s0 = tuple(Fraction(int(rng.integers(1, 3))) * c for c in S.interior_point())
        g0 = neg(tuple(a + b for a, b in zip(matvec(Gm, x0), s0)))
        G = VectorAffineMap.make(Gm, g0, in_dim=n)
        meta = {"kind": "qualified", "slater_point": [str(v) for v in x0]}
    else:
        k = 1
        p = 2 * k
        S = Cone.orthant(p)
        row = rational_vector(rng, n, -2, 2, (1, 2))
        if not any(row):
            row = unit(n, 0)
        c = dot(row, x0)
        Gm = (row, neg(row))
        G = VectorAffineMap.make(Gm, (-c, c), in_dim=n)
        meta = {"kind": "unqualified"}
    return Problem(K, S, F, G, C, {"seeded": True, **meta})


@dataclass(frozen=True)
class Query:
    L: tuple
    y: Vector


def random_queries(prob: Problem, rng, count: int) -> list[Query]:
    """(L, y) pairs straddling the boundary of epi_K(F + I_A)*.

    y = (L - F)(x*) + t k0 where x* maximizes w.(L - F) over A for a random
    w in K+; t >= 0 lands inside the epigraph, t < 0 usually outside.
    """
    K = prob.K
    k0 = K.interior_point()
    A = prob.feasible_set
    out = []
    while len(out) < count:
        L = rational_matrix(rng, prob.m, prob.n, -2, 2, (1, 2))
        mix = [int(rng.integers(0, 3)) for _ in K.facets]
        if not any(mix):
            mix[0] = 1
        w = tuple(sum(mix[j] * K.facets[j][i] for j in range(len(K.facets))) for i in range(prob.m))
        D = [[L[i][j] - prob.F.matrix[i][j] for j in range(prob.n)] for i in range(prob.m)]
        c = [-sum(w[i] * D[i][j] for i in range(prob.m)) for j in range(prob.n)]
        res = lp.linprog(c, A.A, A.b)
        if not res.optimal:
            continue
        top = sub(matvec(D, res.x), prob.F.offset)
        t = rational(rng, -1, 1, (1, 2, 4))
        y = tuple(a + t * b for a, b in zip(top, k0))
        out.append(Query(L, y))
    return out


def feasible_candidates(prob: Problem, rng, count: int) -> list[Vector]:
    """Mixture of LP-vertex weak minimizers and random feasible grid points."""
    K = prob.K
    A = prob.feasible_set
    pts: list[Vector] = []
    tries = 0
    while len(pts) < count and tries < 50 * count:
        tries += 1
        if rng.random() < 0.5:
            mix = [int(rng.integers(0, 3)) for _ in K.facets]
            if not any(mix):
                continue
            w = tuple(sum(mix[j] * K.facets[j][i] for j in range(len(K.facets))) for i in range(prob.m))
            c = [sum(w[i] * prob.F.matrix[i][j] for i in range(prob.m)) for j in range(prob.n)]
            res = lp.linprog(c, A.A, A.b)
            if res.optimal and res.x not in pts:
                pts.append(res.x)
        else:
            x = tuple(Fraction(int(rng.integers(-16, 17)), 4) for _ in range(prob.n))
            if A.contains(x) and x not in pts:
                pts.append(x)
    return pts


__all__ = [
    "random_instance",
    "random_queries",
    "feasible_candidates",
    "random_ordering_cone",
    "Query",
]
