"""Exact rational linear programming.

A dense two-phase primal simplex with Bland's rule, so it cannot cycle and
every answer is bit-exact.  Problems are tiny (a handful of rows), which is
why a dense tableau is the right trade-off here.

Conventions for :func:`linprog`::

    minimize    c . x
    subject to  A_ub x <= b_ub
                A_eq x == b_eq
                x_j >= 0 for j with nonneg[j], otherwise free

Dual multipliers are reported with the Lagrangian sign convention
``c + A_ub^T lam + A_eq^T nu = 0`` on free columns (``>= 0`` on nonnegative
ones), ``lam >= 0``, and optimal value ``-b_ub . lam - b_eq . nu``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _backend

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple | None = None
    value: Fraction | None = None
    duals_ub: tuple | None = None
    duals_eq: tuple | None = None
    pivots: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


def _pivot(T, z, basis, r, e):
    row = T[r]
    piv = row[e]
    if piv != 1:
        inv = 1 / piv
        for j, v in enumerate(row):
            if v:
                row[j] = v * inv
    nz = [j for j, v in enumerate(row) if v]
    for i, other in enumerate(T):
        if i != r:
            f = other[e]
            if f:
                for j in nz:
                    other[j] -= f * row[j]
    f = z[e]
    if f:
        for j in nz:
            z[j] -= f * row[j]
    basis[r] = e


def _bland(T, z, basis, allowed, limit):
    """Run simplex iterations on ``(T, z)``; returns (status, pivots)."""
    count = 0
    ncols = len(z) - 1
    while True:
        e = -1
        for j in range(ncols):
            if allowed[j] and z[j] < 0:
                e = j
                break
        if e < 0:
            return OPTIMAL, count
        best = None
        r = -1
        for i, row in enumerate(T):
            a = row[e]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[r]):
                    best, r = ratio, i
        if r < 0:
            return UNBOUNDED, count
        _pivot(T, z, basis, r, e)
        count += 1
        if count > limit:  # pragma: no cover - Bland's rule terminates
            raise RuntimeError("simplex iteration limit exceeded")


def linprog(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    nonneg: Sequence[bool] | None = None,
    backend: str | None = None,
) -> LPResult:
    Q = _backend.number_type(backend)
    nv = len(c)
    if nonneg is None:
        nonneg = [False] * nv
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ValueError("constraint matrix / rhs length mismatch")
    for row in list(A_ub) + list(A_eq):
        if len(row) != nv:
            raise ValueError(f"constraint row of length {len(row)} for {nv} variables")

    # structural columns: x_j -> (plus[, minus])
    colmap = []
    ncol = 0
    for j in range(nv):
        if nonneg[j]:
            colmap.append((ncol, None))
            ncol += 1
        else:
            colmap.append((ncol, ncol + 1))
            ncol += 2
    n_struct = ncol
    m_ub, m_eq = len(A_ub), len(A_eq)
    m = m_ub + m_eq
    slack0 = ncol
    ncol += m_ub

    rows = []
    signs = []
    needs_art = []
    for i in range(m):
        if i < m_ub:
            a, b = A_ub[i], b_ub[i]
        else:
            a, b = A_eq[i - m_ub], b_eq[i - m_ub]
        b = Q(b)
        s = -1 if b < 0 else 1
        row = [Q(0)] * ncol
        for j in range(nv):
            v = Q(a[j])
            if v:
                p, mcol = colmap[j]
                row[p] = s * v
                if mcol is not None:
                    row[mcol] = -s * v
        if i < m_ub:
            row[slack0 + i] = Q(s)
        row.append(s * b)
        rows.append(row)
        signs.append(s)
        needs_art.append(i >= m_ub or s < 0)

    art_of = {}
    for i in range(m):
        if needs_art[i]:
            art_of[i] = ncol
            ncol += 1
    T = []
    for i, row in enumerate(rows):
        rhs = row.pop()
        row.extend([Q(0)] * (ncol - len(row)))
        if i in art_of:
            row[art_of[i]] = Q(1)
        row.append(rhs)
        T.append(row)
    basis = [art_of.get(i, slack0 + i) for i in range(m)]
    init_col = list(basis)
    is_art = [False] * ncol
    for col in art_of.values():
        is_art[col] = True
    limit = 50_000
    pivots = 0

    # phase 1
    if art_of:
        z = [Q(0)] * (ncol + 1)
        for col in art_of.values():
            z[col] = Q(1)
        for i in art_of:
            row = T[i]
            for j, v in enumerate(row):
                if v:
                    z[j] -= v
        status, k = _bland(T, z, basis, [True] * ncol, limit)
        pivots += k
        if -z[-1] > 0:
            return LPResult(INFEASIBLE, pivots=pivots)
        # drive zero-level artificials out of the basis where possible
        for i in range(m):
            if is_art[basis[i]]:
                row = T[i]
                e = next((j for j in range(ncol) if not is_art[j] and row[j]), None)
                if e is not None:
                    _pivot(T, z, basis, i, e)
                    pivots += 1

    # phase 2
    cost = [Q(0)] * ncol
    for j in range(nv):
        p, mcol = colmap[j]
        cj = Q(c[j])
        cost[p] = cj
        if mcol is not None:
            cost[mcol] = -cj
    z = cost + [Q(0)]
    for i, row in enumerate(T):
        cb = cost[basis[i]]
        if cb:
            for j, v in enumerate(row):
                if v:
                    z[j] -= cb * v
    allowed = [not a for a in is_art]
    status, k = _bland(T, z, basis, allowed, limit)
    pivots += k
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=pivots)

    u = [Q(0)] * ncol
    for i, row in enumerate(T):
        u[basis[i]] = row[-1]
    tf = _backend.to_fraction
    x = []
    for j in range(nv):
        p, mcol = colmap[j]
        val = u[p] - (u[mcol] if mcol is not None else 0)
        x.append(tf(val))
    value = sum((Fraction(cj) * xj for cj, xj in zip(map(Fraction, c), x)), Fraction(0))
    lam = tuple(tf(signs[i] * z[init_col[i]]) for i in range(m_ub))
    nu = tuple(tf(signs[i] * z[init_col[i]]) for i in range(m_ub, m))
    return LPResult(OPTIMAL, tuple(x), value, lam, nu, pivots)


def feasible_point(A_ub=(), b_ub=(), A_eq=(), b_eq=(), nvars: int | None = None):
    """Any point of the polyhedron, or None when it is empty."""
    if nvars is None:
        rows = list(A_ub) + list(A_eq)
        nvars = len(rows[0]) if rows else 0
    res = linprog([0] * nvars, A_ub, b_ub, A_eq, b_eq)
    return res.x if res.optimal else None


@dataclass(frozen=True)
class StrictResult:
    """Outcome of a mixed strict / non-strict feasibility probe."""

    feasible: bool
    point: tuple | None
    slack: Fraction | None
    domain_empty: bool

    def __bool__(self) -> bool:
        return self.feasible


def strict_feasible(
    A_st: Sequence[Sequence],
    b_st: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    nvars: int | None = None,
    backend: str | None = None,
) -> StrictResult:
    """Decide  exists x: A_st x < b_st, A_ub x <= b_ub, A_eq x == b_eq.

    Solved as  max t  s.t.  A_st x + t <= b_st,  t <= 1; the system is
    strictly feasible iff the optimum is positive.  The cap on t keeps the
    LP bounded over unbounded polyhedra.
    """
    if nvars is None:
        rows = list(A_st) + list(A_ub) + list(A_eq)
        if not rows:
            raise ValueError("cannot infer the number of variables")
        nvars = len(rows[0])
    if not A_st:
        res = linprog([0] * nvars, A_ub, b_ub, A_eq, b_eq, backend=backend)
        if not res.optimal:
            return StrictResult(False, None, None, True)
        return StrictResult(True, res.x, None, False)
    c = [0] * nvars + [-1]
    rows = [list(a) + [1] for a in A_st]
    rows += [list(a) + [0] for a in A_ub]
    rows.append([0] * nvars + [1])
    rhs = list(b_st) + list(b_ub) + [1]
    eq = [list(a) + [0] for a in A_eq]
    res = linprog(c, rows, rhs, eq, b_eq, backend=backend)
    if res.status == INFEASIBLE:
        return StrictResult(False, None, None, True)
    assert res.optimal, res.status
    t = res.x[-1]
    if t > 0:
        return StrictResult(True, res.x[:-1], t, False)
    return StrictResult(False, None, t, False)
