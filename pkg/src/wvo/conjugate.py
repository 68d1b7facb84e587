"""Membership oracles for K-epigraphs of vector conjugates.

(L, y) lies in epi_K Phi* exactly when no x in dom Phi gives
y - L(x) + Phi(x) in -int K.  For affine data over polyhedral domains that
is a strict linear system, decided exactly by :func:`wvo.lp.strict_feasible`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

from . import lp
from .errors import PreconditionError
from .order import in_L_plus, in_L_plus_weak
from .problem import Problem
from .rational import Matrix, Vector, add, dot, neg, zeros


@dataclass(frozen=True)
class Verdict:
    """Boolean verdict with the violating point when membership fails."""

    member: bool
    witness: tuple | None = None
    vacuous: bool = False

    def __bool__(self) -> bool:
        return self.member


def _affine_part(prob: Problem, L: Matrix, T: Matrix | None) -> tuple[Matrix, Vector]:
    """Linear part and offset of x -> -L x + F(x) (+ T G(x))."""
    F, G = prob.F, prob.G
    M = [[F.matrix[i][j] - L[i][j] for j in range(prob.n)] for i in range(prob.m)]
    off = list(F.offset)
    if T is not None:
        for i in range(prob.m):
            for k in range(prob.p):
                t = T[i][k]
                if t:
                    Gk = G.matrix[k]
                    for j in range(prob.n):
                        M[i][j] += t * Gk[j]
                    off[i] += t * G.offset[k]
    return tuple(map(tuple, M)), tuple(off)


def _strict_rows(K_facets, M: Matrix, c: Vector):
    """Rows of  A_K (M u + c) < 0  as  (A_K M) u < -A_K c."""
    A_st = [tuple(dot(a, col) for col in zip(*M)) for a in K_facets]
    b_st = [-dot(a, c) for a in K_facets]
    return A_st, b_st


def _decide(prob: Problem, A_st, b_st, domain_rows, nvars, extra_ub=()) -> Verdict:
    A_ub = [a for a, _ in domain_rows] + [a for a, _ in extra_ub]
    b_ub = [b for _, b in domain_rows] + [b for _, b in extra_ub]
    res = lp.strict_feasible(A_st, b_st, A_ub, b_ub, nvars=nvars)
    if res.domain_empty:
        warnings.warn("effective domain is empty; membership holds vacuously", stacklevel=3)
        return Verdict(True, None, vacuous=True)
    if res.feasible:
        return Verdict(False, res.point)
    return Verdict(True)


def epi_member(L, y, prob: Problem, T=None) -> Verdict:
    """(L, y) in epi_K Phi* with Phi = F + I_A (T None) or F + I_C + T o G.

    ``T=0`` with C the whole space gives the plain conjugate F*.
    """
    L = prob.L_matrix(L)
    y = prob.y_vector(y)
    if T is None:
        M, off = _affine_part(prob, L, None)
        domain = prob.feasible_set.rows
    else:
        T = prob.T_matrix(T)
        M, off = _affine_part(prob, L, T)
        domain = prob.base_domain.rows
    A_st, b_st = _strict_rows(prob.K.facets, M, add(y, off))
    return _decide(prob, A_st, b_st, domain, prob.n)


def epi_member_shifted(L, y, T, prob: Problem) -> Verdict:
    """(L, y) in the intersection over v in WSup T(-S) of epi_K(F+I_C+T o G)* + (0, v).

    Decided through the equivalent strict system over (x, s) in C x S:
    y - L(x) + F(x) + T(G(x)) + T(s) in -int K.  The witness, when
    membership fails, is the concatenation (x, s).
    """
    L = prob.L_matrix(L)
    y = prob.y_vector(y)
    T = prob.T_matrix(T)
    if not in_L_plus_weak(T, prob.S, prob.K):
        raise PreconditionError("T is not weakly positive; I_{-S}*(T) is {+inf}")
    M, off = _affine_part(prob, L, T)
    n, p = prob.n, prob.p
    Mxs = tuple(tuple(M[i]) + tuple(T[i]) for i in range(prob.m))
    A_st, b_st = _strict_rows(prob.K.facets, Mxs, add(y, off))
    domain = [(tuple(a) + zeros(p), b) for a, b in prob.base_domain.rows]
    s_rows = [(zeros(n) + neg(d), 0) for d in prob.S.facets]
    v = _decide(prob, A_st, b_st, domain, n + p, s_rows)
    if v.witness is not None:
        return Verdict(False, (v.witness[:n], v.witness[n:]))
    return v


@dataclass(frozen=True)
class RepresentationReport:
    lhs: bool
    rhs_positive: bool
    rhs_weak: bool
    T_positive: tuple | None
    T_weak: tuple | None

    @property
    def consistent(self) -> bool:
        return self.lhs == self.rhs_positive == self.rhs_weak


def representation_equality_check(L, y, prob: Problem, searcher: Callable | None = None) -> RepresentationReport:
    """Evaluate both non-asymptotic representations of epi_K(F+I_A)* at (L, y).

    ``searcher(L, y, prob, mode)`` returns a candidate T or None; the default
    is the constructive scalarize-and-lift search.  Each candidate is
    re-verified here before it counts.
    """
    from .multipliers import qualification

    if not qualification(prob).verdict:
        from .errors import QualificationError

        raise QualificationError("neither the Slater nor the relative-interior condition holds")
    if searcher is None:
        from .farkas import FarkasQuery, search_T

        def searcher(L_, y_, prob_, mode):
            return search_T(FarkasQuery(L_, y_, prob_), mode)

    lhs = bool(epi_member(L, y, prob))
    T1 = searcher(L, y, prob, "L_plus")
    rhs1 = T1 is not None and in_L_plus(T1, prob.S, prob.K) and bool(epi_member(L, y, prob, T1))
    T2 = searcher(L, y, prob, "L_plus_weak")
    rhs2 = (
        T2 is not None and in_L_plus_weak(T2, prob.S, prob.K) and bool(epi_member_shifted(L, y, T2, prob))
    )
    return RepresentationReport(lhs, rhs1, rhs2, T1 if rhs1 else None, T2 if rhs2 else None)
