"""Weak-order calculus over polyhedral ordering cones.

Finite sets get exact WMax / WMin / SMax filters and a WSup membership
test.  Images T(-S) of polyhedral cones get a WSup oracle built from two
LPs, plus the L_+ / weakly positive classification of linear maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import lp
from ._kernels import exact_any_below
from .cone import Cone
from .errors import DimensionError
from .rational import Matrix, Vector, check_dim, dot, mat, matvec, neg, sub, vec, zeros

INFINITE = "INFINITE"
ORACLE = "ORACLE"


@dataclass(frozen=True)
class PointSet:
    dim: int
    points: tuple

    @classmethod
    def make(cls, points: Iterable[Sequence], dim: int | None = None) -> "PointSet":
        pts = tuple(vec(p) for p in points)
        if dim is None:
            if not pts:
                raise DimensionError("cannot infer the dimension of an empty point set")
            dim = len(pts[0])
        for p in pts:
            check_dim(p, dim, "point")
        return cls(dim, pts)

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, y) -> bool:
        return vec(y) in self.points


def _as_set(M, K: Cone) -> PointSet:
    if not isinstance(M, PointSet):
        M = PointSet.make(M, K.dim)
    if M.dim != K.dim:
        raise DimensionError(f"points of dimension {M.dim} for a cone in dimension {K.dim}")
    if not M.points:
        raise ValueError("point set is empty")
    return M


def _scores(M: PointSet, K: Cone) -> list[Vector]:
    return [tuple(dot(a, v) for a in K.facets) for v in M.points]


def wmax(M, K: Cone) -> PointSet:
    """``M \\ (M - int K)``: points no other point beats by an interior step."""
    M = _as_set(M, K)
    neg_scores = [neg(s) for s in _scores(M, K)]
    beaten = exact_any_below(neg_scores, neg_scores)
    return PointSet(M.dim, tuple(v for v, b in zip(M.points, beaten) if not b))


def wmin(M, K: Cone) -> PointSet:
    """``M \\ (M + int K)``, the mirror of :func:`wmax`."""
    M = _as_set(M, K)
    scores = _scores(M, K)
    beaten = exact_any_below(scores, scores)
    return PointSet(M.dim, tuple(v for v, b in zip(M.points, beaten) if not b))


def smax(M, K: Cone) -> Vector | None:
    """The point v with ``M`` inside ``v - K``, or None.  Unique when K is pointed."""
    M = _as_set(M, K)
    for v in M.points:
        if all(K.contains(sub(v, u)) for u in M.points):
            return v
    return None


def wsup_finite_contains(M, K: Cone, y) -> bool:
    """Membership in ``WSup M = (M - K) \\ (M - int K)`` for finite M.

    A finite M never has WSup M = {+inf}: M - int K is a finite union of
    translated open cones and cannot cover Y.  Closure of M - int K is
    M - K because K is closed and solid.
    """
    M = _as_set(M, K)
    y = vec(y)
    check_dim(y, K.dim, "y")
    diffs = [sub(v, y) for v in M.points]
    return any(K.contains(d) for d in diffs) and not any(K.interior_contains(d) for d in diffs)


@dataclass(frozen=True)
class WSupResult:
    """Either ``{+inf}`` (kind INFINITE) or a membership oracle over Y."""

    kind: str
    oracle: Callable[[Sequence], bool] | None = None
    source: object = None
    cone: Cone | None = None

    @property
    def infinite(self) -> bool:
        return self.kind == INFINITE

    def __contains__(self, y) -> bool:
        # {+inf_Y} contains no finite vector
        return self.oracle is not None and self.oracle(y)


def wsup_finite(M, K: Cone) -> WSupResult:
    M = _as_set(M, K)
    return WSupResult(ORACLE, lambda y: wsup_finite_contains(M, K, y), M, K)


def _check_T(T, S: Cone, K: Cone) -> Matrix:
    T = mat(T)
    if len(T) != K.dim or any(len(r) != S.dim for r in T):
        raise DimensionError(f"T must be {K.dim}x{S.dim}")
    return T


def in_L_plus(T, S: Cone, K: Cone) -> bool:
    """T(S) inside K, checked on the generators of S."""
    T = _check_T(T, S, K)
    return all(K.contains(matvec(T, g)) for g in S.generators)


def in_L_plus_weak(T, S: Cone, K: Cone) -> bool:
    """T(S) misses -int K.  By homogeneity: {s in S, A_K T s <= -1} is infeasible."""
    T = _check_T(T, S, K)
    AT = [tuple(dot(a, col) for col in zip(*T)) for a in K.facets]
    if not AT:
        return False
    A_ub = [neg(d) for d in S.facets] + AT
    b_ub = [0] * len(S.facets) + [-1] * len(AT)
    return lp.feasible_point(A_ub, b_ub, nvars=S.dim) is None


def _image_rows(T: Matrix, S: Cone, K: Cone, y: Vector):
    """Rows in s of  A_K(-T s - y) >= 0  as  (A_K T) s <= -A_K y."""
    AT = [tuple(dot(a, col) for col in zip(*T)) for a in K.facets]
    rhs = [-dot(a, y) for a in K.facets]
    return AT, rhs


def _cone_image_oracle(T: Matrix, S: Cone, K: Cone) -> Callable[[Sequence], bool]:
    s_rows = [neg(d) for d in S.facets]
    s_rhs = [0] * len(S.facets)

    def oracle(y) -> bool:
        y = vec(y)
        check_dim(y, K.dim, "y")
        AT, rhs = _image_rows(T, S, K, y)
        in_closure = lp.feasible_point(AT + s_rows, rhs + s_rhs, nvars=S.dim) is not None
        if not in_closure:
            return False
        below = lp.strict_feasible(AT, rhs, s_rows, s_rhs, nvars=S.dim)
        return not below.feasible

    return oracle


def wsup_cone_image(T, S: Cone, K: Cone) -> WSupResult:
    """``WSup T(-S)``, i.e. the conjugate of the indicator of -S at T."""
    T = _check_T(T, S, K)
    if not in_L_plus_weak(T, S, K):
        return WSupResult(INFINITE, None, T, K)
    return WSupResult(ORACLE, _cone_image_oracle(T, S, K), T, K)


@dataclass(frozen=True)
class DomClass:
    in_dom: bool
    in_dom_M: bool
    smax_zero: bool

    def to_dict(self) -> dict:
        return {"in_dom": self.in_dom, "in_dom_M": self.in_dom_M, "smax_zero": self.smax_zero}


def classify_dom(T, S: Cone, K: Cone) -> DomClass:
    """Domain and M-domain of the conjugate indicator of -S at T.

    For T in L_+ the WSup contains 0 and lies inside -K, so 0 is its strong
    maximum; ``smax_zero`` records that this was confirmed by the oracle.
    """
    T = _check_T(T, S, K)
    weak = in_L_plus_weak(T, S, K)
    pos = in_L_plus(T, S, K)
    smax_zero = False
    if pos:
        res = wsup_cone_image(T, S, K)
        # T(-S) inside -K puts the whole WSup inside -K, so 0 in WSup makes it SMax
        smax_zero = zeros(K.dim) in res
        assert smax_zero, "positive map without 0 as strong maximum of WSup T(-S)"
    return DomClass(weak, pos, smax_zero)
