"""Problem data: polyhedra, affine vector maps, and the constrained problem.

``Problem`` bundles ordering cone K (in Y = Q^m), constraint cone S
(in Z = Q^p), objective F : X -> Y, constraint map G : X -> Z and the
polyhedral constraint set C in X = Q^n.  Affine maps carry an effective
domain; outside it they take the value +infinity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from . import lp
from .cone import Cone
from .errors import DimensionError, PreconditionError
from .rational import (
    Matrix,
    Vector,
    ZERO,
    add,
    check_dim,
    dot,
    fmt,
    fmt_mat,
    fmt_vec,
    mat,
    matvec,
    neg,
    q,
    vec,
    zero_matrix,
    zeros,
)


@dataclass(frozen=True)
class Polyhedron:
    """``{x in Q^dim : <a, x> <= b for every row (a, b)}``."""

    dim: int
    rows: tuple = ()

    @classmethod
    def make(cls, dim: int, rows: Sequence = ()) -> "Polyhedron":
        out = []
        for a, b in rows:
            a = vec(a)
            check_dim(a, dim, "polyhedron row")
            out.append((a, q(b)))
        return cls(dim, tuple(out))

    @classmethod
    def full(cls, dim: int) -> "Polyhedron":
        return cls(dim, ())

    @classmethod
    def box(cls, dim: int, lo, hi) -> "Polyhedron":
        rows = []
        for i in range(dim):
            e = [0] * dim
            e[i] = 1
            rows.append((e, hi))
            e = [0] * dim
            e[i] = -1
            rows.append((e, -q(lo)))
        return cls.make(dim, rows)

    @classmethod
    def point(cls, x: Sequence) -> "Polyhedron":
        x = vec(x)
        rows = []
        for i, xi in enumerate(x):
            e = [0] * len(x)
            e[i] = 1
            rows.append((e, xi))
            rows.append((neg(e), -xi))
        return cls.make(len(x), rows)

    @property
    def A(self) -> Matrix:
        return tuple(a for a, _ in self.rows)

    @property
    def b(self) -> Vector:
        return tuple(b for _, b in self.rows)

    def intersect(self, other: "Polyhedron") -> "Polyhedron":
        if other.dim != self.dim:
            raise DimensionError("intersecting polyhedra of different dimension")
        rows = list(self.rows)
        for r in other.rows:
            if r not in rows:
                rows.append(r)
        return Polyhedron(self.dim, tuple(rows))

    def contains(self, x: Sequence) -> bool:
        x = vec(x)
        check_dim(x, self.dim, "point")
        return all(dot(a, x) <= b for a, b in self.rows)

    def some_point(self) -> Vector | None:
        if not self.rows:
            return zeros(self.dim)
        return lp.feasible_point(self.A, self.b, nvars=self.dim)

    def is_empty(self) -> bool:
        return self.some_point() is None

    def to_dict(self) -> dict:
        return {"dim": self.dim, "rows": [{"a": fmt_vec(a), "b": fmt(b)} for a, b in self.rows]}

    @classmethod
    def from_dict(cls, d: dict, approx: bool = False) -> "Polyhedron":
        dim = int(d["dim"])
        rows = [(vec(r["a"], approx), q(r["b"], approx)) for r in d.get("rows", [])]
        return cls.make(dim, rows)


@dataclass(frozen=True)
class VectorAffineMap:
    """``x -> M x + b`` on an effective domain (+infinity elsewhere)."""

    matrix: Matrix
    offset: Vector
    domain: Polyhedron

    @classmethod
    def make(cls, matrix, offset=None, domain: Polyhedron | None = None, in_dim: int | None = None):
        M = mat(matrix)
        if in_dim is None:
            if not M or not M[0]:
                raise DimensionError("cannot infer input dimension of an empty matrix")
            in_dim = len(M[0])
        for row in M:
            check_dim(row, in_dim, "matrix row")
        b = zeros(len(M)) if offset is None else vec(offset)
        check_dim(b, len(M), "offset")
        if domain is None:
            domain = Polyhedron.full(in_dim)
        if domain.dim != in_dim:
            raise DimensionError("domain dimension does not match the map")
        return cls(M, b, domain)

    @classmethod
    def zero(cls, out_dim: int, in_dim: int) -> "VectorAffineMap":
        return cls(zero_matrix(out_dim, in_dim), zeros(out_dim), Polyhedron.full(in_dim))

    @property
    def in_dim(self) -> int:
        return self.domain.dim

    @property
    def out_dim(self) -> int:
        return len(self.offset)

    def linear(self, x: Sequence) -> Vector:
        return matvec(self.matrix, x)

    def __call__(self, x: Sequence) -> Vector | None:
        """Value at x, or None for +infinity outside the effective domain."""
        x = vec(x)
        check_dim(x, self.in_dim, "argument")
        if not self.domain.contains(x):
            return None
        return add(matvec(self.matrix, x), self.offset)

    def to_dict(self) -> dict:
        d = {"matrix": fmt_mat(self.matrix), "offset": fmt_vec(self.offset)}
        if self.domain.rows:
            d["domain"] = self.domain.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict, in_dim: int, approx: bool = False) -> "VectorAffineMap":
        dom = Polyhedron.from_dict(d["domain"], approx) if d.get("domain") else None
        M = tuple(vec(r, approx) for r in d["matrix"])
        off = vec(d["offset"], approx) if "offset" in d else None
        return cls.make(M, off, dom, in_dim=in_dim)


@dataclass(frozen=True)
class Problem:
    """``WMin { F(x) : x in C, G(x) in -S }`` with ordering cone K."""

    K: Cone
    S: Cone
    F: VectorAffineMap
    G: VectorAffineMap
    C: Polyhedron
    metadata: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        n = self.C.dim
        if self.F.in_dim != n or self.G.in_dim != n:
            raise DimensionError("F, G and C must share the decision space")
        if self.F.out_dim != self.K.dim:
            raise DimensionError("F maps into a space of the wrong dimension for K")
        if self.G.out_dim != self.S.dim:
            raise DimensionError("G maps into a space of the wrong dimension for S")

    @property
    def n(self) -> int:
        return self.C.dim

    @property
    def m(self) -> int:
        return self.K.dim

    @property
    def p(self) -> int:
        return self.S.dim

    @cached_property
    def base_domain(self) -> Polyhedron:
        """C cap dom F cap dom G."""
        return self.C.intersect(self.F.domain).intersect(self.G.domain)

    @cached_property
    def constraint_rows(self) -> tuple:
        """Rows of ``G(x) in -S`` as ``<a, x> <= b``: D (G_m x + g0) <= 0."""
        rows = []
        for d in self.S.facets:
            a = tuple(dot(d, col) for col in zip(*self.G.matrix))
            rows.append((a, -dot(d, self.G.offset)))
        return tuple(rows)

    @cached_property
    def feasible_set(self) -> Polyhedron:
        """A cap dom F cap dom G, with A = C cap G^{-1}(-S)."""
        base = self.base_domain
        return Polyhedron(self.n, base.rows + tuple(r for r in self.constraint_rows if r not in base.rows))

    def is_feasible(self, x: Sequence) -> bool:
        return self.feasible_set.contains(x)

    def check(self) -> "Problem":
        """Enforce the standing assumptions (ordering cone, A cap dom F nonempty)."""
        self.K.require_ordering()
        if self.feasible_set.is_empty():
            raise PreconditionError("feasible set A cap dom F is empty")
        return self

    def T_matrix(self, T) -> Matrix:
        """Coerce a multiplier Z -> Y to an m x p matrix."""
        T = mat(T)
        if len(T) != self.m or any(len(r) != self.p for r in T):
            raise DimensionError(f"multiplier must be {self.m}x{self.p}")
        return T

    def L_matrix(self, L) -> Matrix:
        L = mat(L)
        if len(L) != self.m or any(len(r) != self.n for r in L):
            raise DimensionError(f"linear map L must be {self.m}x{self.n}")
        return L

    def y_vector(self, y) -> Vector:
        y = vec(y)
        check_dim(y, self.m, "y")
        return y

    def objective(self, x) -> Vector:
        val = self.F(x)
        if val is None:
            raise PreconditionError("point outside dom F")
        return val


def column_matrix(values: Sequence) -> Matrix:
    """Column vector (k x 1) from a flat sequence."""
    return tuple((q(v),) for v in values)


__all__ = ["Polyhedron", "VectorAffineMap", "Problem", "column_matrix", "ZERO"]
