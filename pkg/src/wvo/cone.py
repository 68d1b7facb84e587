"""Polyhedral cones ``{y : <a_j, y> >= 0 for all facets a_j}``.

Facet systems are canonicalized on construction (primitive integer normals,
duplicates and redundant rows removed), so for a solid cone the strict
inequalities describe the interior exactly.  Generators are enumerated on
demand for ambient dimension at most :data:`MAX_GENERATOR_DIM`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import lp
from .errors import DimensionError, PreconditionError, UnsupportedDimension
from .rational import (
    Vector,
    check_dim,
    dot,
    fmt_vec,
    neg,
    nullspace,
    primitive,
    rank,
    unit,
    vec,
)

MAX_GENERATOR_DIM = 4


def _canonical_rows(rows: Iterable[Sequence], dim: int) -> tuple[Vector, ...]:
    seen = []
    for r in rows:
        r = vec(r)
        check_dim(r, dim, "facet normal")
        p = primitive(r)
        if any(p) and p not in seen:
            seen.append(p)
    return tuple(sorted(seen, reverse=True))


def _is_redundant(row: Vector, others: Sequence[Vector], dim: int) -> bool:
    """True when ``others >= 0`` already implies ``<row, y> >= 0``."""
    A_ub = [neg(a) for a in others] + [neg(row)]
    b_ub = [0] * len(others) + [1]
    res = lp.linprog(list(row), A_ub, b_ub)
    return res.optimal and res.value >= 0


def _remove_redundant(rows: tuple[Vector, ...], dim: int) -> tuple[Vector, ...]:
    kept = list(rows)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1 :]
        if others and _is_redundant(kept[i], others, dim):
            kept.pop(i)
        else:
            i += 1
    return tuple(kept)


def extreme_generators(facets: Sequence[Vector], dim: int) -> tuple[Vector, ...]:
    """Generators of ``{y : A y >= 0}``: extreme rays plus +/- a lineality basis.

    Rays are enumerated as one-dimensional intersections of ``dim - 1``
    independent active constraints, which is exact and cheap for the small
    dimensions supported here.
    """
    if dim > MAX_GENERATOR_DIM:
        raise UnsupportedDimension(f"generator enumeration only for dim <= {MAX_GENERATOR_DIM}")
    A = [tuple(a) for a in facets]
    lineality = nullspace(A, dim)
    k = len(lineality)
    gens: list[Vector] = []
    need = dim - 1 - k
    if need >= 0:
        for subset in itertools.combinations(range(len(A)), need):
            active = [A[i] for i in subset] + list(lineality)
            if rank(active) != dim - 1:
                continue
            (r,) = nullspace(active, dim)
            vals = [dot(a, r) for a in A]
            if all(v >= 0 for v in vals):
                cand = primitive(r)
            elif all(v <= 0 for v in vals):
                cand = primitive(neg(r))
            else:
                continue
            if cand not in gens:
                gens.append(cand)
    for b in lineality:
        gens.append(primitive(b))
        gens.append(primitive(neg(b)))
    return tuple(gens)


@dataclass(frozen=True)
class Cone:
    dim: int
    facets: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("cone dimension must be positive")

    @classmethod
    def from_facets(cls, dim: int, facets: Iterable[Sequence], redundancy: bool = True) -> "Cone":
        rows = _canonical_rows(facets, dim)
        if redundancy and len(rows) > 1:
            rows = _remove_redundant(rows, dim)
        return cls(dim, rows)

    @classmethod
    def from_generators(cls, dim: int, generators: Iterable[Sequence]) -> "Cone":
        gens = [vec(g) for g in generators]
        for g in gens:
            check_dim(g, dim, "generator")
        # facets of cone(G) are the generators of its dual {a : <a, g> >= 0}
        facets = extreme_generators([primitive(g) for g in gens if any(g)], dim)
        return cls.from_facets(dim, facets)

    @classmethod
    def orthant(cls, dim: int) -> "Cone":
        return cls.from_facets(dim, [unit(dim, i) for i in range(dim)], redundancy=False)

    @classmethod
    def whole_space(cls, dim: int) -> "Cone":
        return cls(dim, ())

    @classmethod
    def zero(cls, dim: int) -> "Cone":
        rows = [unit(dim, i) for i in range(dim)] + [neg(unit(dim, i)) for i in range(dim)]
        return cls.from_facets(dim, rows)

    @cached_property
    def generators(self) -> tuple[Vector, ...]:
        return extreme_generators(self.facets, self.dim)

    def _check(self, y: Sequence) -> Vector:
        y = vec(y)
        if len(y) != self.dim:
            raise DimensionError(f"vector of dimension {len(y)} for a cone in dimension {self.dim}")
        return y

    def contains(self, y: Sequence) -> bool:
        y = self._check(y)
        return all(dot(a, y) >= 0 for a in self.facets)

    def interior_contains(self, y: Sequence) -> bool:
        y = self._check(y)
        if not self.facets:
            return True
        return all(dot(a, y) > 0 for a in self.facets)

    @cached_property
    def is_pointed(self) -> bool:
        # K cap -K = null(A); trivial iff A has full column rank
        return rank(self.facets) == self.dim if self.facets else False

    @cached_property
    def is_solid(self) -> bool:
        if not self.facets:
            return True
        A_ub = [neg(a) for a in self.facets]
        return lp.feasible_point(A_ub, [-1] * len(self.facets), nvars=self.dim) is not None

    def require_ordering(self) -> "Cone":
        if not (self.is_pointed and self.is_solid):
            raise PreconditionError(
                f"ordering cone must be pointed and solid (pointed={self.is_pointed}, solid={self.is_solid})"
            )
        return self

    def interior_point(self) -> Vector:
        """Sum of canonical generators, or an LP interior point above the cap."""
        if not self.is_solid:
            raise PreconditionError("cone has empty interior")
        if self.dim <= MAX_GENERATOR_DIM and self.is_pointed:
            k = [sum(c) for c in zip(*self.generators)]
            return vec(k)
        A_ub = [neg(a) for a in self.facets]
        return lp.feasible_point(A_ub, [-1] * len(self.facets), nvars=self.dim)

    def issubset(self, other: "Cone") -> bool:
        return all(other.contains(g) for g in self.generators)

    def same_set(self, other: "Cone") -> bool:
        return self.dim == other.dim and self.issubset(other) and other.issubset(self)

    def to_dict(self, with_generators: bool = False) -> dict:
        d = {"dim": self.dim, "facets": [fmt_vec(a) for a in self.facets]}
        if with_generators:
            d["generators"] = [fmt_vec(g) for g in self.generators]
        return d

    @classmethod
    def from_dict(cls, d: dict, approx: bool = False) -> "Cone":
        dim = int(d["dim"])
        if "facets" not in d:
            if "generators" not in d:
                raise KeyError("cone needs 'facets' or 'generators'")
            return cls.from_generators(dim, [vec(g, approx) for g in d["generators"]])
        facets = [vec(r, approx) for r in d["facets"]]
        cone = cls.from_facets(dim, facets)
        for g in d.get("generators", []) or []:
            if not cone.contains(vec(g, approx)):
                raise PreconditionError(f"generator {g} violates a facet inequality")
        return cone


def cone_contains(K: Cone, y: Sequence) -> bool:
    return K.contains(y)


def cone_interior_contains(K: Cone, y: Sequence) -> bool:
    if not K.is_solid:
        raise PreconditionError("interior membership asked of a cone with empty interior")
    return K.interior_contains(y)


def dual_cone(K: Cone) -> Cone:
    """``K+ = {w : <w, k> >= 0 for all k in K}``; facets of K become generators."""
    return Cone.from_facets(K.dim, K.generators)


def validate_ordering_cone(K: Cone) -> dict:
    return {"pointed": K.is_pointed, "solid": K.is_solid}


def in_dual_cone(K: Cone, w: Sequence) -> bool:
    """``w in K+``, decided by LP so it works without generators."""
    w = K._check(w)
    if not K.facets:
        return not any(w)
    res = lp.linprog(list(w), [neg(a) for a in K.facets], [0] * len(K.facets))
    return res.optimal
