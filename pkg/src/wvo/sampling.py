"""Seeded random rationals and random positive / weakly positive maps."""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cone import Cone
from .order import in_L_plus_weak
from .rational import Matrix, outer, mat_add, scale, zero_matrix

DEFAULT_SEED = 20240601


def seed_from_env(default: int = DEFAULT_SEED) -> int:
    raw = os.environ.get("WVO_SEED")
    return int(raw) if raw not in (None, "") else default


def make_rng(seed: int | None = None) -> np.random.Generator:
    return np.random.default_rng(seed_from_env() if seed is None else seed)


def rational(rng: np.random.Generator, lo: int = -3, hi: int = 3, dens: Sequence[int] = (1, 2, 3, 4)) -> Fraction:
    """Uniform-ish rational in [lo, hi] with a denominator drawn from ``dens``."""
    d = int(rng.choice(dens))
    return Fraction(int(rng.integers(lo * d, hi * d + 1)), d)


def rational_vector(rng, n: int, lo: int = -3, hi: int = 3, dens=(1, 2, 3, 4)) -> tuple:
    return tuple(rational(rng, lo, hi, dens) for _ in range(n))


def rational_matrix(rng, m: int, n: int, lo: int = -3, hi: int = 3, dens=(1, 2, 3, 4)) -> Matrix:
    return tuple(rational_vector(rng, n, lo, hi, dens) for _ in range(m))


def random_L_plus(S: Cone, K: Cone, rng, terms: int = 2) -> Matrix:
    """Nonnegative combination of rank-one maps k z^T, k in K, z in S+.

    Facet normals of S generate S+; generators of K generate K.
    """
    T = zero_matrix(K.dim, S.dim)
    ks, zs = K.generators, S.facets
    if not ks or not zs:
        return T
    for _ in range(terms):
        k = ks[int(rng.integers(len(ks)))]
        z = zs[int(rng.integers(len(zs)))]
        c = Fraction(int(rng.integers(0, 7)), int(rng.choice((1, 2, 3))))
        T = mat_add(T, scale_matrix(c, outer(k, z)))
    return T


def scale_matrix(c, M: Matrix) -> Matrix:
    return tuple(scale(c, r) for r in M)


def random_L_plus_weak(S: Cone, K: Cone, rng, tries: int = 64) -> Matrix:
    """Random weakly positive map by rejection; falls back to a positive one."""
    for _ in range(tries):
        T = rational_matrix(rng, K.dim, S.dim, -2, 2, (1, 2))
        if in_L_plus_weak(T, S, K):
            return T
    return random_L_plus(S, K, rng)


def random_map(S: Cone, K: Cone, rng) -> Matrix:
    return rational_matrix(rng, K.dim, S.dim, -2, 2, (1, 2))
