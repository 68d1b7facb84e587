"""Integer dominance kernels: numba ``@njit`` path with a pure-numpy fallback.

The brute-force parts of the toolkit (pairwise WMax/WMin filtering, grid
minimality oracles) reduce to one question over integer score vectors::

    for each candidate row c, is there a pool row r with r < c componentwise?

Exact rationals are scaled to a common integer denominator before they get
here, so both paths are exact.  ``WVO_JIT=0`` selects the numpy path; the
default uses numba when it imports.
"""

from __future__ import annotations

import math
import os
from typing import Sequence

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

INT_LIMIT = 2**62


def _jit_requested() -> bool:
    return os.environ.get("WVO_JIT", "1").strip().lower() not in ("0", "false", "no", "off")


KERNEL = "numba" if (HAVE_NUMBA and _jit_requested()) else "numpy"


def any_below_numpy(cand: np.ndarray, pool: np.ndarray, budget: int = 1 << 22) -> np.ndarray:
    c, f = cand.shape
    out = np.zeros(c, dtype=bool)
    if c == 0 or pool.shape[0] == 0:
        return out
    step = max(1, budget // max(1, c * f))
    for start in range(0, pool.shape[0], step):
        blk = pool[start : start + step]
        out |= (blk[None, :, :] < cand[:, None, :]).all(axis=2).any(axis=1)
    return out


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def any_below_jit(cand, pool):  # pragma: no cover - compiled
        c, f = cand.shape
        n = pool.shape[0]
        out = np.zeros(c, dtype=np.bool_)
        for i in range(c):
            for r in range(n):
                ok = True
                for j in range(f):
                    if pool[r, j] >= cand[i, j]:
                        ok = False
                        break
                if ok:
                    out[i] = True
                    break
        return out

else:  # pragma: no cover
    any_below_jit = None


def any_below(cand: np.ndarray, pool: np.ndarray, kernel: str | None = None) -> np.ndarray:
    """Integer kernel entry point; ``kernel`` overrides the env selection."""
    kernel = kernel or KERNEL
    cand = np.ascontiguousarray(cand, dtype=np.int64)
    pool = np.ascontiguousarray(pool, dtype=np.int64)
    if cand.ndim != 2 or pool.ndim != 2 or cand.shape[1] != pool.shape[1]:
        raise ValueError("score arrays must be 2-D with matching widths")
    if kernel == "numba":
        if any_below_jit is None:
            raise RuntimeError("numba is not available")
        return any_below_jit(cand, pool)
    if kernel == "numpy":
        return any_below_numpy(cand, pool)
    raise ValueError(f"unknown kernel {kernel!r}")


def _common_scale(rows: Sequence[Sequence]) -> int:
    den = 1
    for r in rows:
        for v in r:
            d = getattr(v, "denominator", 1)
            den = den * d // math.gcd(den, d)
    return den


def exact_any_below(cand: Sequence[Sequence], pool: Sequence[Sequence], kernel: str | None = None) -> list[bool]:
    """:func:`any_below` on rational rows, scaled to integers first.

    Falls back to a plain Python loop when the scaled values would overflow
    int64, so the answer is exact either way.
    """
    cand = [tuple(r) for r in cand]
    pool = [tuple(r) for r in pool]
    if not cand:
        return []
    width = len(cand[0])
    if not pool or width == 0:
        return [bool(pool) and width == 0] * len(cand)
    den = _common_scale(cand + pool)
    ci = [[int(v * den) for v in r] for r in cand]
    pi = [[int(v * den) for v in r] for r in pool]
    big = max(max(abs(v) for r in ci for v in r), max(abs(v) for r in pi for v in r))
    if big < INT_LIMIT:
        return [bool(b) for b in any_below(np.array(ci, dtype=np.int64), np.array(pi, dtype=np.int64), kernel)]
    return [any(all(a < b for a, b in zip(r, c)) for r in pi) for c in ci]
