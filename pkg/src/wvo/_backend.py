"""Rational number backend for the simplex kernel.

``WVO_BACKEND=gmpy2`` (default when importable) pivots on ``gmpy2.mpq``;
``WVO_BACKEND=fraction`` forces the stdlib :class:`fractions.Fraction`
path.  Results always leave the kernel as Fractions, so callers never see
which backend ran.
"""

from __future__ import annotations

import os
from fractions import Fraction

try:
    import gmpy2

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    gmpy2 = None
    HAVE_GMPY2 = False


def _select(name: str | None):
    name = (name or "").strip().lower()
    if name in ("fraction", "fractions", "python", "pure"):
        return "fraction"
    if name in ("", "gmpy2", "mpq"):
        return "gmpy2" if HAVE_GMPY2 else "fraction"
    raise ValueError(f"unknown WVO_BACKEND {name!r}")


BACKEND = _select(os.environ.get("WVO_BACKEND"))


def number_type(backend: str | None = None):
    backend = BACKEND if backend is None else _select(backend)
    return gmpy2.mpq if backend == "gmpy2" else Fraction


def to_fraction(x) -> Fraction:
    if type(x) is Fraction:
        return x
    return Fraction(int(x.numerator), int(x.denominator))
