"""Exact rational vectors and matrices.

Vectors are tuples of :class:`fractions.Fraction`, matrices are tuples of
row tuples.  Everything here is exact; floats are rejected unless the caller
opts in with ``approx=True``.
"""

from __future__ import annotations

import math
from decimal import Decimal
from fractions import Fraction
from numbers import Integral, Rational
from typing import Iterable, Sequence

from .errors import DimensionError

Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def q(value, approx: bool = False) -> Fraction:
    """Coerce ``value`` to a Fraction without ever rounding."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, Decimal):
        if not approx:
            raise TypeError(f"decimal literal {value} needs approx=True")
        return Fraction(value)
    if isinstance(value, float):
        if not approx:
            raise TypeError(f"float {value!r} rejected; pass a rational or approx=True")
        return Fraction(Decimal(repr(value)))
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    # gmpy2.mpq and friends expose numerator/denominator
    num = getattr(value, "numerator", None)
    den = getattr(value, "denominator", None)
    if num is not None and den is not None:
        return Fraction(int(num), int(den))
    raise TypeError(f"cannot convert {value!r} to a rational")


def vec(values: Iterable, approx: bool = False) -> Vector:
    return tuple(q(v, approx) for v in values)


def mat(rows: Iterable[Iterable], approx: bool = False, ncols: int | None = None) -> Matrix:
    out = tuple(vec(r, approx) for r in rows)
    widths = {len(r) for r in out}
    if len(widths) > 1:
        raise DimensionError(f"ragged matrix with row lengths {sorted(widths)}")
    if ncols is not None and out and len(out[0]) != ncols:
        raise DimensionError(f"expected {ncols} columns, got {len(out[0])}")
    return out


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def zero_matrix(m: int, n: int) -> Matrix:
    return tuple((ZERO,) * n for _ in range(m))


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def unit(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def check_dim(v: Sequence, n: int, what: str = "vector") -> None:
    if len(v) != n:
        raise DimensionError(f"{what} has dimension {len(v)}, expected {n}")


def dot(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise DimensionError(f"dot of lengths {len(a)} and {len(b)}")
    return sum((x * y for x, y in zip(a, b)), ZERO)


def add(a: Sequence, b: Sequence) -> Vector:
    if len(a) != len(b):
        raise DimensionError(f"add of lengths {len(a)} and {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> Vector:
    if len(a) != len(b):
        raise DimensionError(f"sub of lengths {len(a)} and {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Sequence) -> Vector:
    return tuple(-x for x in a)


def scale(c, a: Sequence) -> Vector:
    return tuple(c * x for x in a)


def ncols(M: Matrix, default: int = 0) -> int:
    return len(M[0]) if M else default


def matvec(M: Matrix, x: Sequence) -> Vector:
    return tuple(dot(row, x) for row in M)


def transpose(M: Matrix, nc: int | None = None) -> Matrix:
    if not M:
        return tuple(() for _ in range(nc or 0))
    return tuple(zip(*M))


def matmul(A: Matrix, B: Matrix, inner: int | None = None) -> Matrix:
    """A @ B for tuple matrices; ``inner`` disambiguates empty operands."""
    Bt = transpose(B)
    width = len(Bt) if B else 0
    if not B and A and inner == 0:
        return tuple(() for _ in A)
    return tuple(tuple(dot(row, col) for col in Bt) if width else () for row in A)


def outer(a: Sequence, b: Sequence) -> Matrix:
    return tuple(tuple(x * y for y in b) for x in a)


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(add(r, s) for r, s in zip(A, B))


def mat_scale(c, A: Matrix) -> Matrix:
    return tuple(scale(c, r) for r in A)


def hstack(*blocks: Matrix) -> Matrix:
    rows = len(blocks[0])
    return tuple(sum((tuple(b[i]) for b in blocks), ()) for i in range(rows))


def primitive(v: Sequence) -> Vector:
    """Scale to the primitive integer vector with the same direction."""
    v = [q(x) for x in v]
    nz = [x for x in v if x]
    if not nz:
        return tuple(ZERO for _ in v)
    den = math.lcm(*(x.denominator for x in nz))
    ints = [int(x * den) for x in v]
    g = math.gcd(*ints)
    return tuple(Fraction(i // g) for i in ints)


def max_abs_normalize(v: Sequence) -> Vector:
    m = max((abs(x) for x in v), default=ZERO)
    if not m:
        return tuple(v)
    return tuple(x / m for x in v)


def rref(M: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    A = [[q(x) for x in row] for row in M]
    pivots: list[int] = []
    if not A:
        return A, pivots
    rows, cols = len(A), len(A[0])
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(M: Sequence[Sequence]) -> int:
    return len(rref(M)[1])


def nullspace(M: Sequence[Sequence], n: int) -> list[Vector]:
    """Basis of {x in Q^n : M x = 0}, each basis vector primitive."""
    if not M:
        return [unit(n, i) for i in range(n)]
    R, piv = rref(M)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = ONE
        for i, pc in enumerate(piv):
            x[pc] = -R[i][f]
        basis.append(primitive(x))
    return basis


def fmt(x: Fraction) -> str | int:
    x = q(x)
    if x.denominator == 1:
        return int(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def fmt_vec(v: Sequence) -> list:
    return [fmt(x) for x in v]


def fmt_mat(M: Sequence[Sequence]) -> list:
    return [fmt_vec(r) for r in M]


def parse_vec_arg(text: str) -> Vector:
    """Parse ``"1/2,3,-1"`` from the command line."""
    text = text.strip()
    if not text:
        return ()
    return tuple(Fraction(p.strip()) for p in text.split(","))
