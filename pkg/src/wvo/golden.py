"""The two built-in example problems as fixtures, closed-form classifiers and suites.

Both use X = Z = R, Y = R^2, K = R^2_+, S = R_+, F = 0, G(x) = -x and C = R.
Suite 1 classifies epi_K F* (the constraint is dropped by taking T = 0),
suite 2 classifies epi_K(F + I_A)* with A = R_+.  A tuple (a, b, y1, y2)
stands for L = x -> (a x, b x) and y = (y1, y2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .cone import Cone
from .conjugate import epi_member
from .problem import Polyhedron, Problem, VectorAffineMap

GRID_VALUES = tuple(Fraction(v) for v in ("-2", "-1", "-1/2", "0", "1/2", "1", "2"))


def example_problem() -> Problem:
    K = Cone.orthant(2)
    S = Cone.orthant(1)
    F = VectorAffineMap.zero(2, 1)
    G = VectorAffineMap.make([[-1]], [0])
    return Problem(K, S, F, G, Polyhedron.full(1), {"name": "two-objective line"})


# -- closed forms -----------------------------------------------------------


def in_N(a, b, y1, y2) -> bool:
    """epi_K F* as the union N1 u N2 u N3 u N4."""
    n1 = a == 0 and b == 0 and (y1 >= 0 or y2 >= 0)
    n2 = a * b < 0 and y2 >= Fraction(b) / a * y1
    n3 = a != 0 and b == 0 and y2 >= 0
    n4 = a == 0 and b != 0 and y1 >= 0
    return n1 or n2 or n3 or n4


def in_P(a, b, y1, y2) -> bool:
    """epi_K(F + I_A)* as the union P1 .. P5."""
    p1 = a <= 0 and b <= 0 and (y1 >= 0 or y2 >= 0)
    p2 = a == 0 and b > 0 and y1 >= 0
    p3 = a > 0 and b == 0 and y2 >= 0
    p4 = a > 0 and b < 0 and y2 >= min(0, Fraction(b) / a * y1)
    p5 = a < 0 and b > 0 and y1 >= min(0, Fraction(a) / b * y2)
    return p1 or p2 or p3 or p4 or p5


def in_Q(t1, t2, a, b, y1, y2) -> bool:
    """epi_K((t1, t2) o G)*: the conjugate of F shifted by the multiplier."""
    return in_N(a + t1, b + t2, y1, y2)


def column(a, b) -> tuple:
    return ((Fraction(a),), (Fraction(b),))


@dataclass
class SuiteReport:
    which: int
    total: int = 0
    members: int = 0
    disagreements: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.disagreements and all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "suite": self.which,
            "total": self.total,
            "members": self.members,
            "disagreements": [[str(v) for v in t] for t in self.disagreements],
            "checks": dict(self.checks),
            "ok": self.ok,
        }


def classify(which: int, a, b, y1, y2, prob: Problem | None = None) -> bool:
    prob = prob or example_problem()
    L, y = column(a, b), (Fraction(y1), Fraction(y2))
    if which == 1:
        return bool(epi_member(L, y, prob, column(0, 0)))
    if which == 2:
        return bool(epi_member(L, y, prob))
    raise ValueError("suite must be 1 or 2")


def run_example_suite(which: int, values=GRID_VALUES) -> SuiteReport:
    if which not in (1, 2):
        raise ValueError("suite must be 1 or 2")
    prob = example_problem()
    ref = in_N if which == 1 else in_P
    rep = SuiteReport(which)
    for t in itertools.product(values, repeat=4):
        got = classify(which, *t, prob=prob)
        rep.total += 1
        rep.members += got
        if got != ref(*t):
            rep.disagreements.append(t)
    if which == 1:
        rep.checks["(0,0,-1,0) member"] = classify(1, 0, 0, -1, 0, prob)
        rep.checks["(1,1,0,0) non-member"] = not classify(1, 1, 1, 0, 0, prob)
    else:
        witness = (1, 0, 0, -1)
        rep.checks["(1,0,0,-1) outside epi (F+I_A)*"] = not classify(2, *witness, prob=prob)
        rep.checks["(1,0,0,-1) inside Q1(-1,0)"] = bool(
            epi_member(column(1, 0), (0, -1), prob, column(-1, 0))
        ) and in_Q(-1, 0, *witness)
    return rep
