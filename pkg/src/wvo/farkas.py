"""Vector Farkas statements as executable checks.

For a query (L, y):

* (b1)  F(x) - L x + y not in -int K  for every feasible x;
* (b2)  some T in L_+(S, K) gives  F(x) + T G(x) - L x + y not in -int K  on C;
* (b3)  some weakly positive T gives the same outside  T(-S) - int K.

(b2) => (b1) and (b3) => (b1) hold for any data.  Under Slater or the
relative-interior condition the converses hold too, and :func:`search_T`
produces the multiplier constructively.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .conjugate import Verdict, epi_member, epi_member_shifted
from .errors import PreconditionError, TheoremViolation
from .multipliers import build_certificate, qualification, require_qualification
from .order import in_L_plus, in_L_plus_weak
from .problem import Problem
from .rational import Matrix, Vector, fmt_mat, fmt_vec

L_PLUS = "L_plus"
L_PLUS_WEAK = "L_plus_weak"


@dataclass(frozen=True)
class FarkasQuery:
    L: Matrix
    y: Vector
    prob: Problem

    def __init__(self, L, y, prob: Problem):
        object.__setattr__(self, "L", prob.L_matrix(L))
        object.__setattr__(self, "y", prob.y_vector(y))
        object.__setattr__(self, "prob", prob)

    def to_dict(self) -> dict:
        return {"L": fmt_mat(self.L), "y": fmt_vec(self.y)}


def check_b1(q: FarkasQuery) -> Verdict:
    return epi_member(q.L, q.y, q.prob)


def check_b2(q: FarkasQuery, T) -> Verdict:
    T = q.prob.T_matrix(T)
    if not in_L_plus(T, q.prob.S, q.prob.K):
        raise PreconditionError("T is not in L_+(S, K)")
    return epi_member(q.L, q.y, q.prob, T)


def check_b3(q: FarkasQuery, T) -> Verdict:
    return epi_member_shifted(q.L, q.y, T, q.prob)


def search_T(q: FarkasQuery, mode: str = L_PLUS) -> Matrix | None:
    """Multiplier for (b2) or (b3) through scalarize-and-lift, or None when (b1) fails.

    The lifted T is positive, hence also weakly positive, so one construction
    serves both modes; the mode only decides which condition it is checked
    against before being returned.
    """
    if mode not in (L_PLUS, L_PLUS_WEAK):
        raise ValueError(f"unknown mode {mode!r}")
    require_qualification(q.prob)
    if not check_b1(q):
        return None
    T = build_certificate(q.L, q.y, q.prob, check_qualification=False).T
    ok = check_b2(q, T) if mode == L_PLUS else check_b3(q, T)
    if not ok:
        raise TheoremViolation(f"constructed multiplier fails the {mode} condition")
    return T


@dataclass
class AuditReport:
    query: FarkasQuery
    mode: str  # "full" or "one_directional"
    b1: bool
    T_plus: Matrix | None = None
    T_weak: Matrix | None = None
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            **self.query.to_dict(),
            "mode": self.mode,
            "b1": self.b1,
            "T_plus": None if self.T_plus is None else fmt_mat(self.T_plus),
            "T_weak": None if self.T_weak is None else fmt_mat(self.T_weak),
            "checked": self.checked,
            "violations": list(self.violations),
        }


def equivalence_audit(q: FarkasQuery, probes=(), qualified: bool | None = None) -> AuditReport:
    """Cross-check (b1), (b2), (b3) at one query.

    ``probes`` is an iterable of extra multipliers T; positive ones are fed
    to (b2) => (b1) and weakly positive ones to (b3) => (b1).  These easy
    directions are the only checks left when the problem is unqualified.
    """
    prob = q.prob
    if qualified is None:
        qualified = qualification(prob).verdict
    b1 = bool(check_b1(q))
    rep = AuditReport(q, "full" if qualified else "one_directional", b1)

    def flag(msg):
        rep.violations.append(msg)

    for T in probes:
        T = prob.T_matrix(T)
        if in_L_plus(T, prob.S, prob.K):
            rep.checked += 1
            if check_b2(q, T) and not b1:
                flag(f"(b2) holds at T={fmt_mat(T)} but (b1) fails")
        if in_L_plus_weak(T, prob.S, prob.K):
            rep.checked += 1
            if check_b3(q, T) and not b1:
                flag(f"(b3) holds at T={fmt_mat(T)} but (b1) fails")
    if not qualified:
        return rep

    for mode in (L_PLUS, L_PLUS_WEAK):
        rep.checked += 1
        try:
            T = search_T(q, mode)
        except TheoremViolation as e:
            flag(str(e))
            continue
        if mode == L_PLUS:
            rep.T_plus = T
        else:
            rep.T_weak = T
        if (T is not None) != b1:
            flag(f"(b1)={b1} but the {mode} search {'found' if T is not None else 'found no'} multiplier")
        if T is not None:
            ok = check_b2(q, T) if mode == L_PLUS else check_b3(q, T)
            if not ok:
                flag(f"returned {mode} multiplier fails its own condition")
    return rep
