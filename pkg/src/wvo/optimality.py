"""Weak minimality, optimality conditions (f), (g), (i), (j) and vector duality.

Conditions for a feasible x̄ and a multiplier T:

* (f)  (0, -F(x̄)) in epi_K(F + I_C + T o G)*
* (g)  F(x) + T G(x) - F(x̄) not in -int K for all x in C
* (i)  (0, -F(x̄)) in the shifted intersection over WSup T(-S)
* (j)  F(x) + T G(x) - F(x̄) not in T(-S) - int K for all x in C

(f) and (i) go through the conjugate oracle, (g) and (j) assemble their own
strict systems, so agreement between the pairs is a real cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import lp
from .conjugate import epi_member, epi_member_shifted
from .errors import PreconditionError, TheoremViolation
from .multipliers import Certificate, build_certificate, qualification, require_qualification
from .order import in_L_plus, in_L_plus_weak
from .problem import Problem
from .rational import Matrix, Vector, dot, fmt_mat, fmt_vec, neg, sub, vec, zero_matrix
from .sampling import make_rng, random_L_plus


def _feasible_value(xbar, prob: Problem) -> Vector:
    xbar = vec(xbar)
    if len(xbar) != prob.n:
        raise PreconditionError(f"point of dimension {len(xbar)} for n={prob.n}")
    if not prob.is_feasible(xbar):
        raise PreconditionError("point is not feasible (outside A cap dom F cap dom G)")
    return prob.objective(xbar)


def _positive(T, prob: Problem) -> Matrix:
    T = prob.T_matrix(T)
    if not in_L_plus(T, prob.S, prob.K):
        raise PreconditionError("T is not in L_+(S, K)")
    return T


def _weak(T, prob: Problem) -> Matrix:
    T = prob.T_matrix(T)
    if not in_L_plus_weak(T, prob.S, prob.K):
        raise PreconditionError("T is not weakly positive")
    return T


def is_weak_solution(xbar, prob: Problem) -> bool:
    """No feasible x has F(x) - F(x̄) in -int K."""
    Fx = _feasible_value(xbar, prob)
    return bool(epi_member(zero_matrix(prob.m, prob.n), neg(Fx), prob))


def _lagrangian(prob: Problem, T: Matrix):
    """Linear part and offset of x -> F(x) + T G(x)."""
    F, G = prob.F, prob.G
    M = [
        [F.matrix[i][j] + sum(T[i][k] * G.matrix[k][j] for k in range(prob.p)) for j in range(prob.n)]
        for i in range(prob.m)
    ]
    off = [F.offset[i] + dot(T[i], G.offset) for i in range(prob.m)]
    return M, off


def _dominated(prob: Problem, M, off, target: Vector, extra_cols=None) -> bool:
    """Is there u in the domain with A_K (M u + off - target) < 0?

    ``extra_cols`` appends the s-block of (x, s) systems with s in S.
    """
    A_K = prob.K.facets
    n, p = prob.n, prob.p
    shift = sub(off, target)
    A_st, b_st = [], []
    for a in A_K:
        row = [sum(a[i] * M[i][j] for i in range(prob.m)) for j in range(n)]
        if extra_cols is not None:
            row += [sum(a[i] * extra_cols[i][k] for i in range(prob.m)) for k in range(p)]
        A_st.append(row)
        b_st.append(-dot(a, shift))
    width = n + (p if extra_cols is not None else 0)
    pad = [0] * (width - n)
    A_ub = [list(a) + pad for a in prob.base_domain.A]
    b_ub = list(prob.base_domain.b)
    if extra_cols is not None:
        A_ub += [[0] * n + list(neg(d)) for d in prob.S.facets]
        b_ub += [0] * len(prob.S.facets)
    return lp.strict_feasible(A_st, b_st, A_ub, b_ub, nvars=width).feasible


def check_condition_g(xbar, T, prob: Problem) -> bool:
    Fx = _feasible_value(xbar, prob)
    T = _positive(T, prob)
    M, off = _lagrangian(prob, T)
    return not _dominated(prob, M, off, Fx)


def check_condition_f(xbar, T, prob: Problem) -> bool:
    Fx = _feasible_value(xbar, prob)
    T = _positive(T, prob)
    return bool(epi_member(zero_matrix(prob.m, prob.n), neg(Fx), prob, T))


def check_condition_j(xbar, T, prob: Problem) -> bool:
    Fx = _feasible_value(xbar, prob)
    T = _weak(T, prob)
    M, off = _lagrangian(prob, T)
    return not _dominated(prob, M, off, Fx, extra_cols=T)


def check_condition_i(xbar, T, prob: Problem) -> bool:
    """Decided through the shifted-intersection oracle, which is equivalent to (j)."""
    Fx = _feasible_value(xbar, prob)
    T = _weak(T, prob)
    return bool(epi_member_shifted(zero_matrix(prob.m, prob.n), neg(Fx), T, prob))


def certify_weak_min(xbar, prob: Problem) -> Certificate:
    """Multiplier certificate for a weak solution: T in L_+ satisfying (f) and (g)."""
    Fx = _feasible_value(xbar, prob)
    require_qualification(prob)
    if not is_weak_solution(xbar, prob):
        raise PreconditionError("point is not a weak solution")
    cert = build_certificate(zero_matrix(prob.m, prob.n), neg(Fx), prob, check_qualification=False)
    if not check_condition_g(xbar, cert.T, prob):
        raise TheoremViolation("certificate multiplier fails condition (g)")
    return cert


@dataclass(frozen=True)
class DualPoint:
    T: Matrix
    y: Vector

    def to_dict(self) -> dict:
        return {"T": fmt_mat(self.T), "y": fmt_vec(self.y)}


def dvop_feasible(dp: DualPoint, prob: Problem) -> bool:
    """y not in (F + T o G)(C cap dom F cap dom G) + int K."""
    T = _positive(dp.T, prob)
    y = prob.y_vector(dp.y)
    M, off = _lagrangian(prob, T)
    return not _dominated(prob, M, off, y)


@dataclass
class DualityReport:
    applicable: bool
    xbar: Vector
    certificate: Certificate | None = None
    primal_value_dual_feasible: bool | None = None
    samples: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and (not self.applicable or bool(self.primal_value_dual_feasible))

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "xbar": fmt_vec(self.xbar),
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "primal_value_dual_feasible": self.primal_value_dual_feasible,
            "samples": self.samples,
            "skipped": self.skipped,
            "violations": list(self.violations),
            "ok": self.ok,
        }


def _random_dual_functional(prob: Problem, rng) -> Vector:
    """Nonzero element of K+ as a random nonnegative mix of facet normals."""
    A_K = prob.K.facets
    while True:
        w = [int(rng.integers(0, 4)) for _ in A_K]
        if any(w):
            return tuple(sum(w[j] * A_K[j][i] for j in range(len(A_K))) for i in range(prob.m))


def sample_dual_point(prob: Problem, rng, tries: int = 20) -> DualPoint | None:
    """Dual-feasible (T, y) on or below the weak-supremal boundary.

    y = (F + T G)(x*) - k with x* minimizing y*(F + T G) over the domain and
    k in K: any image point plus an interior step would beat x* under y*.
    """
    K = prob.K
    for _ in range(tries):
        T = random_L_plus(prob.S, K, rng)
        w = _random_dual_functional(prob, rng)
        M, off = _lagrangian(prob, T)
        c = [sum(w[i] * M[i][j] for i in range(prob.m)) for j in range(prob.n)]
        res = lp.linprog(c, prob.base_domain.A, prob.base_domain.b)
        if not res.optimal:
            continue
        top = tuple(dot(M[i], res.x) + off[i] for i in range(prob.m))
        if rng.random() < 0.5:
            return DualPoint(T, top)
        gens = K.generators
        k = [0] * prob.m
        for g in gens:
            c_g = int(rng.integers(0, 3))
            k = [k[i] + c_g * g[i] for i in range(prob.m)]
        return DualPoint(T, sub(top, k))
    return None


def strong_duality_check(xbar, prob: Problem, samples: int = 50, rng=None) -> DualityReport:
    """(T̄, F(x̄)) is dual feasible and no sampled dual value beats F(x̄) strictly."""
    xbar = vec(xbar)
    if rng is None:
        rng = make_rng()
    if not qualification(prob).verdict:
        return DualityReport(False, xbar)
    Fx = _feasible_value(xbar, prob)
    cert = certify_weak_min(xbar, prob)
    rep = DualityReport(True, xbar, cert)
    rep.primal_value_dual_feasible = dvop_feasible(DualPoint(cert.T, Fx), prob)
    if not rep.primal_value_dual_feasible:
        rep.violations.append("(T, F(x)) is not dual feasible")
    while rep.samples < samples and rep.skipped < 10 * samples:
        dp = sample_dual_point(prob, rng)
        if dp is None:
            rep.skipped += 1
            continue
        rep.samples += 1
        if not dvop_feasible(dp, prob):
            rep.violations.append(f"sampled point {dp.to_dict()} is not dual feasible")
            continue
        if prob.K.interior_contains(sub(dp.y, Fx)):
            rep.violations.append(f"dual value {fmt_vec(dp.y)} strictly exceeds F(x)")
    return rep


__all__ = [
    "is_weak_solution",
    "check_condition_f",
    "check_condition_g",
    "check_condition_i",
    "check_condition_j",
    "certify_weak_min",
    "DualPoint",
    "dvop_feasible",
    "sample_dual_point",
    "strong_duality_check",
    "DualityReport",
]
