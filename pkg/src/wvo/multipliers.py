"""Qualification checks and the scalarize-and-lift multiplier construction.

Given (L, y) in epi_K(F + I_A)*, the pipeline

1. separates y from (L - F)(A) - int K with a functional y* in K+,
2. solves the scalarized LP  inf { y*(F(x) - L x) : x in A }  and reads the
   multiplier z* in S+ of the constraint G(x) in -S off its dual,
3. lifts z* to the rank-one map  T = k0 z*^T / <y*, k0>,

and then re-checks that (L, y) lies in epi_K(F + I_C + T o G)*.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import lp
from .cone import Cone, in_dual_cone
from .conjugate import epi_member
from .errors import PreconditionError, QualificationError, TheoremViolation
from .order import in_L_plus
from .problem import Problem
from .rational import (
    Matrix,
    Vector,
    dot,
    fmt,
    fmt_mat,
    fmt_vec,
    identity,
    mat,
    matvec,
    max_abs_normalize,
    neg,
    nullspace,
    outer,
    rank,
    scale,
    transpose,
    vec,
    zeros,
)


# -- qualification ---------------------------------------------------------


def check_slater(prob: Problem) -> Vector | None:
    """A point of C cap dom F cap dom G with G(x) in -int S, or None."""
    S = prob.S
    if not S.is_solid:
        return None
    G = prob.G
    A_st = [tuple(dot(d, col) for col in zip(*G.matrix)) for d in S.facets]
    b_st = [-dot(d, G.offset) for d in S.facets]
    dom = prob.base_domain
    res = lp.strict_feasible(A_st, b_st, dom.A, dom.b, nvars=prob.n)
    return res.point if res.feasible else None


@dataclass(frozen=True)
class RIReport:
    lin_dim: int
    zero_in_ri: bool

    def __bool__(self) -> bool:
        return self.zero_in_ri

    def to_dict(self) -> dict:
        return {"lin_dim": self.lin_dim, "zero_in_ri": self.zero_in_ri}


def _lifted_rows(prob: Problem):
    """Rows over u = (x, s) of {x in C cap dom F cap dom G, s in S}."""
    n, p = prob.n, prob.p
    rows = [(tuple(a) + zeros(p), b) for a, b in prob.base_domain.rows]
    rows += [(zeros(n) + neg(d), Fraction(0)) for d in prob.S.facets]
    return rows


def _implicit_equalities(rows, nvars: int) -> list[bool] | None:
    """Which rows hold with equality on the whole polyhedron (None if empty)."""
    A = [a for a, _ in rows]
    b = [b for _, b in rows]
    if lp.feasible_point(A, b, nvars=nvars) is None:
        return None
    flags = []
    for a, rhs in rows:
        res = lp.linprog(list(a), A, b)
        flags.append(res.optimal and res.value == rhs)
    return flags


def check_ri_condition(prob: Problem) -> RIReport:
    """Dimension of E = G(C cap dom F cap dom G) + S and whether 0 is in ri E.

    E is the image of the lifted polyhedron P = {(x, s)} under
    (x, s) -> G x + g0 + s.  The affine hull of P is cut out by its implicit
    equalities, ri P by making every other row strict, and a linear image
    maps ri P onto ri E.
    """
    n, p = prob.n, prob.p
    rows = _lifted_rows(prob)
    flags = _implicit_equalities(rows, n + p)
    if flags is None:
        return RIReport(-1, False)
    eq_rows = [r for r, f in zip(rows, flags) if f]
    st_rows = [r for r, f in zip(rows, flags) if not f]
    image = [tuple(G_row) + tuple(I_row) for G_row, I_row in zip(prob.G.matrix, identity(p))]
    basis = nullspace([a for a, _ in eq_rows], n + p)
    lin_dim = rank([matvec(image, v) for v in basis]) if basis else 0
    A_eq = [a for a, _ in eq_rows] + image
    b_eq = [b for _, b in eq_rows] + list(neg(prob.G.offset))
    res = lp.strict_feasible(
        [a for a, _ in st_rows], [b for _, b in st_rows], A_eq=A_eq, b_eq=b_eq, nvars=n + p
    )
    return RIReport(lin_dim, res.feasible)


@dataclass(frozen=True)
class QualificationReport:
    c1: Vector | None
    c3: RIReport
    verdict: bool

    def to_dict(self) -> dict:
        return {
            "c1": None if self.c1 is None else fmt_vec(self.c1),
            "c3": self.c3.to_dict(),
            "verdict": self.verdict,
        }


def qualification(prob: Problem) -> QualificationReport:
    c1 = check_slater(prob)
    c3 = check_ri_condition(prob)
    return QualificationReport(c1, c3, c1 is not None or c3.zero_in_ri)


def require_qualification(prob: Problem) -> QualificationReport:
    rep = qualification(prob)
    if not rep.verdict:
        raise QualificationError("neither the Slater nor the relative-interior condition holds")
    return rep


# -- scalarize and lift ----------------------------------------------------


def choose_k0(K: Cone) -> Vector:
    """Deterministic interior point: sum of the canonical generators."""
    return K.interior_point()


def find_separating_functional(L, y, prob: Problem, k0: Vector | None = None) -> Vector:
    """y* in K+ with <y*, u> < <y*, y> on (L - F)(A) - int K.

    LP in (nu, lam) >= 0 with y* = A_K^T nu, <y*, k0> = 1 and the
    sup of y*((L - F) x) over A = {P x <= p} bounded by y*(y) through its
    LP dual:  P^T lam = (L - F_m)^T y*,  p . lam <= y* . (y + F_0).
    """
    L = prob.L_matrix(L)
    y = prob.y_vector(y)
    K = prob.K
    if k0 is None:
        k0 = choose_k0(K)
    A_K = K.facets
    A = prob.feasible_set
    nf, nr = len(A_K), len(A.rows)
    m, n = prob.m, prob.n
    F = prob.F
    # y*_i = sum_j nu_j A_K[j][i]
    # column j of (L - F_m)^T y* as a row over nu: sum_i (L - F_m)[i][col] * A_K[j][i]
    D = [[L[i][c] - F.matrix[i][c] for c in range(n)] for i in range(m)]
    A_eq, b_eq = [], []
    for c in range(n):
        row = [-sum(D[i][c] * A_K[j][i] for i in range(m)) for j in range(nf)]
        row += [A.rows[r][0][c] for r in range(nr)]
        A_eq.append(row)
        b_eq.append(0)
    A_eq.append([dot(A_K[j], k0) for j in range(nf)] + [0] * nr)
    b_eq.append(1)
    yF = [y[i] + F.offset[i] for i in range(m)]
    A_ub = [[-dot(A_K[j], yF) for j in range(nf)] + [A.rows[r][1] for r in range(nr)]]
    b_ub = [0]
    res = lp.linprog([0] * (nf + nr), A_ub, b_ub, A_eq, b_eq, nonneg=[True] * (nf + nr))
    if not res.optimal:
        raise PreconditionError("no separating functional: (L, y) is not in epi_K(F + I_A)*")
    nu = res.x[:nf]
    y_star = tuple(sum(nu[j] * A_K[j][i] for j in range(nf)) for i in range(m))
    return max_abs_normalize(y_star)


@dataclass(frozen=True)
class ScalarDual:
    z_star: Vector
    primal_value: Fraction
    dual_value: Fraction


def solve_scalar_dual(y_star, L, prob: Problem) -> ScalarDual:
    """Multiplier z* in S+ of  inf_{x in A} y*(F(x) - L x), with both values.

    The LP keeps C cap dom F cap dom G as hard rows and D_S(G x + g0) <= 0 as
    the dualized rows; z* = D_S^T mu for their duals mu.  ``dual_value`` is
    inf over C cap dom F cap dom G of y*(F - L) + z* o G, computed by a
    second LP so that the equality is checked, not assumed.
    """
    y_star = vec(y_star)
    L = prob.L_matrix(L)
    F, G = prob.F, prob.G
    n = prob.n
    c = [sum(y_star[i] * (F.matrix[i][j] - L[i][j]) for i in range(prob.m)) for j in range(n)]
    const = dot(y_star, F.offset)
    base = prob.base_domain
    g_rows = prob.constraint_rows
    A_ub = list(base.A) + [a for a, _ in g_rows]
    b_ub = list(base.b) + [b for _, b in g_rows]
    res = lp.linprog(c, A_ub, b_ub)
    if res.status == lp.UNBOUNDED:
        raise PreconditionError("scalarized problem is unbounded below")
    if not res.optimal:
        raise PreconditionError("scalarized problem is infeasible")
    mu = res.duals_ub[len(base.rows) :]
    D = prob.S.facets
    z_star = tuple(sum(mu[k] * D[k][j] for k in range(len(D))) for j in range(prob.p))
    c2 = [c[j] + dot(z_star, [G.matrix[k][j] for k in range(prob.p)]) for j in range(n)]
    res2 = lp.linprog(c2, base.A, base.b)
    if not res2.optimal:
        raise TheoremViolation("Lagrangian with the LP multiplier is unbounded below")
    return ScalarDual(z_star, res.value + const, res2.value + const + dot(z_star, G.offset))


def lift_multiplier(z_star, y_star, k0, K: Cone | None = None, S: Cone | None = None) -> Matrix:
    """``T = k0 z*^T / <y*, k0>``, so that y* o T = z* and T(S) lies in K."""
    z_star, y_star, k0 = vec(z_star), vec(y_star), vec(k0)
    denom = dot(y_star, k0)
    if denom <= 0:
        raise PreconditionError("<y*, k0> must be positive")
    if K is not None and not K.interior_contains(k0):
        raise PreconditionError("k0 is not an interior point of K")
    if S is not None and not in_dual_cone(S, z_star):
        raise PreconditionError("z* is not in S+")
    T = outer(scale(1 / denom, k0), z_star)
    if tuple(matvec(transpose(T, len(z_star)), y_star)) != z_star:
        raise TheoremViolation("y* o T differs from z*")
    if K is not None and S is not None and not in_L_plus(T, S, K):
        raise TheoremViolation("lifted multiplier is not positive")
    return T


@dataclass(frozen=True)
class Certificate:
    T: Matrix
    y_star: Vector
    z_star: Vector
    k0: Vector
    L: Matrix | None = None
    y: Vector | None = None
    extra: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        d = {
            "T": fmt_mat(self.T),
            "y_star": fmt_vec(self.y_star),
            "z_star": fmt_vec(self.z_star),
            "k0": fmt_vec(self.k0),
        }
        if self.L is not None:
            d["L"] = fmt_mat(self.L)
        if self.y is not None:
            d["y"] = fmt_vec(self.y)
        d.update({k: v for k, v in self.extra.items() if k not in d})
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        L = mat(d["L"]) if d.get("L") is not None else None
        y = vec(d["y"]) if d.get("y") is not None else None
        return cls(mat(d["T"]), vec(d["y_star"]), vec(d["z_star"]), vec(d["k0"]), L, y)


def build_certificate(L, y, prob: Problem, check_qualification: bool = True) -> Certificate:
    """Constructive multiplier T with (L, y) in epi_K(F + I_C + T o G)*."""
    L = prob.L_matrix(L)
    y = prob.y_vector(y)
    if not epi_member(L, y, prob):
        raise PreconditionError("(L, y) is not in epi_K(F + I_A)*")
    if check_qualification:
        require_qualification(prob)
    k0 = choose_k0(prob.K)
    y_star = find_separating_functional(L, y, prob, k0)
    sd = solve_scalar_dual(y_star, L, prob)
    if sd.primal_value != sd.dual_value:
        raise TheoremViolation(f"scalar duality gap {sd.primal_value} != {sd.dual_value}")
    T = lift_multiplier(sd.z_star, y_star, k0, prob.K, prob.S)
    if not epi_member(L, y, prob, T):
        raise TheoremViolation("lifted multiplier fails the epigraph test")
    extra = {"scalar_value": fmt(sd.primal_value)}
    return Certificate(T, y_star, sd.z_star, k0, L, y, extra)


@dataclass(frozen=True)
class CertificateCheck:
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(cert: Certificate, prob: Problem, L=None, y=None) -> CertificateCheck:
    """Re-check every invariant of a certificate from scratch."""
    L = cert.L if L is None else L
    y = cert.y if y is None else y
    if L is None or y is None:
        raise PreconditionError("certificate carries no (L, y); pass them explicitly")
    K, S = prob.K, prob.S
    T = prob.T_matrix(cert.T)
    checks = {}
    checks["y_star_in_K_dual"] = len(cert.y_star) == K.dim and in_dual_cone(K, cert.y_star) and any(cert.y_star)
    checks["k0_interior"] = len(cert.k0) == K.dim and K.interior_contains(cert.k0)
    checks["y_star_k0_positive"] = checks["k0_interior"] and dot(cert.y_star, cert.k0) > 0
    checks["z_star_in_S_dual"] = len(cert.z_star) == S.dim and in_dual_cone(S, cert.z_star)
    if checks["y_star_k0_positive"]:
        lifted = outer(scale(1 / dot(cert.y_star, cert.k0), cert.k0), cert.z_star)
        checks["rank_one_lift"] = lifted == T
    else:
        checks["rank_one_lift"] = False
    checks["T_positive"] = in_L_plus(T, S, K)
    checks["epi_member"] = bool(epi_member(L, y, prob, T))
    return CertificateCheck(checks)
