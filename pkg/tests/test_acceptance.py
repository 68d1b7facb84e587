"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run under pytest (the lines are printed in the terminal summary) or directly
with ``python tests/test_acceptance.py``.  Every random draw comes from the
seed in WVO_SEED (default fixed), so a run is reproducible.
"""

import functools
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from wvo import (  # noqa: E402
    Cone,
    FarkasQuery,
    check_condition_f,
    check_condition_g,
    check_condition_i,
    check_condition_j,
    classify_dom,
    epi_member,
    epi_member_shifted,
    equivalence_audit,
    in_L_plus,
    in_L_plus_weak,
    is_weak_solution,
    strong_duality_check,
    wmax,
    wmin,
    wsup_finite_contains,
)
from wvo.bruteforce import bf_wmax, bf_wmin, bf_wsup_contains, grid_weak_minimal  # noqa: E402
from wvo.errors import PreconditionError  # noqa: E402
from wvo.golden import GRID_VALUES, column, example_problem, run_example_suite  # noqa: E402
from wvo.random_instances import feasible_candidates, random_instance, random_ordering_cone, random_queries  # noqa: E402
from wvo.sampling import make_rng, random_L_plus, random_L_plus_weak, random_map, rational, seed_from_env  # noqa: E402

SEED = seed_from_env()
POOL_SIZE = 100
QUERIES = 25
CANDIDATES = 6
RESULTS: list[tuple[str, bool, str]] = []


def report(name: str, ok: bool, detail: str) -> bool:
    RESULTS.append((name, ok, detail))
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return ok


def _stream(k: int):
    return make_rng([SEED, k])


@functools.lru_cache(maxsize=None)
def instance_pool(qualified: bool = True):
    rng = _stream(1 if qualified else 2)
    return tuple(random_instance(rng, qualified=qualified) for _ in range(POOL_SIZE))


@functools.lru_cache(maxsize=None)
def certified_pool():
    """(prob, x, grid_flag, certificate or None) for every candidate point."""
    rng = _stream(3)
    rows = []
    for prob in instance_pool():
        pts = feasible_candidates(prob, rng, CANDIDATES)
        for x, g in zip(pts, grid_weak_minimal(pts, prob)):
            try:
                cert = certify_weak_min_or_none(x, prob)
            except PreconditionError:
                cert = None
            rows.append((prob, x, g, cert))
    return rows


def certify_weak_min_or_none(x, prob):
    from wvo import certify_weak_min

    if not is_weak_solution(x, prob):
        return None
    return certify_weak_min(x, prob)


# -- 1 ----------------------------------------------------------------------


def test_criterion_1_plain_conjugate_suite():
    t0 = time.perf_counter()
    rep = run_example_suite(1)
    dt = time.perf_counter() - t0
    ok = rep.total >= 200 and not rep.disagreements and rep.ok and dt < 10
    assert report(
        "1 plain conjugate golden suite",
        ok,
        f"{rep.total} tuples, {len(rep.disagreements)} disagreements, {dt:.2f}s (limit 10s)",
    )


# -- 2 ----------------------------------------------------------------------


def test_criterion_2_constrained_conjugate_suite():
    rep = run_example_suite(2)
    ok = rep.total >= 200 and not rep.disagreements and rep.ok
    assert report("2a constrained conjugate golden suite", ok, f"{rep.total} tuples, {len(rep.disagreements)} disagreements")


def test_criterion_2_witness_rejected():
    ex = example_problem()
    v = epi_member(column(1, 0), (0, -1), ex)
    assert report("2b witness (1,0,0,-1) rejected by F+I_A", not v, f"member={bool(v)}, violating x={v.witness}")


def test_criterion_2_witness_shifted():
    ex = example_problem()
    T = column(-1, 0)
    v = epi_member_shifted(column(1, 0), (0, -1), T, ex)
    plain = epi_member(column(1, 0), (0, -1), ex, T)
    detail = (
        f"shifted member={bool(v)} (witness (x, s)={v.witness}); "
        f"unshifted F+I_C+T o G member={bool(plain)}"
    )
    assert report("2c witness (1,0,0,-1) accepted by shifted test with T=(-1,0)", bool(v), detail)


# -- 3 ----------------------------------------------------------------------


def test_criterion_3_domain_classification():
    rng = _stream(4)
    S, K = Cone.orthant(1), Cone.orthant(2)
    bad = 0
    for _ in range(100):
        t1, t2 = rational(rng), rational(rng)
        c = classify_dom(column(t1, t2), S, K)
        if c.in_dom != (t1 >= 0 or t2 >= 0) or c.in_dom_M != (t1 >= 0 and t2 >= 0):
            bad += 1
    assert report("3 domain classification of 100 random T", bad == 0, f"{bad} mismatches")


# -- 4 ----------------------------------------------------------------------


def test_criterion_4_farkas_audit():
    t0 = time.perf_counter()
    rng = _stream(5)
    full = violations = b1_true = 0
    for prob in instance_pool():
        for q in random_queries(prob, rng, QUERIES):
            rep = equivalence_audit(FarkasQuery(q.L, q.y, prob), qualified=True)
            full += rep.mode == "full"
            b1_true += rep.b1
            violations += len(rep.violations)
            found_plus, found_weak = rep.T_plus is not None, rep.T_weak is not None
            if not (rep.b1 == found_plus == found_weak):
                violations += 1
    one_dir = easy_checked = 0
    for prob in instance_pool(qualified=False):
        probes = [random_L_plus(prob.S, prob.K, rng), random_L_plus_weak(prob.S, prob.K, rng)]
        for q in random_queries(prob, rng, QUERIES):
            rep = equivalence_audit(FarkasQuery(q.L, q.y, prob), probes)
            one_dir += rep.mode == "one_directional"
            easy_checked += rep.checked
            violations += len(rep.violations)
    dt = time.perf_counter() - t0
    total = POOL_SIZE * QUERIES
    ok = violations == 0 and full == total and one_dir == total and dt < 120
    assert report(
        "4 Farkas equivalence audit",
        ok,
        f"{full} qualified queries ({b1_true} with (b1) true), {one_dir} unqualified queries "
        f"({easy_checked} easy-direction checks), {violations} violations, {dt:.1f}s (limit 120s)",
    )


# -- 5 ----------------------------------------------------------------------


def test_criterion_5_certificates_vs_grid():
    rows = certified_pool()
    mismatch = [(p, x, g, c) for p, x, g, c in rows if g != (c is not None)]
    fg_bad = 0
    for prob, x, _, cert in rows:
        if cert is not None:
            g, f = check_condition_g(x, cert.T, prob), check_condition_f(x, cert.T, prob)
            fg_bad += not (g and f)
    certified = sum(c is not None for *_, c in rows)
    flagged = sum(g for _, _, g, _ in rows)
    kinds = {"grid-only": sum(g and c is None for _, _, g, c in mismatch), "cert-only": sum(not g for _, _, g, _ in mismatch)}
    ok = not mismatch and fg_bad == 0
    assert report(
        "5 certificates exactly on grid-minimal points",
        ok,
        f"{len(rows)} points, {certified} certified, {flagged} grid-minimal, {len(mismatch)} mismatches {kinds}, "
        f"{fg_bad} certificates failing (f)/(g)",
    )


# -- 6 ----------------------------------------------------------------------


def test_criterion_6_condition_collapse():
    rng = _stream(6)
    pool = instance_pool()
    probes = fg = ij = jg = bad = 0
    while probes < 1000:
        prob = pool[int(rng.integers(len(pool)))]
        (x,) = feasible_candidates(prob, rng, 1)
        T = random_map(prob.S, prob.K, rng)
        probes += 1
        pos = in_L_plus(T, prob.S, prob.K)
        weak = in_L_plus_weak(T, prob.S, prob.K)
        if pos:
            fg += 1
            g = check_condition_g(x, T, prob)
            bad += check_condition_f(x, T, prob) != g
        if weak:
            ij += 1
            j = check_condition_j(x, T, prob)
            bad += check_condition_i(x, T, prob) != j
            if pos:
                jg += 1
                bad += j != g
    assert report(
        "6 (f)=(g), (i)=(j), (j)=(g) on positive T",
        bad == 0,
        f"{probes} probes: {fg} (f)/(g) pairs, {ij} (i)/(j) pairs, {jg} (j)/(g) pairs, {bad} violations",
    )


# -- 7 ----------------------------------------------------------------------


def test_criterion_7_strong_duality():
    rng = _stream(7)
    n = viol = not_dual = 0
    t0 = time.perf_counter()
    for prob, x, _, cert in certified_pool():
        if cert is None:
            continue
        rep = strong_duality_check(x, prob, samples=50, rng=rng)
        n += 1
        viol += len(rep.violations) + (rep.samples < 50)
        not_dual += not rep.primal_value_dual_feasible
    dt = time.perf_counter() - t0
    assert report(
        "7 strong duality on certified weak solutions",
        viol == 0 and not_dual == 0 and n > 0,
        f"{n} points x 50 samples, {viol} violations, {not_dual} primal values not dual feasible, {dt:.1f}s",
    )


# -- 8 ----------------------------------------------------------------------


def test_criterion_8_finite_set_oracles():
    rng = _stream(8)
    bad = queries = 0
    for _ in range(500):
        dim = int(rng.integers(1, 4))
        K = random_ordering_cone(dim, rng)
        M = [tuple(rational(rng, -2, 2, (1, 2)) for _ in range(dim)) for _ in range(int(rng.integers(1, 13)))]
        bad += set(wmax(M, K).points) != set(bf_wmax(M, K))
        bad += set(wmin(M, K).points) != set(bf_wmin(M, K))
        ys = [tuple(rational(rng, -2, 2, (1, 2)) for _ in range(dim)) for _ in range(4)]
        ys += [M[int(rng.integers(len(M)))]]
        g = K.generators[int(rng.integers(len(K.generators)))]
        ys += [tuple(a - b for a, b in zip(M[0], g))]
        for y in ys:
            queries += 1
            bad += wsup_finite_contains(M, K, y) != bf_wsup_contains(M, K, y)
    assert report("8 finite-set order oracles vs brute force", bad == 0, f"500 sets, {queries} WSup queries, {bad} disagreements")


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
