"""Compare the two interchangeable backends of each hot path.

* simplex kernel: gmpy2.mpq pivoting vs stdlib Fraction pivoting, on the
  strict epigraph LPs of a seeded random instance pool;
* dominance kernel: numba @njit loop vs chunked numpy broadcasting, on the
  brute-force grid minimality oracle.

Both paths must return identical answers; the script asserts that before it
reports any timing.

    python benchmarks/bench_backends.py --instances 20 --queries 10
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from wvo import lp
from wvo._kernels import HAVE_NUMBA, any_below
from wvo.bruteforce import _scores, feasible_grid
from wvo.conjugate import _affine_part, _strict_rows
from wvo.random_instances import random_instance, random_queries
from wvo.sampling import make_rng


def lp_batch(args):
    rng = make_rng(args.seed)
    jobs = []
    for _ in range(args.instances):
        prob = random_instance(rng)
        for q in random_queries(prob, rng, args.queries):
            M, off = _affine_part(prob, q.L, None)
            A_st, b_st = _strict_rows(prob.K.facets, M, tuple(a + b for a, b in zip(q.y, off)))
            dom = prob.feasible_set
            jobs.append((A_st, b_st, dom.A, dom.b, prob.n))
    return jobs


def run_lp(jobs, backend):
    t = time.perf_counter()
    out = [lp.strict_feasible(a, b, A, B, nvars=n, backend=backend).feasible for a, b, A, B, n in jobs]
    return time.perf_counter() - t, out


def kernel_batch(args):
    rng = make_rng(args.seed)
    work = []
    while len(work) < args.grids:
        prob = random_instance(rng, n=3)
        D, U = feasible_grid(prob)
        if U.shape[0] == 0:
            continue
        pool, _ = _scores(prob, D, U)
        pick = rng.choice(U.shape[0], size=min(args.candidates, U.shape[0]), replace=False)
        work.append((pool[pick], pool))
    return work


def run_kernel(work, kernel, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = [any_below(c, p, kernel) for c, p in work]
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=20)
    ap.add_argument("--queries", type=int, default=10)
    ap.add_argument("--grids", type=int, default=10)
    ap.add_argument("--candidates", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    jobs = lp_batch(args)
    t_q, r_q = run_lp(jobs, "gmpy2")
    t_f, r_f = run_lp(jobs, "fraction")
    assert r_q == r_f, "simplex backends disagree"
    print(f"simplex   {len(jobs):5d} strict LPs   gmpy2 {t_q:8.3f}s   fraction {t_f:8.3f}s   ratio {t_f / t_q:5.2f}x")

    work = kernel_batch(args)
    pts = sum(p.shape[0] * c.shape[0] for c, p in work)
    t_np, r_np = run_kernel(work, "numpy", args.repeat)
    if HAVE_NUMBA:
        any_below(work[0][0][:1], work[0][1][:1], "numba")  # compile outside the timing
        t_nb, r_nb = run_kernel(work, "numba", args.repeat)
        assert all(np.array_equal(a, b) for a, b in zip(r_np, r_nb)), "dominance kernels disagree"
        print(f"dominance {pts:11d} pairs   numba {t_nb:8.3f}s   numpy    {t_np:8.3f}s   ratio {t_np / t_nb:5.2f}x")
    else:
        print(f"dominance {pts:11d} pairs   numpy {t_np:8.3f}s   (numba not installed)")


if __name__ == "__main__":
    main()
