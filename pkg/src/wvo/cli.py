"""Command line entry point: ``wvo <subcommand> ...``.

Exit status is 0 when every requested check passes, 1 when a check fails
or a theorem violation is found, and 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import io as wio
from .cone import Cone
from .conjugate import epi_member, epi_member_shifted
from .errors import PreconditionError, SchemaError, TheoremViolation, WVOError
from .farkas import FarkasQuery, equivalence_audit
from .golden import run_example_suite
from .multipliers import Certificate, qualification, verify_certificate
from .optimality import certify_weak_min, is_weak_solution, strong_duality_check
from .order import PointSet, classify_dom, smax, wmax, wmin, wsup_finite, wsup_finite_contains
from .plot import emit_plot_data
from .rational import fmt_mat, fmt_vec, parse_vec_arg
from .sampling import make_rng, seed_from_env

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def parse_matrix_arg(text: str):
    """``"1,0;0,1"`` (rows split by ';') or a JSON nested list."""
    text = text.strip()
    if text.startswith("["):
        return tuple(tuple(Fraction(str(v)) for v in row) for row in wio.loads(text))
    return tuple(parse_vec_arg(r) for r in text.split(";"))


def _emit(obj) -> None:
    sys.stdout.write(wio.dumps(obj) + "\n")


def _load(args):
    return wio.load_problem(args.problem, approx=args.approx)


def _queries(args, prob):
    if getattr(args, "queries", None):
        with open(args.queries, encoding="utf-8") as fh:
            return wio.parse_queries(fh.read(), prob, approx=args.approx)
    if args.L is None or args.y is None:
        raise SchemaError("give --L and --y, or --queries FILE")
    return [(prob.L_matrix(parse_matrix_arg(args.L)), prob.y_vector(parse_vec_arg(args.y)))]


def _map(fn, items, jobs: int):
    """Ordered map, optionally across processes."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# -- subcommands ------------------------------------------------------------


def cmd_validate(args) -> int:
    prob = _load(args)
    rep = qualification(prob)
    _emit(
        {
            "dims": {"n": prob.n, "m": prob.m, "p": prob.p},
            "K": {"pointed": prob.K.is_pointed, "solid": prob.K.is_solid},
            "feasible_point": fmt_vec(prob.feasible_set.some_point()),
            "qualification": rep.to_dict(),
        }
    )
    return EXIT_OK


def cmd_order(args) -> int:
    pts = [tuple(Fraction(str(v)) for v in p) for p in wio.loads(args.points)]
    if not pts:
        raise SchemaError("--points: empty point set")
    dim = len(pts[0])
    K = Cone.from_facets(dim, parse_matrix_arg(args.facets)) if args.facets else Cone.orthant(dim)
    K.require_ordering()
    M = PointSet.make(pts, dim)
    if args.op in ("wmax", "wmin"):
        res = (wmax if args.op == "wmax" else wmin)(M, K)
        if args.plot:
            sys.stdout.write(emit_plot_data(res, args.plot))
        else:
            _emit({args.op: [fmt_vec(p) for p in res.points]})
    elif args.op == "smax":
        v = smax(M, K)
        _emit({"smax": None if v is None else fmt_vec(v)})
    elif args.op == "wsup":
        if args.plot:
            sys.stdout.write(emit_plot_data(wsup_finite(M, K), args.plot))
        elif args.y is None:
            raise SchemaError("wsup needs --y or --plot")
        else:
            _emit({"y": args.y, "in_wsup": wsup_finite_contains(M, K, parse_vec_arg(args.y))})
    return EXIT_OK


def cmd_classify(args) -> int:
    T = parse_matrix_arg(args.T)
    K = Cone.from_facets(len(T), parse_matrix_arg(args.K)) if args.K else Cone.orthant(len(T))
    p = len(T[0])
    S = Cone.from_facets(p, parse_matrix_arg(args.S)) if args.S else Cone.orthant(p)
    _emit(classify_dom(T, S, K).to_dict())
    return EXIT_OK


class _EpiJob:
    def __init__(self, prob, T, shifted):
        self.prob, self.T, self.shifted = prob, T, shifted

    def __call__(self, q):
        L, y = q
        if self.shifted:
            v = epi_member_shifted(L, y, self.T, self.prob)
        else:
            v = epi_member(L, y, self.prob, self.T)
        rec = {"L": fmt_mat(L), "y": fmt_vec(y), "member": v.member, "vacuous": v.vacuous}
        if v.witness is not None:
            rec["witness"] = v.witness
        return rec


def cmd_epi(args) -> int:
    prob = _load(args)
    T = parse_matrix_arg(args.T) if args.T else None
    if args.shifted and T is None:
        raise SchemaError("--shifted needs --T")
    recs = _map(_EpiJob(prob, T, args.shifted), _queries(args, prob), args.jobs)
    _emit(recs)
    return EXIT_OK


class _AuditJob:
    def __init__(self, prob, qualified):
        self.prob, self.qualified = prob, qualified

    def __call__(self, q):
        return equivalence_audit(FarkasQuery(q[0], q[1], self.prob), qualified=self.qualified).to_dict()


def cmd_farkas(args) -> int:
    prob = _load(args)
    qualified = qualification(prob).verdict
    recs = _map(_AuditJob(prob, qualified), _queries(args, prob), args.jobs)
    bad = sum(len(r["violations"]) for r in recs)
    if args.format == "table":
        print(f"{'#':>3}  {'mode':<16} {'b1':<6} {'T (L+)':<24} violations")
        for i, r in enumerate(recs):
            print(f"{i:>3}  {r['mode']:<16} {str(r['b1']):<6} {json.dumps(r['T_plus']):<24} {len(r['violations'])}")
    else:
        _emit({"qualified": qualified, "audits": recs, "violations": bad})
    return EXIT_FAIL if bad else EXIT_OK


def cmd_certify(args) -> int:
    prob = _load(args)
    x = parse_vec_arg(args.point)
    t0 = time.perf_counter()
    try:
        cert = certify_weak_min(x, prob)
    except PreconditionError as e:
        _emit({"point": fmt_vec(x), "certified": False, "reason": str(e)})
        return EXIT_FAIL
    out = {"point": fmt_vec(x), "certified": True, "certificate": cert.to_dict(), "seconds": time.perf_counter() - t0}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(wio.dump_certificate(cert) + "\n")
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    prob = _load(args)
    with open(args.certificate, encoding="utf-8") as fh:
        cert: Certificate = wio.parse_certificate(fh.read(), approx=args.approx)
    L = parse_matrix_arg(args.L) if args.L else None
    y = parse_vec_arg(args.y) if args.y else None
    chk = verify_certificate(cert, prob, L, y)
    _emit({"ok": chk.ok, "checks": chk.checks})
    return EXIT_OK if chk.ok else EXIT_FAIL


def cmd_duality(args) -> int:
    prob = _load(args)
    x = parse_vec_arg(args.point)
    seed = args.seed if args.seed is not None else seed_from_env()
    if not is_weak_solution(x, prob):
        _emit({"point": fmt_vec(x), "weak_solution": False})
        return EXIT_FAIL
    rep = strong_duality_check(x, prob, args.samples, make_rng(seed))
    _emit({"seed": seed, **rep.to_dict()})
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_examples(args) -> int:
    suites = [args.which] if args.which else [1, 2]
    reports = [run_example_suite(w).to_dict() for w in suites]
    if args.format == "table":
        for r in reports:
            print(f"suite {r['suite']}: {r['total']} tuples, {r['members']} members, "
                  f"{len(r['disagreements'])} disagreements")
            for k, v in r["checks"].items():
                print(f"  {'ok  ' if v else 'FAIL'} {k}")
    else:
        _emit(reports)
    return EXIT_OK if all(r["ok"] for r in reports) else EXIT_FAIL


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wvo", description="Exact weak vector optimization toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_problem(p):
        p.add_argument("problem", help="problem JSON file")
        p.add_argument("--approx", action="store_true", help="accept float literals, converted verbatim")
        return p

    def with_query(p):
        p.add_argument("--L", help="linear map X->Y, rows split by ';' (e.g. '1;0')")
        p.add_argument("--y", help="vector in Y, comma separated (e.g. '0,-1')")
        p.add_argument("--queries", help="JSON list of {L, y} objects")
        p.add_argument("--jobs", type=int, default=1, help="worker processes; output order is input order")
        return p

    p = with_problem(sub.add_parser("validate", help="parse a problem and report qualification"))
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("order", help="WMax / WMin / SMax / WSup of a finite point set")
    p.add_argument("op", choices=["wmax", "wmin", "smax", "wsup"])
    p.add_argument("--points", required=True, help="JSON list of points")
    p.add_argument("--facets", help="facet normals of K (default: nonnegative orthant)")
    p.add_argument("--y", help="query vector for wsup membership")
    p.add_argument("--plot", choices=["csv", "json"], help="emit 2-D plot data instead")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("classify", help="weak / full positivity of a map T: Z -> Y")
    p.add_argument("--T", required=True)
    p.add_argument("--K", help="facets of K (default orthant)")
    p.add_argument("--S", help="facets of S (default orthant)")
    p.set_defaults(func=cmd_classify)

    p = with_query(with_problem(sub.add_parser("epi", help="conjugate epigraph membership")))
    p.add_argument("--T", help="multiplier Z -> Y; omit for F + I_A")
    p.add_argument("--shifted", action="store_true", help="shifted-intersection test (needs --T)")
    p.set_defaults(func=cmd_epi)

    p = with_query(with_problem(sub.add_parser("farkas", help="audit the Farkas equivalences")))
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_farkas)

    p = with_problem(sub.add_parser("certify", help="multiplier certificate for a weak solution"))
    p.add_argument("--point", required=True)
    p.add_argument("--out", help="also write the certificate to this file")
    p.set_defaults(func=cmd_certify)

    p = with_problem(sub.add_parser("verify", help="re-check a certificate file"))
    p.add_argument("certificate")
    p.add_argument("--L")
    p.add_argument("--y")
    p.set_defaults(func=cmd_verify)

    p = with_problem(sub.add_parser("duality", help="sampled strong duality check"))
    p.add_argument("--point", required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, help="RNG seed (default: WVO_SEED or built-in)")
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("examples", help="run the built-in golden suites")
    p.add_argument("which", nargs="?", type=int, choices=[1, 2])
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_examples)
    return ap


_NEGATIVE_VALUE = re.compile(r"^-[\d./]")


def _glue_negative_values(argv):
    """``--T -1;0`` becomes ``--T=-1;0`` so argparse does not read a flag."""
    out = []
    for tok in argv:
        if out and _NEGATIVE_VALUE.match(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.func(args)
    except (SchemaError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except TheoremViolation as e:
        print(f"theorem violation: {e}", file=sys.stderr)
        return EXIT_FAIL
    except WVOError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
