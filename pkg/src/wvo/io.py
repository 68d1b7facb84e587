"""JSON problem, certificate and query files with exact rationals.

Rationals travel as bare integers or ``"num/den"`` strings.  JSON floats are
rejected unless ``approx=True``, in which case the literal text is converted
verbatim (``0.1`` becomes 1/10, never the nearest double).
"""

from __future__ import annotations

import json
from decimal import Decimal
from fractions import Fraction
from typing import Any

from .cone import Cone
from .errors import DimensionError, PreconditionError, SchemaError
from .multipliers import Certificate
from .problem import Polyhedron, Problem, VectorAffineMap
from .rational import mat, vec

SCHEMA_VERSION = 1


class _FloatSeen(Exception):
    def __init__(self, literal: str):
        self.literal = literal


def _reject_float(literal: str):
    raise _FloatSeen(literal)


def _line_of(text: str, needle: str) -> int | None:
    pos = text.find(needle)
    return None if pos < 0 else text.count("\n", 0, pos) + 1


def loads(text: str, approx: bool = False) -> Any:
    """``json.loads`` with float handling and positioned error messages."""
    hook = Decimal if approx else _reject_float
    try:
        return json.loads(text, parse_float=hook)
    except _FloatSeen as e:
        line = _line_of(text, e.literal)
        where = f" (line {line})" if line else ""
        raise SchemaError(f"float literal {e.literal}{where} rejected; write it as a fraction or use --approx") from None
    except json.JSONDecodeError as e:
        raise SchemaError(f"malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None


def _field(d: dict, key: str, path: str):
    if not isinstance(d, dict):
        raise SchemaError(f"{path}: expected an object")
    if key not in d:
        raise SchemaError(f"{path}.{key}: missing field" if path else f"{key}: missing field")
    return d[key]


def _wrap(path: str, fn, *args):
    try:
        return fn(*args)
    except SchemaError:
        raise
    except (TypeError, ValueError, KeyError, ZeroDivisionError, DimensionError, PreconditionError) as e:
        raise SchemaError(f"{path}: {e}") from None


def problem_from_dict(d: dict, approx: bool = False) -> Problem:
    version = _field(d, "schema_version", "")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"schema_version: unsupported value {version!r} (expected {SCHEMA_VERSION})")
    dims = _field(d, "dims", "")
    n, m, p = (_field(dims, k, "dims") for k in ("n", "m", "p"))
    for k, v in zip("nmp", (n, m, p)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise SchemaError(f"dims.{k}: expected a positive integer")
    cones = _field(d, "cones", "")
    K = _wrap("cones.K", Cone.from_dict, _field(cones, "K", "cones"), approx)
    S = _wrap("cones.S", Cone.from_dict, _field(cones, "S", "cones"), approx)
    if K.dim != m:
        raise SchemaError(f"cones.K: dimension {K.dim} differs from dims.m={m}")
    if S.dim != p:
        raise SchemaError(f"cones.S: dimension {S.dim} differs from dims.p={p}")
    if not (K.is_pointed and K.is_solid):
        raise SchemaError(f"cones.K: not an ordering cone (pointed={K.is_pointed}, solid={K.is_solid})")
    maps = _field(d, "maps", "")
    F = _wrap("maps.F", VectorAffineMap.from_dict, _field(maps, "F", "maps"), n, approx)
    G = _wrap("maps.G", VectorAffineMap.from_dict, _field(maps, "G", "maps"), n, approx)
    C_raw = d.get("C", {"dim": n, "rows": []})
    C = _wrap("C", Polyhedron.from_dict, C_raw, approx)
    prob = _wrap("problem", Problem, K, S, F, G, C, dict(d.get("metadata") or {}))
    if prob.base_domain.is_empty():
        raise SchemaError("C: infeasible constraint set (C cap dom F cap dom G is empty)")
    if prob.feasible_set.is_empty():
        raise SchemaError("C: infeasible constraint set (no x in C with G(x) in -S)")
    return prob


def problem_to_dict(prob: Problem) -> dict:
    d = {
        "schema_version": SCHEMA_VERSION,
        "dims": {"n": prob.n, "m": prob.m, "p": prob.p},
        "cones": {"K": prob.K.to_dict(), "S": prob.S.to_dict()},
        "maps": {"F": prob.F.to_dict(), "G": prob.G.to_dict()},
        "C": prob.C.to_dict(),
    }
    if prob.metadata:
        d["metadata"] = prob.metadata
    return d


def parse_problem(text: str, approx: bool = False) -> Problem:
    return problem_from_dict(loads(text, approx), approx)


def dump_problem(prob: Problem) -> str:
    return json.dumps(problem_to_dict(prob), indent=2)


def load_problem(path: str, approx: bool = False) -> Problem:
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read(), approx)


def parse_certificate(text: str, approx: bool = False) -> Certificate:
    d = loads(text, approx)
    if isinstance(d, dict) and "certificate" in d:
        d = d["certificate"]
    for key in ("T", "y_star", "z_star", "k0"):
        _field(d, key, "certificate")
    return _wrap("certificate", Certificate.from_dict, d)


def dump_certificate(cert: Certificate) -> str:
    return json.dumps(cert.to_dict(), indent=2)


def parse_queries(text: str, prob: Problem, approx: bool = False) -> list[tuple]:
    """A JSON list of ``{"L": [[...]], "y": [...]}`` objects."""
    raw = loads(text, approx)
    if isinstance(raw, dict):
        raw = [raw]
    if not isinstance(raw, list):
        raise SchemaError("queries: expected a list of {L, y} objects")
    out = []
    for i, item in enumerate(raw):
        L = _wrap(f"queries[{i}].L", lambda v: prob.L_matrix(mat(v, approx)), _field(item, "L", f"queries[{i}]"))
        y = _wrap(f"queries[{i}].y", lambda v: prob.y_vector(vec(v, approx)), _field(item, "y", f"queries[{i}]"))
        out.append((L, y))
    return out


def jsonable(obj):
    """Fractions to ``"num/den"`` strings, tuples to lists, recursively."""
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def dumps(obj, indent: int | None = 2) -> str:
    return json.dumps(jsonable(obj), indent=indent)


__all__ = [
    "SCHEMA_VERSION",
    "loads",
    "dumps",
    "jsonable",
    "parse_problem",
    "dump_problem",
    "load_problem",
    "problem_from_dict",
    "problem_to_dict",
    "parse_certificate",
    "dump_certificate",
    "parse_queries",
]
