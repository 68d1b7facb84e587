"""Plot data for 2-D results: point lists, WSup boundaries, membership grids.

Nothing is drawn here; the output is CSV or JSON for an external plotter.
The WSup of a finite set M is emitted exactly as pieces of the rays
v - t g (g an extreme ray of K, t >= 0) that survive removal of M - int K.
Unbounded pieces end in a ``direction`` row instead of a second vertex.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .cone import Cone
from .errors import PlotUnavailable
from .order import PointSet, WSupResult, wsup_finite_contains
from .rational import dot, fmt, fmt_vec, sub

INF = None  # open right end of a parameter interval


def _removed_interval(K: Cone, u, v, g):
    """Open t-interval where v - t g lies in u - int K, or None if empty.

    Each facet a gives a.(u - v) + t a.g > 0, an open half-line or all/none.
    """
    lo, hi = Fraction(-1), INF
    d = sub(u, v)
    for a in K.facets:
        c0, c1 = dot(a, d), dot(a, g)
        if c1 == 0:
            if c0 <= 0:
                return None
            continue
        bound = -c0 / c1
        if c1 > 0:
            lo = max(lo, bound)
        else:
            hi = bound if hi is INF else min(hi, bound)
    if hi is not INF and hi <= lo:
        return None
    return lo, hi


def _surviving_pieces(removed):
    """Closed pieces of [0, inf) left after deleting the open intervals."""
    removed = sorted(removed, key=lambda r: r[0])
    pieces = []
    start = Fraction(0)
    for lo, hi in removed:
        if hi is not INF and hi <= start:
            continue
        if lo >= start:
            pieces.append((start, lo))
        if hi is INF:
            return pieces
        start = max(start, hi)
    pieces.append((start, INF))
    return pieces


def wsup_polylines(M: PointSet, K: Cone) -> list[dict]:
    """Exact boundary pieces of WSup M in the plane."""
    if K.dim != 2:
        raise PlotUnavailable("plot data unavailable for dimension > 2")
    out = []
    for v in M.points:
        for g in K.generators:
            removed = [r for u in M.points if (r := _removed_interval(K, u, v, g)) is not None]
            for lo, hi in _surviving_pieces(removed):
                start = tuple(x - lo * y for x, y in zip(v, g))
                if hi is INF:
                    out.append({"points": [start], "ray": tuple(-y for y in g)})
                elif hi > lo:
                    end = tuple(x - hi * y for x, y in zip(v, g))
                    out.append({"points": [start, end], "ray": None})
                else:
                    out.append({"points": [start], "ray": None})
    # the pieces must lie on the boundary; guard against arithmetic slips
    for piece in out:
        for p in piece["points"]:
            assert wsup_finite_contains(M, K, p)
    return out


def membership_grid(result: WSupResult, lo=-3, hi=3, steps: int = 12) -> list[tuple]:
    span = Fraction(hi) - Fraction(lo)
    rows = []
    for i in range(steps + 1):
        for j in range(steps + 1):
            y = (Fraction(lo) + span * i / steps, Fraction(lo) + span * j / steps)
            rows.append((y[0], y[1], y in result))
    return rows


def _check_2d(dim: int) -> None:
    if dim != 2:
        raise PlotUnavailable(f"plot data unavailable for dimension {dim}; only 2-D results can be plotted")


def emit_plot_data(result, format: str = "csv", **grid) -> str:
    """CSV or JSON plot data for a PointSet or a WSupResult in the plane."""
    if format not in ("csv", "json"):
        raise ValueError("format must be 'csv' or 'json'")
    if isinstance(result, PointSet):
        if not result.points:
            raise PlotUnavailable("empty point set")
        _check_2d(result.dim)
        rows = [fmt_vec(p) for p in result.points]
        if format == "json":
            return json.dumps({"points": rows})
        return _csv(["y1", "y2"], rows)
    if isinstance(result, WSupResult):
        if result.infinite:
            raise PlotUnavailable("WSup is {+inf}; nothing to plot")
        K = result.cone
        if K is None:
            raise PlotUnavailable("result carries no ordering cone")
        _check_2d(K.dim)
        if isinstance(result.source, PointSet):
            if not result.source.points:
                raise PlotUnavailable("empty point set")
            lines = wsup_polylines(result.source, K)
            if format == "json":
                return json.dumps(
                    {
                        "polylines": [
                            {"points": [fmt_vec(p) for p in ln["points"]], "ray": ln["ray"] and fmt_vec(ln["ray"])}
                            for ln in lines
                        ]
                    }
                )
            rows = []
            for k, ln in enumerate(lines):
                for p in ln["points"]:
                    rows.append([k, "vertex", *fmt_vec(p)])
                if ln["ray"] is not None:
                    rows.append([k, "direction", *fmt_vec(ln["ray"])])
            return _csv(["polyline", "type", "y1", "y2"], rows)
        pts = membership_grid(result, **grid)
        if format == "json":
            return json.dumps({"grid": [[fmt(a), fmt(b), m] for a, b, m in pts]})
        return _csv(["y1", "y2", "member"], [[fmt(a), fmt(b), int(m)] for a, b, m in pts])
    raise PlotUnavailable(f"no plot data for {type(result).__name__}")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()
