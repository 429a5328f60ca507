"""Bit-exact file formats: polytope JSON, experiment CSV, and static SVG plots.

Polytope files are JSON objects {"dim": n, "vertices": [[...], ...]} with
every coordinate a decimal-free string "p" or "p/q"; round-tripping is
lossless.  CSV cells follow the same convention for exact columns and
shortest-roundtrip repr for numeric ones, so fixed inputs produce
byte-identical files.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction as Q
from typing import Iterable, Sequence

from .bodies import RawBody
from .geometry import VPolytope
from .scalar import as_fraction, fraction_str


class PolytopeParseError(Exception):
    pass


def polytope_to_obj(P) -> dict:
    return {
        "dim": P.dim,
        "vertices": [[fraction_str(c) for c in v] for v in P.vertices],
    }


def obj_to_polytope(obj):
    try:
        dim = int(obj["dim"])
        rows = obj["vertices"]
        verts = [tuple(as_fraction(c) for c in row) for row in rows]
    except (KeyError, TypeError, ValueError) as exc:
        raise PolytopeParseError(f"malformed polytope object: {exc}") from exc
    if not verts:
        raise PolytopeParseError("polytope file has no vertices")
    if any(len(v) != dim for v in verts):
        raise PolytopeParseError("vertex arity does not match dim")
    if dim in (2, 3):
        return VPolytope.from_points(verts, dim)
    return RawBody(dim, tuple(verts))


def save_polytope(path, P) -> None:
    with open(path, "w") as fh:
        json.dump(polytope_to_obj(P), fh)
        fh.write("\n")


def load_polytope(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise PolytopeParseError(f"cannot read polytope file {path}: {exc}") from exc
    return obj_to_polytope(obj)


def format_cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, (int, str)):
        return str(x)
    if isinstance(x, Q):
        return fraction_str(x)
    if isinstance(x, float):
        return repr(x)
    raise TypeError(f"cannot format {type(x).__name__} for CSV")


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_cell(c) for c in row))
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def read_csv(path) -> tuple[list[str], list[list[str]]]:
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
    if not lines:
        raise PolytopeParseError(f"empty CSV {path}")
    header = lines[0].split(",")
    return header, [ln.split(",") for ln in lines[1:]]


def write_loglog_svg(path, xs: Sequence[float], ys: Sequence[float],
                     slope: float | None = None, intercept: float | None = None,
                     xlabel: str = "dH", ylabel: str = "dG") -> None:
    """Static log-log scatter with an optional fitted line.

    Derived from already-written CSV data only; deterministic output.
    """
    pts = [(math.log10(x), math.log10(y)) for x, y in zip(xs, ys)
           if x > 0 and y > 0]
    if not pts:
        raise ValueError("no positive points to plot")
    w, h, margin = 640, 440, 56
    xs_l = [p[0] for p in pts]
    ys_l = [p[1] for p in pts]
    x0, x1 = min(xs_l), max(xs_l)
    y0, y1 = min(ys_l), max(ys_l)
    x1 = x1 if x1 > x0 else x0 + 1
    y1 = y1 if y1 > y0 else y0 + 1

    def sx(x):
        return margin + (x - x0) / (x1 - x0) * (w - 2 * margin)

    def sy(y):
        return h - margin - (y - y0) / (y1 - y0) * (h - 2 * margin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}">',
        f'<rect width="{w}" height="{h}" fill="white"/>',
        f'<line x1="{margin}" y1="{h - margin}" x2="{w - margin}" '
        f'y2="{h - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{h - margin}" stroke="black"/>',
        f'<text x="{w // 2}" y="{h - 12}" text-anchor="middle" '
        f'font-size="13">log10 {xlabel}</text>',
        f'<text x="16" y="{h // 2}" font-size="13" '
        f'transform="rotate(-90 16 {h // 2})" text-anchor="middle">'
        f'log10 {ylabel}</text>',
    ]
    if slope is not None and intercept is not None:
        # fit lives in natural logs; rescale the intercept for log10 axes
        gy0 = slope * x0 + intercept / math.log(10)
        gy1 = slope * x1 + intercept / math.log(10)
        parts.append(
            f'<line x1="{sx(x0):.2f}" y1="{sy(gy0):.2f}" x2="{sx(x1):.2f}" '
            f'y2="{sy(gy1):.2f}" stroke="#888" stroke-dasharray="4 3"/>')
        parts.append(
            f'<text x="{w - margin}" y="{margin - 8}" text-anchor="end" '
            f'font-size="13">slope {slope:.4f}</text>')
    for px, py in pts:
        parts.append(
            f'<circle cx="{sx(px):.2f}" cy="{sy(py):.2f}" r="3.5" '
            f'fill="#1f6fb2"/>')
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts) + "\n")
