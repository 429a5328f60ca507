"""Reference bodies, polygon proxies for the disk, and random test bodies."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

import numpy as np

from .geometry import VPolytope
from .scalar import as_fraction


def unit_square() -> VPolytope:
    return VPolytope.from_points([(0, 0), (1, 0), (1, 1), (0, 1)])


def unit_cube() -> VPolytope:
    return VPolytope.from_points(
        [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])


def unit_simplex(n: int) -> VPolytope:
    pts = [tuple(Q(0) for _ in range(n))]
    for i in range(n):
        pts.append(tuple(Q(1) if j == i else Q(0) for j in range(n)))
    return VPolytope.from_points(pts, n)


def octahedron() -> VPolytope:
    pts = []
    for i in range(3):
        for s in (1, -1):
            pts.append(tuple(s if j == i else 0 for j in range(3)))
    return VPolytope.from_points(pts, 3)


def inscribed_ngon(m: int, bits: int = 20) -> VPolytope:
    """Near-regular m-gon inscribed in the unit disk, on a dyadic grid.

    Vertices are cos/sin pairs rounded toward the origin on the grid
    2^-bits, so every vertex lies exactly inside the disk (certified by an
    integer check) while staying within 2^-bits+ of the circle.  A common
    small denominator keeps all downstream exact arithmetic fast.
    """
    den = 1 << bits
    pts = []
    for k in range(m):
        theta = 2 * math.pi * k / m
        a = math.floor(math.cos(theta) * den) if math.cos(theta) >= 0 \
            else math.ceil(math.cos(theta) * den)
        b = math.floor(math.sin(theta) * den) if math.sin(theta) >= 0 \
            else math.ceil(math.sin(theta) * den)
        while a * a + b * b > den * den:
            a -= 1 if a > 0 else -1
        pts.append((Q(a, den), Q(b, den)))
    P = VPolytope.from_points(pts, 2)
    if P.nvertices != m:
        raise ValueError("grid resolution too coarse for this vertex count")
    return P


def circumscribed_ngon(m: int, bits: int = 20) -> VPolytope:
    """Near-regular m-gon certified to contain the unit disk.

    The inscribed polygon is rescaled by a rational factor exceeding the
    reciprocal of its exact minimal facet distance, which pushes every edge
    to distance >= 1 from the origin.
    """
    from .scalar import sqrt_enclosure

    P = inscribed_ngon(m, bits)
    # minimal squared facet distance (offset/|u|)^2, exact
    min_d2 = None
    for u, c in P.facet_halfspaces():
        if c <= 0:
            raise ValueError("polygon does not contain the origin")
        d2 = c * c / Q(sum(x * x for x in u))
        if min_d2 is None or d2 < min_d2:
            min_d2 = d2
    lo, _ = sqrt_enclosure(min_d2, 40)
    factor = (1 / lo).limit_denominator(1 << 24)
    while factor * factor * min_d2 < 1:
        factor += Q(1, 1 << 20)
    return P.scale(factor)


def max_sagitta(P: VPolytope) -> float:
    """Largest arc sagitta of an inscribed polygon of the unit circle.

    Below roughly ten times this value, cap volumes of the proxy revert to
    the polytope power law, so slope fits must stay above it.
    """
    angs = sorted(math.atan2(float(v[1]), float(v[0])) for v in P.vertices)
    gaps = [b - a for a, b in zip(angs, angs[1:])]
    gaps.append(2 * math.pi + angs[0] - angs[-1])
    return 1 - math.cos(max(gaps) / 2)


def proxy_fit_window(P: VPolytope, radius: float = 1.0) -> tuple[float, float]:
    """Documented validity window [10 * sagitta, radius/4] for disk proxies."""
    return (10 * max_sagitta(P), radius / 4)


@dataclass(frozen=True)
class RawBody:
    """Vertex list in arbitrary ambient dimension (for the estimator)."""

    dim: int
    vertices: tuple[tuple[Q, ...], ...]

    def scale(self, t) -> "RawBody":
        tq = as_fraction(t)
        return RawBody(self.dim, tuple(
            tuple(tq * c for c in v) for v in self.vertices))

    def bbox(self):
        lo = tuple(min(v[k] for v in self.vertices) for k in range(self.dim))
        hi = tuple(max(v[k] for v in self.vertices) for k in range(self.dim))
        return lo, hi


def hyperbox(lo: Sequence, hi: Sequence) -> RawBody:
    lo = tuple(as_fraction(c) for c in lo)
    hi = tuple(as_fraction(c) for c in hi)
    if len(lo) != len(hi):
        raise ValueError("bound dimension mismatch")
    if any(a > b for a, b in zip(lo, hi)):
        raise ValueError("inverted box bounds")
    n = len(lo)
    verts = []
    for mask in range(1 << n):
        verts.append(tuple(hi[k] if mask & (1 << k) else lo[k]
                           for k in range(n)))
    return RawBody(n, tuple(verts))


def random_point_in(G: VPolytope, rng: np.random.Generator,
                    den: int = 1024) -> tuple[Q, ...]:
    """Uniform rational point in G by rejection from the bounding box."""
    lo, hi = G.bbox()
    lo_i = [math.floor(c * den) for c in lo]
    hi_i = [math.ceil(c * den) for c in hi]
    while True:
        p = tuple(Q(int(rng.integers(a, b + 1)), den)
                  for a, b in zip(lo_i, hi_i))
        if G.contains_point(p):
            return p


def random_body_in(G: VPolytope, rng: np.random.Generator,
                   kmin: int = 3, kmax: int = 12, den: int = 1024) -> VPolytope:
    """Hull of k uniform points in G, k uniform in [kmin, kmax].

    Covers degenerate shapes on purpose: with few points the hull is often a
    triangle or (rarely) a segment, and those are legitimate inputs.
    """
    k = int(rng.integers(kmin, kmax + 1))
    return VPolytope.from_points(
        [random_point_in(G, rng, den) for _ in range(k)], G.dim)
