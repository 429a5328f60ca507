"""Exact mixed volumes of rational polytopes.

Two independent routes are provided and cross-validated by the test suite:

* :func:`steiner_profile` interpolates the polynomial Vol(G + tK) at the
  integer nodes t = 0..n and solves the Vandermonde system exactly, yielding
  the coefficient family MV_j = MV(G[n-j], K[j]).
* :func:`mixed_volume_full` evaluates the full multilinear mixed volume by
  inclusion-exclusion over Minkowski sums of subsets, using only hull and
  volume primitives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

from .geometry import DimensionError, VPolytope, _add
from .minkowski import minkowski_sum, volume_polynomial
from .scalar import SqrtSum


@dataclass(frozen=True)
class SteinerProfile:
    """Mixed volumes mv[j] = MV(G repeated n-j times, K repeated j times)."""

    n: int
    mv: tuple[Q, ...]

    def __post_init__(self):
        if len(self.mv) != self.n + 1:
            raise ValueError("profile must have n+1 entries")


def _solve_vandermonde(nodes: Sequence[int], values: Sequence[Q]) -> list[Q]:
    """Exact solve of sum_j a_j t^j = v(t) on distinct integer nodes."""
    m = len(nodes)
    rows = [[Q(t**j) for j in range(m)] + [Q(values[i])]
            for i, t in enumerate(nodes)]
    for col in range(m):
        piv = next(r for r in range(col, m) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(m):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [rows[r][m] for r in range(m)]


def steiner_profile(G: VPolytope, K: VPolytope) -> SteinerProfile:
    """Mixed-volume profile of (G, K) by exact polynomial interpolation."""
    if G.dim != K.dim:
        raise DimensionError("ambient dimension mismatch")
    if G.idim != G.dim:
        raise DimensionError("reference body must be full-dimensional")
    n = G.dim
    values = [G.volume()]
    for t in range(1, n + 1):
        values.append(minkowski_sum(G, K.scale(t)).volume())
    coeffs = _solve_vandermonde(list(range(n + 1)), values)
    mv = tuple(coeffs[j] / math.comb(n, j) for j in range(n + 1))
    return SteinerProfile(n, mv)


def steiner_profile_fast(G: VPolytope, K: VPolytope) -> SteinerProfile:
    """Same profile read off the facet-decomposition volume polynomial."""
    n = G.dim
    coeffs = volume_polynomial(G, K)
    mv = tuple(coeffs[j] / math.comb(n, j) for j in range(n + 1))
    return SteinerProfile(n, mv)


def _hull_of_sum(bodies: Sequence[VPolytope]) -> VPolytope:
    """Minkowski sum via iterated pairwise vertex sums and re-hulling.

    Deliberately avoids the structured-sum fast path so that
    :func:`mixed_volume_full` stays an independent oracle.
    """
    acc = bodies[0]
    for nxt in bodies[1:]:
        pts = [_add(a, b) for a in acc.vertices for b in nxt.vertices]
        acc = VPolytope.from_points(pts, acc.dim)
    return acc


def mixed_volume_full(bodies: Sequence[VPolytope]) -> Q:
    """MV(K_1, ..., K_n) by inclusion-exclusion over 2^n - 1 subset sums."""
    bodies = list(bodies)
    n = bodies[0].dim
    if len(bodies) != n:
        raise ValueError(f"need exactly {n} bodies in dimension {n}")
    if any(b.dim != n for b in bodies):
        raise DimensionError("ambient dimension mismatch")
    total = Q(0)
    for mask in range(1, 1 << n):
        subset = [bodies[i] for i in range(n) if mask & (1 << i)]
        sign = (-1) ** (n - len(subset))
        total += sign * _hull_of_sum(subset).volume()
    return total / math.factorial(n)


def mv1_ball(G: VPolytope) -> SqrtSum:
    """MV_1(G, unit ball) via the Steiner closed forms.

    In the plane this is half the perimeter; in space a third of the surface
    area.  Exact (a symbolic sum of square roots), so downstream constants do
    not inherit polygonal-proxy error.
    """
    if G.idim != G.dim:
        raise DimensionError("reference body must be full-dimensional")
    if G.dim == 2:
        return G.surface_measure() / 2
    return G.surface_measure() / 3
