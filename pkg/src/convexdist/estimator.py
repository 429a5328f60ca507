"""Randomized volume and distance estimation beyond the exact kernel.

Hit-or-miss Monte Carlo against membership oracles, with common random
numbers (CRN) across the bodies entering a difference: the pairwise distance
estimators classify one point stream against all Minkowski sums at once, so
the small difference of large volumes keeps a controlled variance.  Streams
are split deterministically per chunk, making every estimate reproducible
from its seed alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

import numpy as np

from . import lp as exact_lp
from .bodies import RawBody
from .geometry import VPolytope, join
from .minkowski import minkowski_sum
from .scalar import as_fraction

_CHUNK = 1 << 16


@dataclass(frozen=True)
class VolumeEstimate:
    mean: float
    ci95_halfwidth: float
    samples: int
    box: tuple[tuple[float, ...], tuple[float, ...]]


# ---------------------------------------------------------------------------
# membership oracles (vectorized over (m, n) float arrays)
# ---------------------------------------------------------------------------

class BoxOracle:
    def __init__(self, lo, hi):
        self.lo = np.asarray(lo, dtype=float)
        self.hi = np.asarray(hi, dtype=float)

    def contains_batch(self, pts: np.ndarray) -> np.ndarray:
        return np.all((pts >= self.lo) & (pts <= self.hi), axis=1)


class HalfspaceOracle:
    """Membership via the exact facet system of a full-dimensional body."""

    def __init__(self, A, b):
        self.A = np.asarray(A, dtype=float)
        self.b = np.asarray(b, dtype=float)

    @classmethod
    def from_polytope(cls, P: VPolytope) -> "HalfspaceOracle":
        rows = P.facet_halfspaces()
        A = [[float(c) for c in u] for u, _ in rows]
        b = [float(c) for _, c in rows]
        return cls(A, b)

    def contains_batch(self, pts: np.ndarray) -> np.ndarray:
        return np.all(pts @ self.A.T <= self.b, axis=1)


class BallOracle:
    def __init__(self, center, radius: float):
        self.center = np.asarray(center, dtype=float)
        self.radius = float(radius)

    def contains_batch(self, pts: np.ndarray) -> np.ndarray:
        d = pts - self.center
        return np.einsum("ij,ij->i", d, d) <= self.radius**2


class SphericalCapOracle:
    """Cap of the radius-r ball centered at 0, cut at depth h along +e_last."""

    def __init__(self, n: int, r: float, h: float):
        self.n = n
        self.r = float(r)
        self.h = float(h)

    def contains_batch(self, pts: np.ndarray) -> np.ndarray:
        inside = np.einsum("ij,ij->i", pts, pts) <= self.r**2
        return inside & (pts[:, -1] >= self.r - self.h)

    def box(self):
        r, h, n = self.r, self.h, self.n
        lo = [-r] * (n - 1) + [r - h]
        hi = [r] * n
        return (tuple(lo), tuple(hi))


class MinkowskiSumOracle:
    """x in P + Q decided by convex-combination feasibility, one LP per point."""

    def __init__(self, P, Q, tol: float = 1e-9):
        self.vp = np.array([[float(c) for c in v] for v in P.vertices])
        self.vq = np.array([[float(c) for c in v] for v in Q.vertices])
        self.tol = tol

    def contains_batch(self, pts: np.ndarray) -> np.ndarray:
        from scipy.optimize import linprog

        n = pts.shape[1]
        p, q = len(self.vp), len(self.vq)
        A_eq = np.zeros((n + 2, p + q))
        A_eq[:n, :p] = self.vp.T
        A_eq[:n, p:] = self.vq.T
        A_eq[n, :p] = 1.0
        A_eq[n + 1, p:] = 1.0
        out = np.zeros(len(pts), dtype=bool)
        c = np.zeros(p + q)
        for i, x in enumerate(pts):
            b_eq = np.concatenate([x, [1.0, 1.0]])
            res = linprog(c, A_eq=A_eq, b_eq=b_eq, bounds=(0, None),
                          method="highs")
            out[i] = bool(res.status == 0)
        return out


def member_minkowski(x: Sequence, body_a, body_b, exact_limit: int = 128):
    """Decide x in body_a + body_b; exact rational LP when small enough.

    Returns (member, exact_flag).  Boundary points count as members.  Above
    ``exact_limit`` total vertices the decision falls back to a numeric LP at
    tolerance 1e-9 and is flagged approximate.
    """
    xq = tuple(as_fraction(c) for c in x)
    n = len(xq)
    vp, vq = body_a.vertices, body_b.vertices
    if any(len(v) != n for v in vp) or any(len(v) != n for v in vq):
        raise ValueError("dimension mismatch")
    if len(vp) + len(vq) <= exact_limit:
        p, q = len(vp), len(vq)
        A = []
        for k in range(n):
            A.append([v[k] for v in vp] + [w[k] for w in vq])
        A.append([Q(1)] * p + [Q(0)] * q)
        A.append([Q(0)] * p + [Q(1)] * q)
        b = list(xq) + [Q(1), Q(1)]
        sol = exact_lp.feasible_combination(A, b)
        return sol is not None, True
    oracle = MinkowskiSumOracle(body_a, body_b)
    res = oracle.contains_batch(np.array([[float(c) for c in xq]]))
    return bool(res[0]), False


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------

def _chunk_rng(seed: int, idx: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((int(seed), int(idx))))


def _box_floats(lo, hi, pad: float = 1e-12):
    lo_f = np.array([float(c) for c in lo])
    hi_f = np.array([float(c) for c in hi])
    span = np.maximum(hi_f - lo_f, 1.0)
    return lo_f - pad * span, hi_f + pad * span


def mc_volume(oracle, box, samples: int, seed: int,
              chunk: int = _CHUNK) -> VolumeEstimate:
    """Unbiased hit-or-miss volume estimate with a reproducible stream."""
    lo, hi = box
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    if samples < 1000:
        raise ValueError("need at least 1000 samples")
    if np.any(hi <= lo):
        raise ValueError("degenerate sampling box")
    n = len(lo)
    volbox = float(np.prod(hi - lo))
    hits = 0
    done = 0
    idx = 0
    while done < samples:
        m = min(chunk, samples - done)
        rng = _chunk_rng(seed, idx)
        pts = rng.random((m, n)) * (hi - lo) + lo
        hits += int(np.count_nonzero(oracle.contains_batch(pts)))
        done += m
        idx += 1
    p = hits / samples
    ci = 1.96 * volbox * math.sqrt(max(p * (1 - p), 0.0) / samples)
    return VolumeEstimate(volbox * p, ci, samples,
                          (tuple(lo.tolist()), tuple(hi.tolist())))


def _is_box(body) -> bool:
    """True when the hull of the vertex list is its own bounding box.

    Exact: holds iff every corner of the bounding box appears among the
    vertices (non-extreme extra vertices are irrelevant to the hull).
    """
    verts = set(body.vertices)
    n = body.dim if hasattr(body, "dim") else len(next(iter(verts)))
    lo = tuple(min(v[k] for v in verts) for k in range(n))
    hi = tuple(max(v[k] for v in verts) for k in range(n))
    corners = {tuple(hi[k] if mask & (1 << k) else lo[k] for k in range(n))
               for mask in range(1 << n)}
    return corners <= verts


def _sum_oracle(G, X):
    """Best membership oracle for G + X (exact H-rep in 2-3D, box fast path)."""
    if isinstance(G, VPolytope) and isinstance(X, VPolytope):
        S = minkowski_sum(G, X)
        return HalfspaceOracle.from_polytope(S)
    if _is_box(G) and _is_box(X):
        glo, ghi = G.bbox()
        xlo, xhi = X.bbox()
        lo = [float(a + b) for a, b in zip(glo, xlo)]
        hi = [float(a + b) for a, b in zip(ghi, xhi)]
        return BoxOracle(lo, hi)
    return MinkowskiSumOracle(G, X)


def _union_body(K, L):
    if isinstance(K, VPolytope) and isinstance(L, VPolytope):
        return join(K, L)
    return RawBody(K.dim, tuple(K.vertices) + tuple(L.vertices))


def _sum_box(G, X):
    glo, ghi = G.bbox()
    xlo, xhi = X.bbox()
    return ([a + b for a, b in zip(glo, xlo)],
            [a + b for a, b in zip(ghi, xhi)])


@dataclass(frozen=True)
class DistanceEstimate:
    value: float
    ci95_halfwidth: float
    samples: int
    parts: dict


def mc_volume_distance(G, K, L, samples: int, seed: int,
                       chunk: int = _CHUNK) -> DistanceEstimate:
    """CRN estimate of 2 Vol(G+hull(K u L)) - Vol(G+K) - Vol(G+L).

    One uniform stream over a common box is classified against all three
    sums, so identical bodies cancel exactly and the difference's variance
    stays proportional to the symmetric difference, not the volumes.
    """
    if samples < 1000:
        raise ValueError("need at least 1000 samples")
    J = _union_body(K, L)
    oK, oL, oJ = _sum_oracle(G, K), _sum_oracle(G, L), _sum_oracle(G, J)
    lo, hi = _box_floats(*_sum_box(G, J))
    n = len(lo)
    volbox = float(np.prod(hi - lo))
    s_y = 0.0
    s_y2 = 0.0
    hits = np.zeros(3, dtype=np.int64)
    done = 0
    idx = 0
    while done < samples:
        m = min(chunk, samples - done)
        rng = _chunk_rng(seed, idx)
        pts = rng.random((m, n)) * (hi - lo) + lo
        mK = oK.contains_batch(pts)
        mL = oL.contains_batch(pts)
        mJ = oJ.contains_batch(pts)
        y = 2.0 * mJ - 1.0 * mK - 1.0 * mL
        s_y += float(y.sum())
        s_y2 += float((y * y).sum())
        hits += (int(mK.sum()), int(mL.sum()), int(mJ.sum()))
        done += m
        idx += 1
    mean_y = s_y / samples
    var_y = max(s_y2 / samples - mean_y**2, 0.0)
    if samples > 1:
        var_y *= samples / (samples - 1)
    ci = 1.96 * volbox * math.sqrt(var_y / samples)
    box = (tuple(lo.tolist()), tuple(hi.tolist()))
    parts = {}
    for name, h in zip(("G+K", "G+L", "G+union"), hits):
        p = h / samples
        parts[name] = VolumeEstimate(
            volbox * p,
            1.96 * volbox * math.sqrt(max(p * (1 - p), 0.0) / samples),
            samples, box)
    return DistanceEstimate(volbox * mean_y, ci, samples, parts)


def mc_mixed_distance(G, K, L, samples: int, seed: int,
                      chunk: int = _CHUNK) -> DistanceEstimate:
    """Estimate the mixed-volume distance by polynomial fitting.

    Per node t = 1..n, a CRN stream estimates
    D(t) = 2 Vol(G+t*hull(K u L)) - Vol(G+tK) - Vol(G+tL); the coefficient
    extraction through the exact Vandermonde inverse is a fixed linear map,
    so the confidence interval propagates exactly through it.  Never exact;
    for dimensions 2-3 prefer the exact kernel.
    """
    n = G.dim
    if samples < 1000 * n:
        raise ValueError("need at least 1000 samples per node")
    J = _union_body(K, L)
    per_node = samples // n
    d_vals = np.zeros(n)
    d_vars = np.zeros(n)
    parts = {}
    for t in range(1, n + 1):
        Kt, Lt, Jt = K.scale(t), L.scale(t), J.scale(t)
        oK, oL, oJ = _sum_oracle(G, Kt), _sum_oracle(G, Lt), _sum_oracle(G, Jt)
        lo, hi = _box_floats(*_sum_box(G, Jt))
        volbox = float(np.prod(hi - lo))
        s_y = s_y2 = 0.0
        done = 0
        idx = 0
        while done < per_node:
            m = min(chunk, per_node - done)
            rng = _chunk_rng(seed, (t << 20) + idx)
            pts = rng.random((m, len(lo))) * (hi - lo) + lo
            y = (2.0 * oJ.contains_batch(pts)
                 - 1.0 * oK.contains_batch(pts)
                 - 1.0 * oL.contains_batch(pts))
            s_y += float(y.sum())
            s_y2 += float((y * y).sum())
            done += m
            idx += 1
        mean_y = s_y / per_node
        var_y = max(s_y2 / per_node - mean_y**2, 0.0) * per_node / max(per_node - 1, 1)
        d_vals[t - 1] = volbox * mean_y
        d_vars[t - 1] = (volbox**2) * var_y / per_node
        parts[f"D({t})"] = VolumeEstimate(
            d_vals[t - 1], 1.96 * math.sqrt(d_vars[t - 1]), per_node,
            (tuple(lo.tolist()), tuple(hi.tolist())))
    V = np.array([[float(t**j) for j in range(1, n + 1)]
                  for t in range(1, n + 1)])
    Minv = np.linalg.inv(V)
    weights = np.zeros(n)
    for j in range(1, n + 1):
        weights += Minv[j - 1] / math.comb(n, j)
    value = float(weights @ d_vals)
    ci = 1.96 * math.sqrt(float((weights**2) @ d_vars))
    return DistanceEstimate(value, ci, samples, parts)
