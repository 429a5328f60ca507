"""Caps, slices, worst-case families, and the explicit comparison constants.

A cap is the part of the reference body G above a supporting hyperplane
shifted inward: direction vectors stay *unnormalized rational*, and the cap
is parametrized by the scaled height s = h_G(d) - c in the units of d.  The
geometric height h = s / |d| is attached as a numeric.  This keeps every cap
and slice exact; all structural inequalities are checked in the scaled form.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

from .geometry import (
    EMPTY,
    Halfspace,
    VPolytope,
    _dot,
    hausdorff,
)
from .scalar import Interval, SqrtSum, as_fraction, unit_ball_volume_interval


# ---------------------------------------------------------------------------
# caps and slices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cap:
    """Cap of the reference body: body = G intersect {d.x >= h_G(d) - s}."""

    body: VPolytope
    direction: tuple[Q, ...]
    scaled_height: Q
    geometric_height: float
    height_sq: Q


def cap(G: VPolytope, d: Sequence, s) -> Cap:
    dq = tuple(as_fraction(c) for c in d)
    if all(c == 0 for c in dq):
        raise ValueError("cap direction must be nonzero")
    sq = as_fraction(s)
    if sq < 0:
        raise ValueError("cap height must be nonnegative")
    h = G.support(dq)
    body = G.clip(Halfspace(dq, h - sq))
    dd = _dot(dq, dq)
    height_sq = sq * sq / dd
    return Cap(body, dq, sq, math.sqrt(float(height_sq)), height_sq)


def slice_at(G: VPolytope, d: Sequence, s) -> VPolytope:
    """Exact hyperplane section {x in G : d.x == h_G(d) - s}."""
    dq = tuple(as_fraction(c) for c in d)
    if all(c == 0 for c in dq):
        raise ValueError("slice direction must be nonzero")
    sq = as_fraction(s)
    sec = G.slice_with(dq, G.support(dq) - sq)
    if sec is EMPTY:
        raise ValueError("slice height is beyond the width of the body")
    return sec


def vertex_cap_threshold(G: VPolytope, d: Sequence) -> Q:
    """Largest scaled height below which the cap keeps a single apex vertex.

    Equals the smallest positive support gap h_G(d) - d.v over vertices; for
    scaled heights below it, caps in direction d are pyramids over the slice.
    """
    dq = tuple(as_fraction(c) for c in d)
    h = G.support(dq)
    gaps = [h - _dot(dq, v) for v in G.vertices]
    positive = [g for g in gaps if g > 0]
    if not positive:
        raise ValueError("body is flat in this direction")
    return min(positive)


def farthest_vertex_direction(G: VPolytope, origin: Sequence | None = None):
    """Primitive integer direction from an interior origin to the farthest vertex.

    Defaults to the Chebyshev center as the origin.  Ties are broken
    lexicographically for determinism.  Returns (direction, vertex).
    """
    if origin is None:
        origin = G.inradius().center
    oq = tuple(as_fraction(c) for c in origin)
    best = None
    for v in G.vertices:
        w = tuple(a - b for a, b in zip(v, oq))
        d2 = _dot(w, w)
        key = (d2, v)
        if best is None or key > best[0]:
            best = (key, w, v)
    _, w, v = best
    den = 1
    for c in w:
        den = den * c.denominator // math.gcd(den, c.denominator)
    iw = [int(c * den) for c in w]
    g = 0
    for c in iw:
        g = math.gcd(g, abs(c))
    if g == 0:
        raise ValueError("origin coincides with the farthest vertex")
    return tuple(c // g for c in iw), v


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

@dataclass
class FamilyPoint:
    """One experiment row: parameter, body pair, and exact/numeric distances."""

    t: Q
    K: VPolytope
    L: VPolytope
    dH_sq: Q
    dH: float
    dG: Q
    rhoG: Q
    vol_cap: Q | None
    geometric_height: float | None
    checks: dict


def cap_slice_family(G: VPolytope, d: Sequence | None,
                     schedule: Sequence) -> list[FamilyPoint]:
    """Cap/slice pairs (C_t, S_t) along a decreasing scaled-height schedule.

    Each point records the exact distances plus the structural checks:
    the Hausdorff distance dominates the geometric height (in scaled form
    dH * |d| >= s), the volume distance is at most 2^(n+1) Vol(C_t), and the
    Hausdorff distance decreases monotonically along the schedule.
    """
    from .metrics import pair_distances

    if d is None:
        d, _ = farthest_vertex_direction(G)
    dq = tuple(as_fraction(c) for c in d)
    sched = [as_fraction(t) for t in schedule]
    if any(t <= 0 for t in sched):
        raise ValueError("schedule must be positive")
    if any(a <= b for a, b in zip(sched, sched[1:])):
        raise ValueError("schedule must be strictly decreasing")
    dd = _dot(dq, dq)
    n = G.dim
    points: list[FamilyPoint] = []
    prev_dh: Q | None = None
    for t in sched:
        cp = cap(G, dq, t)
        sec = slice_at(G, dq, t)
        dG, rho = pair_distances(G, cp.body, sec)
        wit = hausdorff(cp.body, sec)
        vol_c = cp.body.volume()
        checks = {
            "height": wit.value_sq * dd >= t * t,
            "volume_bound": rho <= 2 ** (n + 1) * vol_c,
            "dh_monotone": prev_dh is None or wit.value_sq <= prev_dh,
        }
        prev_dh = wit.value_sq
        points.append(FamilyPoint(
            t=t, K=cp.body, L=sec, dH_sq=wit.value_sq, dH=wit.value,
            dG=dG, rhoG=rho, vol_cap=vol_c,
            geometric_height=cp.geometric_height, checks=checks))
    return points


def scaling_family(G: VPolytope, ratios: Sequence,
                   origin="chebyshev") -> list[FamilyPoint]:
    """Pairs (G0, r G0) for r in (0,1), with G0 translated so 0 lies inside.

    ``origin`` selects the translation: the Chebyshev center (default), the
    lexicographically smallest vertex ("vertex"), or an explicit point.  The
    checks record the exact closed forms
    rho = Vol(G) (2^n - (1+r)^n)  and  dH^2 = M^2 (1-r)^2
    with M the farthest vertex norm after translation.
    """
    from .metrics import pair_distances

    if origin == "chebyshev":
        o = G.inradius().center
    elif origin == "vertex":
        o = min(G.vertices)
    else:
        o = tuple(as_fraction(c) for c in origin)
    G0 = G.translate(tuple(-c for c in o))
    if not G0.contains_point((Q(0),) * G.dim):
        raise ValueError("translated body does not contain the origin")
    n = G.dim
    vol = G0.volume()
    m_sq = max(_dot(v, v) for v in G0.vertices)
    points: list[FamilyPoint] = []
    for r in (as_fraction(x) for x in ratios):
        if not 0 < r < 1:
            raise ValueError("scaling ratios must lie in (0, 1)")
        L = G0.scale(r)
        dG, rho = pair_distances(G0, G0, L)
        wit = hausdorff(G0, L)
        checks = {
            "rho_closed_form": rho == vol * (2**n - (1 + r) ** n),
            "dh_closed_form": wit.value_sq == m_sq * (1 - r) ** 2,
        }
        points.append(FamilyPoint(
            t=r, K=G0, L=L, dH_sq=wit.value_sq, dH=wit.value,
            dG=dG, rhoG=rho, vol_cap=None, geometric_height=None,
            checks=checks))
    return points


def dyadic_schedule(t_max, steps: int) -> list[Q]:
    """Geometric schedule t_max, t_max/2, ..., t_max/2^(steps-1)."""
    t0 = as_fraction(t_max)
    return [t0 / 2**i for i in range(steps)]


def geometric_schedule(t_min, t_max, steps: int) -> list[Q]:
    """Decreasing rational geometric schedule from t_max toward t_min.

    The ratio is rounded to a small-denominator rational so that scheduled
    heights (and everything computed from them) stay on coarse grids; the
    last point lands near t_min rather than exactly on it.
    """
    lo = as_fraction(t_min)
    hi = as_fraction(t_max)
    if not 0 < lo < hi:
        raise ValueError("need 0 < t_min < t_max")
    if steps < 2:
        raise ValueError("need at least two steps")
    ratio = Q((float(lo) / float(hi)) ** (1.0 / (steps - 1))).limit_denominator(16)
    if not 0 < ratio < 1:
        ratio = Q(1, 2)
    return [hi * ratio**i for i in range(steps)]


# ---------------------------------------------------------------------------
# spherical caps and the constants report
# ---------------------------------------------------------------------------

def spherical_cap_volume(n: int, r: float, h: float) -> float:
    """Volume of a height-h cap of the radius-r ball in R^n.

    Adaptive Gauss-Kronrod quadrature of  omega_{n-1} r^n times the integral
    of sin(theta)^n from 0 to arccos(1 - h/r), to absolute error <= 1e-12.
    """
    from scipy.integrate import quad

    if n < 1:
        raise ValueError("dimension must be positive")
    if not 0 <= h <= r:
        raise ValueError("cap height must satisfy 0 <= h <= r")
    if h == 0:
        return 0.0
    omega = unit_ball_volume_interval(n - 1).midpoint()
    upper = math.acos(1 - h / r)
    val, err = quad(lambda th: math.sin(th) ** n, 0.0, upper,
                    epsabs=1e-13, epsrel=1e-13, limit=200)
    if err > 1e-11:
        raise ArithmeticError(f"cap quadrature error estimate too large: {err}")
    return omega * r**n * val


@dataclass(frozen=True)
class ConstantsReport:
    """Explicit constants for the two-sided Hausdorff comparison bounds.

    ``c_upper`` multiplies dH in the Lipschitz upper bound; ``c_lower``
    multiplies dH^n in the cone-based lower bound (built from the certified
    inradius lower bound, hence itself a sound lower-bound constant).  The
    smooth-body constant multiplying dH^((n+1)/2) is recomputed from the
    cap-volume integral; the algebraically inconsistent closed form that the
    derivation displays is reported alongside for comparison, never asserted.
    """

    n: int
    diam_sq: Q
    diam: float
    r_lb: Q
    r_ub: Q
    c_upper: SqrtSum
    c_upper_interval: Interval
    c_upper_value: float
    c_lower_interval: Interval
    c_lower_value: float
    omega: tuple[float, ...]
    roll_radius: float | None = None
    c_smooth: float | None = None
    c_smooth_displayed: float | None = None


@functools.lru_cache(maxsize=64)
def theoretical_constants(G: VPolytope, roll_radius: float | None = None
                          ) -> ConstantsReport:
    from .mixed_volume import mv1_ball

    n = G.dim
    diam_sq = G.diameter_sq()
    diam_iv = Interval.sqrt(diam_sq)
    inr = G.inradius()
    c_upper = mv1_ball(G) * Q(n * (n + 1))
    c_upper_iv = c_upper.interval()
    omega_nm1 = unit_ball_volume_interval(n - 1)
    ratio = Interval.exact(inr.radius_lb) / diam_iv
    c_lower_iv = (omega_nm1 * Q(1, n)) * ratio ** (2 * n - 1)
    omega = tuple(unit_ball_volume_interval(k).midpoint() for k in range(n + 1))

    c_smooth = None
    c_smooth_displayed = None
    if roll_radius is not None:
        r = float(roll_radius)
        d = diam_iv.midpoint()
        w = omega_nm1.midpoint()
        shallow = w * (2 * r / math.pi) ** n * (2 / r) ** ((n + 1) / 2) / (n + 1)
        deep = omega[n] * r**n / (2 * d ** ((n + 1) / 2))
        c_smooth = min(shallow, deep)
        c_smooth_displayed = (w * math.pi ** (n + 1) * r ** ((n - 1) / 2)
                              / (2 ** ((n + 1) / 2) * (n + 1)))

    return ConstantsReport(
        n=n, diam_sq=diam_sq, diam=diam_iv.midpoint(),
        r_lb=inr.radius_lb, r_ub=inr.radius_ub,
        c_upper=c_upper, c_upper_interval=c_upper_iv,
        c_upper_value=c_upper_iv.midpoint(),
        c_lower_interval=c_lower_iv, c_lower_value=c_lower_iv.midpoint(),
        omega=omega, roll_radius=roll_radius,
        c_smooth=c_smooth, c_smooth_displayed=c_smooth_displayed)
