"""Exact Minkowski sums and the volume polynomial t -> Vol(A + tB).

For full-dimensional sums in R^3 the facet structure is enumerated directly
from the classical normal-fan refinement: every facet normal of A + B is a
facet normal of A, a facet normal of B, or the cross product of an edge
direction of A with one of B.  Each candidate facet is the Minkowski sum of
the two support faces, a small planar polygon handled exactly in projection.

The same decomposition yields Vol(A + tB) symbolically: per facet the support
offset is linear in t and the projected face area is a quadratic (Minkowski's
theorem for planar bodies), so the volume is an exact cubic assembled from
three small evaluations.  The divergence identity Vol = (1/n) sum h_F Area_F
keeps everything rational.
"""

from __future__ import annotations

import math
from fractions import Fraction as Q

from .geometry import (
    EMPTY,
    Facet,
    InternalHullError,
    VPolytope,
    _add,
    _cross3,
    _dominant_axis,
    _dot,
    _hull2d,
    _lex_positive,
    _neg,
    _prim,
    _project_drop,
    _shoelace2,
    _sub,
)


def _common_grid(A: VPolytope, B: VPolytope):
    da, db = A.grid()[1], B.grid()[1]
    den = da * db // math.gcd(da, db)
    fa, fb = den // da, den // db
    iva = [tuple(c * fa for c in p) for p in A.grid()[0]]
    ivb = [tuple(c * fb for c in p) for p in B.grid()[0]]
    return iva, ivb, den


def _sum_normals(P: VPolytope):
    if P.idim == P.dim:
        return [f.normal for f in P.facets]
    if P.dim == 3 and P.idim == 2:
        u, _ = P.plane
        return [u, _neg(u)]
    return []


def _candidate_normals(A: VPolytope, B: VPolytope):
    cands = set(_sum_normals(A))
    cands.update(_sum_normals(B))
    for ea in A.edge_directions():
        for eb in B.edge_directions():
            u = _cross3(ea, eb)
            if any(u):
                u = _prim(u)
                cands.add(u)
                cands.add(_neg(u))
    return sorted(cands)


def _support_face(ipts, u):
    best = None
    face = []
    for p in ipts:
        v = _dot(u, p)
        if best is None or v > best:
            best = v
            face = [p]
        elif v == best:
            face.append(p)
    return best, face


def minkowski_sum(A: VPolytope, B: VPolytope) -> VPolytope:
    """Canonical Minkowski sum (hull of pairwise vertex sums), exact."""
    if A.is_empty or B.is_empty:
        raise ValueError("Minkowski sum of an empty body")
    if A.dim != B.dim:
        raise ValueError("ambient dimension mismatch")
    iva, ivb, den = _common_grid(A, B)
    if A.dim == 3 and (A.idim == 3 or B.idim == 3):
        try:
            return _sum3d_structured(A, B, iva, ivb, den)
        except InternalHullError:
            pass
    sums = sorted({_add(a, b) for a in iva for b in ivb})
    return VPolytope._from_grid(sums, den, A.dim)


def _sum3d_structured(A, B, iva, ivb, den) -> VPolytope:
    facets_pts = []
    for u in _candidate_normals(A, B):
        ha, fa = _support_face(iva, u)
        hb, fb = _support_face(ivb, u)
        if len(fa) == 1 and len(fb) == 1:
            continue
        k = _dominant_axis(u)
        proj = {}
        for a in fa:
            for b in fb:
                s = _add(a, b)
                proj[_project_drop(s, k)] = s
        hull = _hull2d(sorted(proj))
        if len(hull) < 3:
            continue
        cyc = [proj[q] for q in hull]
        if u[k] < 0:
            cyc.reverse()
        facets_pts.append((u, ha + hb, cyc))

    verts = sorted({p for _, _, cyc in facets_pts for p in cyc})
    if len(verts) < 4:
        raise InternalHullError("sum structure degenerate")
    index = {p: i for i, p in enumerate(verts)}
    facets = []
    edge_count: dict = {}
    for (u, c, cyc) in facets_pts:
        idx = [index[p] for p in cyc]
        start = idx.index(min(idx))
        idx = idx[start:] + idx[:start]
        facets.append(Facet(u, c, tuple(idx)))
        for a, b in zip(idx, idx[1:] + idx[:1]):
            e = (a, b) if a < b else (b, a)
            edge_count[e] = edge_count.get(e, 0) + 1
    if any(cnt != 2 for cnt in edge_count.values()):
        raise InternalHullError("sum facets do not pair up along edges")
    if len(verts) - len(edge_count) + len(facets) != 2:
        raise InternalHullError("sum Euler audit failed")
    facets.sort(key=lambda f: (f.normal, f.offset))

    g = den
    for p in verts:
        for c in p:
            g = math.gcd(g, abs(c))
        if g == 1:
            break
    if g > 1:
        verts = [tuple(c // g for c in p) for p in verts]
        den //= g
        facets = [Facet(f.normal, _dot(f.normal, verts[f.cycle[0]]), f.cycle)
                  for f in facets]

    return VPolytope(dim=3, idim=3, den=den, iv=tuple(verts),
                     facets=tuple(facets), edges=tuple(sorted(edge_count)),
                     cycle=None, plane=None)


def volume_of_sum(A: VPolytope, B: VPolytope) -> Q:
    """Exact Vol(A + B)."""
    return polyval(volume_polynomial(A, B), Q(1))


def polyval(coeffs, t: Q) -> Q:
    acc = Q(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def volume_polynomial(A: VPolytope, B: VPolytope) -> tuple[Q, ...]:
    """Coefficients (degree 0..n) of the exact polynomial t -> Vol(A + tB)."""
    if A.dim != B.dim:
        raise ValueError("ambient dimension mismatch")
    n = A.dim
    if n == 2:
        va = A.volume()
        vb = B.volume()
        vab = minkowski_sum(A, B).volume()
        return (va, vab - va - vb, vb)
    return _volume_polynomial3(A, B)


def _volume_polynomial3(A: VPolytope, B: VPolytope) -> tuple[Q, ...]:
    iva, ivb, den = _common_grid(A, B)
    acc = [Q(0), Q(0), Q(0), Q(0)]
    for u in _candidate_normals(A, B):
        ha, fa = _support_face(iva, u)
        hb, fb = _support_face(ivb, u)
        if len(fa) == 1 and len(fb) == 1:
            continue
        k = _dominant_axis(u)
        pa = sorted({_project_drop(p, k) for p in fa})
        pb = sorted({_project_drop(p, k) for p in fb})
        areas = []
        for t in (0, 1, 2):
            if t == 0:
                pts = pa
            else:
                pts = sorted({(a[0] + t * b[0], a[1] + t * b[1])
                              for a in pa for b in pb})
            hull = _hull2d(pts)
            areas.append(abs(_shoelace2(hull)) if len(hull) >= 3 else 0)
        s0, s1, s2 = areas
        if s0 == 0 and s1 == 0 and s2 == 0:
            continue
        q0 = Q(s0)
        q1 = Q(4 * s1 - s2 - 3 * s0, 2)
        q2 = Q(s2 - 2 * s1 + s0, 2)
        w = Q(1, abs(u[k]))
        acc[0] += ha * q0 * w
        acc[1] += (ha * q1 + hb * q0) * w
        acc[2] += (ha * q2 + hb * q1) * w
        acc[3] += hb * q2 * w
    scale = 6 * den**3
    coeffs = tuple(c / scale for c in acc)
    if coeffs[0] != A.volume() or coeffs[3] != B.volume():
        raise InternalHullError("volume polynomial endpoint audit failed")
    return coeffs
