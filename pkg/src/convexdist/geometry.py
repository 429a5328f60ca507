"""Exact rational V-polytope kernel in ambient dimensions 2 and 3.

Bodies are canonical vertex representations: the stored vertices are exactly
the extreme points, together with the facet structure (supporting halfspaces
and ordered facet cycles).  Internally every body lives on an integer grid
(vertices times a common denominator), so all predicates reduce to integer
sign computations; rationals appear only at the API boundary.

Lower-dimensional bodies (points, segments, planar polygons in R^3) are
first-class citizens: they have volume zero, no surface measure, and full
support/nearest-point/clip behavior.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Sequence

from .scalar import SqrtSum, as_fraction, fraction_str

Point = tuple[Q, ...]


class KernelError(Exception):
    """Base class for exact-kernel failures."""


class DimensionError(KernelError):
    pass


class LowerDimensionalError(KernelError):
    pass


class EmptyBodyError(KernelError):
    pass


class InternalHullError(KernelError):
    """The hull structure failed a watertightness audit (should not happen)."""


@dataclass(frozen=True)
class Halfspace:
    """Closed halfspace {x : normal . x >= offset} with rational data."""

    normal: tuple[Q, ...]
    offset: Q

    def __post_init__(self):
        if all(v == 0 for v in self.normal):
            raise ValueError("halfspace normal must be nonzero")

    def value(self, x: Sequence[Q]) -> Q:
        return sum(n * xi for n, xi in zip(self.normal, x)) - self.offset

    def contains(self, x: Sequence[Q]) -> bool:
        return self.value(x) >= 0


@dataclass(frozen=True)
class Facet:
    """Supporting halfspace normal . x <= offset on the body's integer grid.

    ``normal`` is a primitive integer vector pointing outward; ``cycle`` lists
    vertex indices in counterclockwise order viewed from outside (for 2D
    bodies a facet is an edge and the cycle has two indices).
    """

    normal: tuple[int, ...]
    offset: int
    cycle: tuple[int, ...]


# ---------------------------------------------------------------------------
# integer vector helpers
# ---------------------------------------------------------------------------

def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _prim(v):
    g = 0
    for x in v:
        g = math.gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def _lex_positive(v):
    for x in v:
        if x > 0:
            return True
        if x < 0:
            return False
    return False


def _hull2d(pts: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Andrew's monotone chain with strict turns; pts must be sorted unique.

    Returns the extreme points in counterclockwise order starting at the
    lexicographically smallest; collinear interior points are dropped.
    """
    if len(pts) <= 2:
        return list(pts)
    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and _cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _shoelace2(cycle: Sequence[tuple[int, int]]) -> int:
    """Twice the signed area (positive for counterclockwise cycles)."""
    s = 0
    m = len(cycle)
    for i in range(m):
        a = cycle[i]
        b = cycle[(i + 1) % m]
        s += a[0] * b[1] - a[1] * b[0]
    return s


_PROJ_AXES = {0: (1, 2), 1: (2, 0), 2: (0, 1)}


def _dominant_axis(u) -> int:
    return max(range(len(u)), key=lambda k: abs(u[k]))


def _project_drop(p, k: int) -> tuple[int, int]:
    i, j = _PROJ_AXES[k]
    return (p[i], p[j])


def _planar_cycle(pts_on: list, u) -> list:
    """Order coplanar 3D integer points counterclockwise as seen from +u.

    Returns only the extreme points of the planar polygon (may have fewer
    than 3 entries when the set is a point or a segment).
    """
    k = _dominant_axis(u)
    proj = {}
    for p in pts_on:
        proj[_project_drop(p, k)] = p
    hull = _hull2d(sorted(proj))
    cycle = [proj[q] for q in hull]
    if u[k] < 0:
        cycle.reverse()
    return cycle


def _affine_rank(ipts: list, dim: int):
    """Affine rank of an integer point set plus a witness basis."""
    p0 = ipts[0]
    basis: list[tuple[int, ...]] = []
    for p in ipts[1:]:
        v = _sub(p, p0)
        if not any(v):
            continue
        if not basis:
            basis.append(v)
        elif len(basis) == 1:
            if dim == 2:
                if basis[0][0] * v[1] - basis[0][1] * v[0] != 0:
                    basis.append(v)
            else:
                if any(_cross3(basis[0], v)):
                    basis.append(v)
        elif len(basis) == 2 and dim == 3:
            if _dot(_cross3(basis[0], basis[1]), v) != 0:
                basis.append(v)
        if len(basis) == dim:
            break
    return len(basis), p0, basis


# ---------------------------------------------------------------------------
# full-dimensional 3D hull structure
# ---------------------------------------------------------------------------

def _orient3(a, b, c, d) -> int:
    v = _dot(_cross3(_sub(b, a), _sub(c, a)), _sub(d, a))
    return (v > 0) - (v < 0)


def _in_tetra_exact(a, b, c, d, p) -> bool:
    base = _orient3(a, b, c, d)
    if base == 0:
        return False
    for tri in ((a, b, c, p), (a, b, p, d), (a, p, c, d), (p, b, c, d)):
        s = _orient3(*tri)
        if s != 0 and s != base:
            return False
    return True


def _filter_interior3(ipts: list) -> list:
    """Drop points certified interior via a float hull + exact tetra tests.

    Sound by construction: a point is removed only when four retained points
    exactly contain it, so the surviving set is a superset of the extreme
    points.
    """
    import numpy as np
    from scipy.spatial import ConvexHull, Delaunay

    arr = np.array(ipts, dtype=float)
    try:
        hull = ConvexHull(arr)
        cand = sorted(set(int(i) for i in hull.vertices))
        tri = Delaunay(arr[cand])
    except Exception:
        return ipts
    keep = set(cand)
    others = [i for i in range(len(ipts)) if i not in keep]
    if not others:
        return [ipts[i] for i in cand]
    locs = tri.find_simplex(arr[others])
    for idx, loc in zip(others, locs):
        inside = False
        if loc >= 0:
            corners = [ipts[cand[v]] for v in tri.simplices[loc]]
            inside = _in_tetra_exact(*corners, ipts[idx])
        if not inside:
            keep.add(idx)
    return [ipts[i] for i in sorted(keep)]


def _build3d(ipts: list):
    """Facet structure of a full-dimensional hull by supporting-plane search.

    Enumerates candidate planes through point triples and keeps the exactly
    supporting ones; complete because every facet of a full-dimensional hull
    spans at least three input points.  Audited for watertightness.
    """
    if len(ipts) > 40:
        ipts = _filter_interior3(ipts)
    m = len(ipts)
    seen: set = set()
    outward: dict = {}
    for i in range(m - 2):
        pi = ipts[i]
        for j in range(i + 1, m - 1):
            vij = _sub(ipts[j], pi)
            for k in range(j + 1, m):
                u = _cross3(vij, _sub(ipts[k], pi))
                if not any(u):
                    continue
                u = _prim(u)
                c = _dot(u, pi)
                key = (u, c) if _lex_positive(u) else (_neg(u), -c)
                if key in seen:
                    continue
                seen.add(key)
                above = below = False
                for p in ipts:
                    d = _dot(u, p) - c
                    if d > 0:
                        above = True
                        if below:
                            break
                    elif d < 0:
                        below = True
                        if above:
                            break
                if above and below:
                    continue
                if not above:
                    outward[(u, c)] = None
                if not below:
                    outward[(_neg(u), -c)] = None

    facets_pts = []
    for (u, c) in outward:
        on = [p for p in ipts if _dot(u, p) == c]
        cyc = _planar_cycle(on, u)
        if len(cyc) >= 3:
            facets_pts.append((u, c, cyc))

    verts = sorted({p for _, _, cyc in facets_pts for p in cyc})
    index = {p: i for i, p in enumerate(verts)}
    facets = []
    for (u, c, cyc) in facets_pts:
        idx = [index[p] for p in cyc]
        start = idx.index(min(idx))
        idx = idx[start:] + idx[:start]
        facets.append(Facet(u, c, tuple(idx)))
    facets.sort(key=lambda f: (f.normal, f.offset))

    edge_count: dict = {}
    for f in facets:
        cyc = f.cycle
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            e = (a, b) if a < b else (b, a)
            edge_count[e] = edge_count.get(e, 0) + 1
    if any(cnt != 2 for cnt in edge_count.values()):
        raise InternalHullError("facet cycles do not pair up along edges")
    if len(verts) - len(edge_count) + len(facets) != 2:
        raise InternalHullError("Euler characteristic audit failed")
    return verts, tuple(facets), tuple(sorted(edge_count))


# ---------------------------------------------------------------------------
# the body type
# ---------------------------------------------------------------------------

class VPolytope:
    """Canonical compact convex body given by its extreme points.

    Immutable; safe to share across threads.  Construct via
    :meth:`from_points`.
    """

    __slots__ = ("dim", "idim", "_den", "_iv", "_facets", "_edges", "_cycle",
                 "_plane", "_verts_cache")

    def __init__(self, *, dim, idim, den, iv, facets, edges, cycle, plane):
        self.dim = dim
        self.idim = idim
        self._den = den
        self._iv = iv
        self._facets = facets
        self._edges = edges
        self._cycle = cycle
        self._plane = plane
        self._verts_cache = None

    is_empty = False

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_points(points: Iterable[Sequence], dim: int | None = None) -> "VPolytope":
        pts = [tuple(as_fraction(c) for c in p) for p in points]
        if not pts:
            raise ValueError("need at least one point")
        if dim is None:
            dim = len(pts[0])
        if dim not in (2, 3):
            raise DimensionError(
                f"exact kernel supports ambient dimension 2 or 3, got {dim}; "
                "use the estimator module for higher dimensions"
            )
        if any(len(p) != dim for p in pts):
            raise DimensionError("points of mixed dimension")
        den = 1
        for p in pts:
            for c in p:
                den = den * c.denominator // math.gcd(den, c.denominator)
        ipts = sorted({tuple(int(c * den) for c in p) for p in pts})
        return VPolytope._from_grid(ipts, den, dim)

    @staticmethod
    def _from_grid(ipts: list, den: int, dim: int) -> "VPolytope":
        rank, p0, basis = _affine_rank(ipts, dim)
        facets: tuple = ()
        edges: tuple = ()
        cycle = None
        plane = None

        if rank == 0:
            verts = [ipts[0]]
        elif rank == 1:
            d = _prim(basis[0])
            verts = sorted({min(ipts, key=lambda p: _dot(d, p)),
                            max(ipts, key=lambda p: _dot(d, p))})
            edges = ((0, 1),)
        elif dim == 2:
            verts_ccw = _hull2d(ipts)
            verts = sorted(verts_ccw)
            index = {p: i for i, p in enumerate(verts)}
            cyc = [index[p] for p in verts_ccw]
            start = cyc.index(min(cyc))
            cycle = tuple(cyc[start:] + cyc[:start])
            m = len(cycle)
            fs = []
            for t in range(m):
                a = verts[cycle[t]]
                b = verts[cycle[(t + 1) % m]]
                u = _prim((b[1] - a[1], a[0] - b[0]))
                fs.append(Facet(u, _dot(u, a), (cycle[t], cycle[(t + 1) % m])))
            facets = tuple(sorted(fs, key=lambda f: (f.normal, f.offset)))
            edges = tuple(sorted(
                (min(f.cycle), max(f.cycle)) for f in facets))
        elif rank == 2:
            u = _prim(_cross3(basis[0], basis[1]))
            if not _lex_positive(u):
                u = _neg(u)
            c = _dot(u, p0)
            cyc_pts = _planar_cycle(ipts, u)
            if len(cyc_pts) < 3:
                raise InternalHullError("rank-2 set with degenerate planar hull")
            verts = sorted(cyc_pts)
            index = {p: i for i, p in enumerate(verts)}
            cyc = [index[p] for p in cyc_pts]
            start = cyc.index(min(cyc))
            cycle = tuple(cyc[start:] + cyc[:start])
            plane = (u, c)
            edges = tuple(sorted(
                tuple(sorted((cycle[t], cycle[(t + 1) % len(cycle)])))
                for t in range(len(cycle))))
        else:
            verts, facets, edges = _build3d(ipts)

        g = den
        for p in verts:
            for c in p:
                g = math.gcd(g, abs(c))
            if g == 1:
                break
        if g > 1:
            verts = [tuple(c // g for c in p) for p in verts]
            den //= g
            # facet/plane offsets live on the vertex grid: recompute them
            facets = tuple(
                Facet(f.normal, _dot(f.normal, verts[f.cycle[0]]), f.cycle)
                for f in facets
            )
            if plane is not None:
                plane = (plane[0], _dot(plane[0], verts[cycle[0]]))

        return VPolytope(dim=dim, idim=rank, den=den, iv=tuple(verts),
                         facets=facets, edges=edges, cycle=cycle, plane=plane)

    # -- identity ----------------------------------------------------------

    def _key(self):
        return (self.dim, self._den, self._iv)

    def __eq__(self, other):
        return isinstance(other, VPolytope) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"VPolytope(dim={self.dim}, idim={self.idim}, "
                f"nverts={len(self._iv)})")

    # -- basic accessors ----------------------------------------------------

    @property
    def vertices(self) -> tuple[Point, ...]:
        if self._verts_cache is None:
            d = self._den
            self._verts_cache = tuple(
                tuple(Q(c, d) for c in p) for p in self._iv)
        return self._verts_cache

    @property
    def nvertices(self) -> int:
        return len(self._iv)

    def grid(self):
        """(integer vertices, denominator): vertices == grid points / den."""
        return self._iv, self._den

    def facet_halfspaces(self) -> tuple[tuple[tuple[int, ...], Q], ...]:
        """Outward facet data (u, c) with the body equal to {x : u.x <= c}."""
        if self.idim < self.dim:
            raise LowerDimensionalError("lower-dimensional body has no facets")
        return tuple((f.normal, Q(f.offset, self._den)) for f in self._facets)

    @property
    def facets(self) -> tuple[Facet, ...]:
        return self._facets

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def cycle(self):
        return self._cycle

    @property
    def plane(self):
        """(normal, offset) on the grid for planar bodies in R^3."""
        return self._plane

    def edge_directions(self) -> tuple[tuple[int, ...], ...]:
        """Primitive edge directions, deduplicated up to sign."""
        out = set()
        for i, j in self._edges:
            v = _prim(_sub(self._iv[j], self._iv[i]))
            if not _lex_positive(v):
                v = _neg(v)
            out.add(v)
        return tuple(sorted(out))

    def bbox(self) -> tuple[Point, Point]:
        den = self._den
        lo = tuple(Q(min(p[k] for p in self._iv), den) for k in range(self.dim))
        hi = tuple(Q(max(p[k] for p in self._iv), den) for k in range(self.dim))
        return lo, hi

    # -- measures ------------------------------------------------------------

    def volume(self) -> Q:
        """Exact n-dimensional Lebesgue measure (zero when lower-dimensional)."""
        if self.idim < self.dim:
            return Q(0)
        if self.dim == 2:
            cyc = [self._iv[i] for i in self._cycle]
            return Q(_shoelace2(cyc), 2 * self._den**2)
        total = Q(0)
        for f in self._facets:
            k = _dominant_axis(f.normal)
            proj = [_project_drop(self._iv[i], k) for i in f.cycle]
            total += Q(f.offset * _shoelace2(proj), f.normal[k])
        return total / (6 * self._den**3)

    def surface_measure(self) -> SqrtSum:
        """Exact boundary measure: perimeter in 2D, facet-area sum in 3D."""
        if self.idim < self.dim:
            raise LowerDimensionalError(
                "surface measure requires a full-dimensional body")
        if self.dim == 2:
            total = SqrtSum()
            cyc = [self._iv[i] for i in self._cycle]
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                v = _sub(b, a)
                total = total + SqrtSum.sqrt_of(Q(_dot(v, v), self._den**2))
            return total
        total = SqrtSum()
        for f in self._facets:
            s = (0, 0, 0)
            cyc = [self._iv[i] for i in f.cycle]
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                s = _add(s, _cross3(a, b))
            total = total + SqrtSum.sqrt_of(Q(_dot(s, s), 4 * self._den**4))
        return total

    def support(self, d: Sequence) -> Q:
        """Support value max d.x over the body; positively homogeneous in d."""
        dq = tuple(as_fraction(c) for c in d)
        if all(c == 0 for c in dq):
            raise ValueError("support direction must be nonzero")
        return max(_dot(dq, v) for v in self.vertices)

    def support_argmax(self, d: Sequence) -> tuple[int, ...]:
        dq = tuple(as_fraction(c) for c in d)
        vals = [_dot(dq, v) for v in self.vertices]
        m = max(vals)
        return tuple(i for i, v in enumerate(vals) if v == m)

    def diameter_sq(self) -> Q:
        """Exact squared diameter (max pairwise squared vertex distance)."""
        best = 0
        for a, b in itertools.combinations(self._iv, 2):
            v = _sub(a, b)
            d2 = _dot(v, v)
            if d2 > best:
                best = d2
        return Q(best, self._den**2)

    # -- membership ----------------------------------------------------------

    def contains_point(self, x: Sequence) -> bool:
        xq = tuple(as_fraction(c) for c in x)
        if len(xq) != self.dim:
            raise DimensionError("point dimension mismatch")
        den = self._den
        if self.idim == self.dim:
            # integer grid common to the body and the query point
            xd = 1
            for c in xq:
                xd = xd * c.denominator // math.gcd(xd, c.denominator)
            common = den * xd // math.gcd(den, xd)
            fx = common // xd
            fb = common // den
            xi = tuple(int(c * xd) * fx for c in xq)
            return all(_dot(g.normal, xi) <= g.offset * fb
                       for g in self._facets)
        if self.idim == 0:
            return xq == self.vertices[0]
        if self.idim == 1:
            a, b = self.vertices
            d = _sub(b, a)
            w = _sub(xq, a)
            # collinear and within the segment
            if self.dim == 2:
                if d[0] * w[1] - d[1] * w[0] != 0:
                    return False
            else:
                if any(_cross3(d, w)):
                    return False
            t = _dot(w, d)
            return 0 <= t <= _dot(d, d)
        # planar polygon in R^3
        u, c = self._plane
        if _dot(u, xq) != Q(c, den):
            return False
        cyc = [self.vertices[i] for i in self._cycle]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if _dot(_cross3(_sub(b, a), _sub(xq, a)), u) < 0:
                return False
        return True

    def contains_body(self, other: "VPolytope") -> bool:
        return all(self.contains_point(v) for v in other.vertices)

    # -- transforms ----------------------------------------------------------

    def translate(self, v: Sequence) -> "VPolytope":
        vq = tuple(as_fraction(c) for c in v)
        return VPolytope.from_points(
            [_add(p, vq) for p in self.vertices], self.dim)

    def scale(self, t) -> "VPolytope":
        tq = as_fraction(t)
        if tq < 0:
            raise ValueError("scale factor must be nonnegative")
        if tq == 0:
            return VPolytope.from_points([(Q(0),) * self.dim], self.dim)
        return VPolytope.from_points(
            [tuple(tq * c for c in p) for p in self.vertices], self.dim)

    # -- clipping ------------------------------------------------------------

    def clip(self, hs: Halfspace):
        """Exact intersection with {x : normal.x >= offset}; EMPTY if void."""
        if len(hs.normal) != self.dim:
            raise DimensionError("halfspace dimension mismatch")
        verts = self.vertices
        vals = [hs.value(v) for v in verts]
        if all(s >= 0 for s in vals):
            return self
        inside = [verts[i] for i, s in enumerate(vals) if s >= 0]
        pts = list(inside)
        for i, j in self._edges or self._implicit_edges():
            si, sj = vals[i], vals[j]
            if (si > 0 > sj) or (sj > 0 > si):
                t = si / (si - sj)
                a, b = verts[i], verts[j]
                pts.append(tuple(ac + t * (bc - ac) for ac, bc in zip(a, b)))
        if not pts:
            return EMPTY
        return VPolytope.from_points(pts, self.dim)

    def slice_with(self, normal: Sequence, offset) -> "VPolytope":
        """Exact section {x in body : normal.x == offset}; EMPTY if void."""
        nq = tuple(as_fraction(c) for c in normal)
        cq = as_fraction(offset)
        verts = self.vertices
        vals = [_dot(nq, v) - cq for v in verts]
        pts = [verts[i] for i, s in enumerate(vals) if s == 0]
        for i, j in self._edges or self._implicit_edges():
            si, sj = vals[i], vals[j]
            if (si > 0 > sj) or (sj > 0 > si):
                t = si / (si - sj)
                a, b = verts[i], verts[j]
                pts.append(tuple(ac + t * (bc - ac) for ac, bc in zip(a, b)))
        if not pts:
            return EMPTY
        return VPolytope.from_points(pts, self.dim)

    def _implicit_edges(self):
        if self.idim <= 0:
            return ()
        raise InternalHullError("missing edge structure")

    # -- nearest point / inradius --------------------------------------------

    def nearest_point(self, x: Sequence) -> tuple[Point, Q]:
        """Exact closest point of the body to x and the squared distance."""
        xq = tuple(as_fraction(c) for c in x)
        if len(xq) != self.dim:
            raise DimensionError("point dimension mismatch")
        if self.contains_point(xq):
            return xq, Q(0)
        best_d2 = None
        best_pt = None
        for v in self.vertices:
            w = _sub(xq, v)
            d2 = _dot(w, w)
            if best_d2 is None or d2 < best_d2:
                best_d2, best_pt = d2, v
        for i, j in self._edges:
            a = self.vertices[i]
            b = self.vertices[j]
            d = _sub(b, a)
            t = _dot(_sub(xq, a), d)
            dd = _dot(d, d)
            if 0 < t < dd:
                y = tuple(ac + Q(t, 1) / dd * dc for ac, dc in zip(a, d))
                w = _sub(xq, y)
                d2 = _dot(w, w)
                if d2 < best_d2:
                    best_d2, best_pt = d2, y
        if self.dim == 3 and self.idim == 3:
            for f in self._facets:
                u = f.normal
                c = Q(f.offset, self._den)
                g = _dot(u, xq) - c
                uu = _dot(u, u)
                y = tuple(xc - g * uc / uu for xc, uc in zip(xq, u))
                if self._point_in_facet(y, f):
                    d2 = g * g / uu
                    if d2 < best_d2:
                        best_d2, best_pt = d2, y
        elif self.dim == 3 and self.idim == 2:
            u, ci = self._plane
            c = Q(ci, self._den)
            g = _dot(u, xq) - c
            uu = _dot(u, u)
            y = tuple(xc - g * uc / uu for xc, uc in zip(xq, u))
            if self.contains_point(y):
                d2 = g * g / uu
                if d2 < best_d2:
                    best_d2, best_pt = d2, y
        return best_pt, best_d2

    def _point_in_facet(self, y: Point, f: Facet) -> bool:
        cyc = [self.vertices[i] for i in f.cycle]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if _dot(_cross3(_sub(b, a), _sub(y, a)), f.normal) < 0:
                return False
        return True

    def inradius(self, rel_tol: Q = Q(1, 10**9)) -> "InradiusResult":
        """Chebyshev inradius via exact LP with certified norm brackets.

        The returned lower bound is exact whenever all facet normals have
        rational norms; otherwise (lb, ub) bracket the true inradius with
        (ub - lb)/ub <= rel_tol.
        """
        from . import lp
        from .scalar import sqrt_enclosure

        if self.idim < self.dim:
            raise LowerDimensionalError("inradius requires full dimension")
        n = self.dim
        lo, _ = self.bbox()
        rows = [(f.normal, Q(f.offset, self._den) - _dot(f.normal, lo))
                for f in self._facets]
        bits = 48
        while True:
            A_lb, A_ub = [], []
            for u, _ in rows:
                nl, nu = sqrt_enclosure(Q(_dot(u, u)), bits)
                A_ub.append(list(u) + [nu])
                A_lb.append(list(u) + [nl])
            b = [c for _, c in rows]
            obj = [Q(0)] * n + [Q(1)]
            res_lb = lp.solve_lp(obj, A_ub=A_ub, b_ub=b)
            res_ub = lp.solve_lp(obj, A_ub=A_lb, b_ub=b)
            if res_lb.status != lp.OPTIMAL or res_ub.status != lp.OPTIMAL:
                raise InternalHullError("inradius LP failed")
            r_lb, r_ub = res_lb.value, res_ub.value
            if r_ub == r_lb or (r_ub - r_lb) <= rel_tol * r_ub:
                center = tuple(xc + lc for xc, lc in zip(res_lb.x[:n], lo))
                return InradiusResult(r_lb, r_ub, center, float(r_lb))
            bits *= 2


@dataclass(frozen=True)
class InradiusResult:
    radius_lb: Q
    radius_ub: Q
    center: Point
    value: float


class _EmptyPolytope:
    """Tagged empty intersection result; rejected by downstream operations."""

    is_empty = True
    idim = -1

    def __repr__(self):
        return "EMPTY"

    def _reject(self, *a, **k):
        raise EmptyBodyError("operation on empty polytope")

    volume = surface_measure = support = clip = _reject
    nearest_point = contains_point = translate = scale = _reject

    @property
    def vertices(self):
        raise EmptyBodyError("empty polytope has no vertices")


EMPTY = _EmptyPolytope()


# ---------------------------------------------------------------------------
# convex hull / Hausdorff module-level operations
# ---------------------------------------------------------------------------

def convex_hull(points: Iterable[Sequence], dim: int | None = None) -> VPolytope:
    """Canonical hull of rational points (the VPolytope constructor)."""
    return VPolytope.from_points(points, dim)


def join(K: VPolytope, L: VPolytope) -> VPolytope:
    """Closed convex hull of the union of two bodies."""
    if K.dim != L.dim:
        raise DimensionError("ambient dimension mismatch")
    return VPolytope.from_points(K.vertices + L.vertices, K.dim)


@dataclass(frozen=True)
class HausdorffWitness:
    """Exact Hausdorff distance with attaining pair and support halfspace.

    ``p`` lies in K and ``q`` in L with |q - p|^2 == value_sq.  ``support``
    is orthogonal to [p, q] and contains the body named by ``side`` (the
    body the supremum was taken against).
    """

    value_sq: Q
    value: float
    p: Point
    q: Point
    support: Halfspace | None
    side: str

    def __float__(self):
        return self.value


def hausdorff(K: VPolytope, L: VPolytope) -> HausdorffWitness:
    """Exact Hausdorff distance between two bodies.

    d(., other) is convex, hence maximized at extreme points, so scanning
    vertices of each body against the other's exact nearest-point map is
    complete.
    """
    if K.dim != L.dim:
        raise DimensionError("ambient dimension mismatch")
    best = (Q(-1), None, None, "K")
    for q in L.vertices:
        p, d2 = K.nearest_point(q)
        if d2 > best[0]:
            best = (d2, p, q, "K")
    for p in K.vertices:
        q, d2 = L.nearest_point(p)
        if d2 > best[0]:
            best = (d2, p, q, "L")
    d2, p, q, side = best
    if d2 == 0:
        return HausdorffWitness(Q(0), 0.0, p, q, None, side)
    if side == "K":
        # farthest point q in L, nearest p in K; plane through p contains K
        normal = _sub(p, q)
        support = Halfspace(normal, _dot(normal, p))
    else:
        normal = _sub(q, p)
        support = Halfspace(normal, _dot(normal, q))
    return HausdorffWitness(d2, math.sqrt(float(d2)), p, q, support, side)
