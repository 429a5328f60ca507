import math
from fractions import Fraction as Q

import pytest

from convexdist import (
    cap,
    cap_slice_family,
    circumscribed_ngon,
    convex_hull,
    dyadic_schedule,
    farthest_vertex_direction,
    fit_power_law,
    geometric_schedule,
    inscribed_ngon,
    max_sagitta,
    proxy_fit_window,
    scaling_family,
    slice_at,
    spherical_cap_volume,
    theoretical_constants,
    unit_cube,
    unit_square,
    vertex_cap_threshold,
)


def test_cap_examples(square):
    c = cap(square, (0, 1), Q(1, 2))
    assert c.body.volume() == Q(1, 2)
    c = cap(square, (1, 1), Q(1, 2))
    assert c.body.volume() == Q(1, 8)
    assert c.geometric_height == pytest.approx(0.5 / math.sqrt(2))
    c = cap(square, (1, 1), 0)
    assert c.body.volume() == 0 and c.body.vertices == ((Q(1), Q(1)),)
    assert cap(square, (1, 0), 5).body == square
    with pytest.raises(ValueError):
        cap(square, (0, 0), 1)
    with pytest.raises(ValueError):
        cap(square, (1, 0), -1)


def test_slice_examples(square, cube):
    s = slice_at(square, (1, 1), Q(1, 2))
    assert set(s.vertices) == {(Q(1, 2), Q(1)), (Q(1), Q(1, 2))}
    s0 = slice_at(square, (1, 1), 0)
    assert s0.vertices == ((Q(1), Q(1)),)
    s3 = slice_at(cube, (0, 0, 1), Q(1, 4))
    assert s3.idim == 2
    assert set(s3.vertices) == {
        (Q(a), Q(b), Q(3, 4)) for a in (0, 1) for b in (0, 1)}
    with pytest.raises(ValueError):
        slice_at(square, (1, 0), 2)


def test_cap_nesting(square):
    small = cap(square, (2, 3), Q(1, 5)).body
    big = cap(square, (2, 3), Q(2, 5)).body
    assert all(big.contains_point(v) for v in small.vertices)


def test_slice_inside_cap(square):
    c = cap(square, (1, 1), Q(1, 3)).body
    s = slice_at(square, (1, 1), Q(1, 3))
    assert all(c.contains_point(v) for v in s.vertices)


def test_pyramid_law(square, cube):
    # below the first vertex-crossing threshold the cap volume is A t^n
    d = (1, 1)
    assert vertex_cap_threshold(square, d) == 1
    t0 = Q(1, 4)
    A = cap(square, d, t0).body.volume() / t0**2
    assert A == Q(1, 2)
    for t in dyadic_schedule(t0, 8):
        assert cap(square, d, t).body.volume() == A * t * t
    d3 = (1, 1, 1)
    t0 = Q(1, 2)
    A3 = cap(cube, d3, t0).body.volume() / t0**3
    assert A3 == Q(1, 6)
    for t in dyadic_schedule(t0, 6):
        assert cap(cube, d3, t).body.volume() == A3 * t**3


def test_farthest_vertex_direction(square, cube):
    d, v = farthest_vertex_direction(square)
    assert d == (1, 1) and v == (Q(1), Q(1))
    d, v = farthest_vertex_direction(cube)
    assert d == (1, 1, 1)
    d, _ = farthest_vertex_direction(square, origin=(0, 0))
    assert d == (1, 1)


def test_cap_slice_family_flags(square):
    fam = cap_slice_family(square, (1, 1), dyadic_schedule(Q(1, 2), 8))
    assert len(fam) == 8
    for p in fam:
        assert p.checks["height"] and p.checks["volume_bound"]
        assert p.checks["dh_monotone"]
        assert p.dG == p.t * p.t / 2  # exact power law for the corner family
    with pytest.raises(ValueError):
        cap_slice_family(square, (1, 1), [Q(1, 4), Q(1, 2)])


def test_family_at_full_width_is_whole_body(square):
    # scaled height equal to the width: cap is all of G, slice the far face
    c = cap(square, (1, 0), 1)
    assert c.body == square
    s = slice_at(square, (1, 0), 1)
    assert set(s.vertices) == {(Q(0), Q(0)), (Q(0), Q(1))}


def test_scaling_family_closed_forms(square, cube):
    for G, n in ((square, 2), (cube, 3)):
        for origin in ("chebyshev", "vertex"):
            fam = scaling_family(G, [Q(1, 2), Q(3, 4)], origin=origin)
            for p in fam:
                assert p.checks["rho_closed_form"]
                assert p.checks["dh_closed_form"]
    fam = scaling_family(square, [Q(1, 2)], origin="vertex")
    assert fam[0].rhoG == Q(7, 4)
    assert fam[0].dH_sq == Q(1, 2)
    with pytest.raises(ValueError):
        scaling_family(square, [Q(3, 2)])


def test_scaling_family_superlinear_divergence(square):
    # rho / dH^1.5 grows without bound along r -> 1 (dyadic 1 - r)
    fam = scaling_family(square, [1 - Q(1, 2**k) for k in range(1, 10)])
    ratios = [float(p.rhoG) / p.dH**1.5 for p in fam]
    assert all(b > a for a, b in zip(ratios, ratios[1:]))
    # while rho / dH stays bounded (Lipschitz regime)
    lin = [float(p.rhoG) / p.dH for p in fam]
    assert max(lin) < 12  # n(n+1)MV1(G,B) for the unit square


def test_spherical_cap_closed_forms():
    assert spherical_cap_volume(2, 1, 1) == pytest.approx(math.pi / 2, abs=1e-12)
    assert spherical_cap_volume(3, 1, 1) == pytest.approx(2 * math.pi / 3, abs=1e-12)
    seg = spherical_cap_volume(2, 1, 1 - math.cos(math.pi / 4))
    assert seg == pytest.approx(math.pi / 4 - 0.5, abs=1e-12)
    # hemisphere identity at another radius: omega_n r^n / 2
    assert spherical_cap_volume(3, 2, 2) == pytest.approx(
        (4 * math.pi / 3) * 8 / 2, abs=1e-10)
    hs = [0.1, 0.3, 0.5, 0.8, 1.0]
    vols = [spherical_cap_volume(3, 1, h) for h in hs]
    assert all(b > a for a, b in zip(vols, vols[1:]))
    with pytest.raises(ValueError):
        spherical_cap_volume(2, 1, 1.5)


def test_constants_square(square):
    tc = theoretical_constants(square)
    assert tc.c_upper.as_fraction() == 12
    assert tc.c_lower_value == pytest.approx(2.0 ** (-4.5), rel=1e-9)
    assert tc.omega[1] == pytest.approx(2.0)
    assert tc.omega[2] == pytest.approx(math.pi)
    assert tc.r_lb == Q(1, 2)
    assert tc.diam == pytest.approx(math.sqrt(2))


def test_constants_homogeneity(square):
    big = theoretical_constants(square.scale(2))
    assert big.c_upper.as_fraction() == 24


def test_cone_lower_bound_sampled(square):
    # every cap holds at least c_lower * h^n of volume (numeric 1e-9 slack)
    tc = theoretical_constants(square)
    for d in ((1, 0), (1, 1), (2, 1), (-3, 4)):
        dd = math.sqrt(sum(c * c for c in d))
        for s in (Q(1, 8), Q(1, 2), Q(1)):
            body = cap(square, d, s).body
            h = float(s) / dd
            assert float(body.volume()) >= tc.c_lower_value * h**2 * (1 - 1e-9)


def test_smooth_constant_recomputed_vs_displayed():
    disk_proxy = inscribed_ngon(64)
    tc = theoretical_constants(disk_proxy, roll_radius=1.0)
    assert tc.c_smooth is not None
    # the recomputed constant lower-bounds true disk cap volumes ...
    for h in (0.01, 0.05, 0.2, 0.5, 0.9, 1.0):
        vol = spherical_cap_volume(2, 1.0, h)
        assert vol >= tc.c_smooth * h**1.5 * (1 - 1e-9)
    # ... while the displayed closed form does not (hence never asserted)
    violated = any(
        spherical_cap_volume(2, 1.0, h) < tc.c_smooth_displayed * h**1.5
        for h in (0.01, 0.05, 0.2, 0.5, 0.9, 1.0))
    assert violated


def test_proxy_windows():
    P = inscribed_ngon(256)
    lo, hi = proxy_fit_window(P)
    assert 0 < lo < hi == 0.25
    assert max_sagitta(P) == pytest.approx((2 * math.pi / 256) ** 2 / 8, rel=0.05)
    C = circumscribed_ngon(64)
    # every facet of the circumscribed polygon is at distance >= 1
    for u, c in C.facet_halfspaces():
        assert c * c >= sum(x * x for x in u)


def test_geometric_schedule():
    sched = geometric_schedule(Q(1, 100), Q(1, 2), 8)
    assert len(sched) == 8
    assert all(a > b for a, b in zip(sched, sched[1:]))
    assert sched[0] == Q(1, 2)
    with pytest.raises(ValueError):
        geometric_schedule(Q(1, 2), Q(1, 4), 8)
