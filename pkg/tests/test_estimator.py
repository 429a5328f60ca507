import math
from fractions import Fraction as Q

import numpy as np
import pytest

from convexdist import (
    BallOracle,
    BoxOracle,
    hyperbox,
    mc_mixed_distance,
    mc_volume,
    mc_volume_distance,
    member_minkowski,
    minkowski_sum,
    mixed_distance,
    random_body_in,
    unit_square,
    volume_distance,
)
from convexdist.estimator import HalfspaceOracle, MinkowskiSumOracle, _is_box


def test_member_vertex_sums(square, rng):
    K = random_body_in(square, rng, 4, 8)
    for v in square.vertices[:2]:
        for w in K.vertices[:2]:
            x = tuple(a + b for a, b in zip(v, w))
            member, exact = member_minkowski(x, square, K)
            assert member and exact


def test_member_outside_bbox(square):
    member, _ = member_minkowski((10, 10), square, square)
    assert not member


def test_member_agrees_with_exact_hull(square, rng):
    # LP feasibility versus the canonical sum's facet test
    K = random_body_in(square, rng, 3, 6, den=16)
    S = minkowski_sum(square, K)
    lo, hi = S.bbox()
    for _ in range(300):
        x = tuple(Q(int(rng.integers(int(l * 8) - 2, int(h * 8) + 3)), 8)
                  for l, h in zip(lo, hi))
        member, exact = member_minkowski(x, square, K)
        assert exact
        assert member == S.contains_point(x)


def test_member_float_fallback(square):
    fine = inscribed = None
    from convexdist import inscribed_ngon
    P = inscribed_ngon(128)  # 128 + 128 > exact_limit
    member, exact = member_minkowski((0, 0), P, P)
    assert member and not exact


def test_mc_volume_all_hits(square):
    est = mc_volume(HalfspaceOracle.from_polytope(square),
                    ([0, 0], [1, 1]), 2000, seed=4)
    assert est.mean == 1.0 and est.ci95_halfwidth == 0.0


def test_mc_volume_disk():
    est = mc_volume(BallOracle([0, 0], 1.0), ([-1, -1], [1, 1]),
                    200000, seed=8)
    assert abs(est.mean - math.pi) <= 3 * est.ci95_halfwidth


def test_mc_volume_validation():
    with pytest.raises(ValueError):
        mc_volume(BoxOracle([0], [1]), ([0], [1]), 10, seed=0)
    with pytest.raises(ValueError):
        mc_volume(BoxOracle([0, 0], [1, 1]), ([0, 0], [0, 1]), 2000, seed=0)


def test_four_cube_sum():
    G = hyperbox([0] * 4, [1] * 4)
    est = mc_volume_distance(G, G, G, 50000, seed=3)
    # rho(G, G) = 0; each part equals Vol(G+G) = 16 in expectation
    assert est.value == 0.0
    part = est.parts["G+K"]
    assert abs(part.mean - 16.0) <= 3 * part.ci95_halfwidth


def test_crn_zero_for_identical_bodies(square):
    for seed in (0, 1, 99):
        est = mc_volume_distance(square, square, square, 2000, seed=seed)
        assert est.value == 0.0 and est.ci95_halfwidth == 0.0


def test_seed_determinism(square, rng):
    K = random_body_in(square, rng)
    L = random_body_in(square, rng)
    a = mc_volume_distance(square, K, L, 30000, seed=12)
    b = mc_volume_distance(square, K, L, 30000, seed=12)
    assert a == b
    c = mc_volume_distance(square, K, L, 30000, seed=13)
    assert a != c


def test_hypercube_scaling_estimate():
    G = hyperbox([0] * 4, [1] * 4)
    L = G.scale(Q(1, 2))
    est = mc_volume_distance(G, G, L, 200000, seed=21)
    assert abs(est.value - 10.9375) <= 3 * est.ci95_halfwidth
    assert est.ci95_halfwidth < 0.2


def test_estimator_consistency_2d(square, rng):
    hits = 0
    for i in range(20):
        K = random_body_in(square, rng)
        L = random_body_in(square, rng)
        est = mc_volume_distance(square, K, L, 40000, seed=500 + i)
        exact = float(volume_distance(square, K, L))
        hits += abs(est.value - exact) <= 3 * est.ci95_halfwidth
    assert hits >= 19


def test_mc_mixed_distance_2d(square, rng):
    for i in range(3):
        K = random_body_in(square, rng)
        L = random_body_in(square, rng)
        est = mc_mixed_distance(square, K, L, 120000, seed=900 + i)
        exact = float(mixed_distance(square, K, L))
        assert abs(est.value - exact) <= 4 * est.ci95_halfwidth


def test_is_box():
    assert _is_box(hyperbox([0, 0], [1, 2]))
    assert _is_box(unit_square())
    from convexdist import unit_simplex
    assert not _is_box(unit_simplex(2))
    # extra non-extreme vertices do not defeat detection
    from convexdist.bodies import RawBody
    G = hyperbox([0] * 3, [1] * 3)
    extra = RawBody(3, G.vertices + ((Q(1, 2),) * 3,))
    assert _is_box(extra)


def test_minkowski_lp_oracle_matches_exact(square, rng):
    K = random_body_in(square, rng, 3, 5, den=8)
    S = minkowski_sum(square, K)
    oracle = MinkowskiSumOracle(square, K)
    pts = rng.uniform(-0.5, 2.5, size=(60, 2))
    got = oracle.contains_batch(pts)
    for x, m in zip(pts, got):
        xq = (Q(x[0]).limit_denominator(10**6), Q(x[1]).limit_denominator(10**6))
        assert m == S.contains_point(xq)
