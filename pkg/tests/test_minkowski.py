from fractions import Fraction as Q

import numpy as np
import pytest

from convexdist import (
    VPolytope,
    convex_hull,
    minkowski_sum,
    random_body_in,
    unit_cube,
    unit_square,
    volume_of_sum,
    volume_polynomial,
)
from convexdist.minkowski import polyval


def _pairwise_hull(A, B):
    return convex_hull(
        [tuple(a + b for a, b in zip(v, w))
         for v in A.vertices for w in B.vertices], A.dim)


def test_translation_by_point(square):
    pt = convex_hull([(Q(1, 3), Q(2, 3))])
    moved = minkowski_sum(square, pt)
    assert moved == square.translate((Q(1, 3), Q(2, 3)))
    assert moved.volume() == 1


def test_square_plus_segment(square):
    hseg = convex_hull([(0, 0), (1, 0)])
    rect = minkowski_sum(square, hseg)
    assert rect.volume() == 2
    dseg = convex_hull([(0, 0), (1, 1)])
    hexagon = minkowski_sum(square, dseg)
    assert hexagon.volume() == 3
    assert hexagon.nvertices == 6
    assert set(hexagon.vertices) == {
        (Q(0), Q(0)), (Q(1), Q(0)), (Q(0), Q(1)),
        (Q(2), Q(1)), (Q(1), Q(2)), (Q(2), Q(2))}


def test_cube_plus_cube(cube):
    s = minkowski_sum(cube, cube)
    assert s == cube.scale(2)
    assert s.volume() == 8


def test_sum_commutes_and_associates(square, cube, rng):
    for G in (square, cube):
        for _ in range(6):
            A = random_body_in(G, rng, 3, 6, den=16)
            B = random_body_in(G, rng, 3, 6, den=16)
            C = random_body_in(G, rng, 3, 6, den=16)
            assert minkowski_sum(A, B) == minkowski_sum(B, A)
            assert minkowski_sum(minkowski_sum(A, B), C) == \
                minkowski_sum(A, minkowski_sum(B, C))


def test_structured_sum_matches_pairwise_hull(cube, rng):
    seg = convex_hull([(0, 0, 0), (Q(1, 3), Q(1, 5), Q(1, 2))])
    tri = convex_hull([(0, 0, 0), (1, 0, Q(1, 2)), (0, 1, 0)])
    bodies = [cube, seg, tri,
              random_body_in(cube, rng, 4, 8, den=16),
              random_body_in(cube, rng, 4, 8, den=16)]
    for A in bodies:
        for B in bodies:
            assert minkowski_sum(A, B) == _pairwise_hull(A, B)


def test_volume_polynomial_matches_hulls(cube, rng):
    for _ in range(4):
        K = random_body_in(cube, rng, 3, 7, den=16)
        coeffs = volume_polynomial(cube, K)
        for t in range(4):
            assert polyval(coeffs, Q(t)) == \
                minkowski_sum(cube, K.scale(t)).volume()


def test_volume_polynomial_2d(square):
    hseg = convex_hull([(0, 0), (1, 0)])
    assert volume_polynomial(square, hseg) == (1, 1, 0)
    assert volume_polynomial(square, square) == (1, 2, 1)
    assert volume_of_sum(square, square) == 4


def test_lower_dimensional_summands(cube):
    seg = convex_hull([(0, 0, 0), (1, 1, 1)])
    assert volume_polynomial(cube, seg) == (1, 3, 0, 0)
    pt = convex_hull([(5, 5, 5)])
    assert volume_polynomial(cube, pt) == (1, 0, 0, 0)
    # planar square summand: cube + t*face = [0,1+t]^2 x [0,1]
    face = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert volume_polynomial(cube, face) == (1, 2, 1, 0)


def test_support_additivity(square, cube, rng):
    for G in (square, cube):
        A = random_body_in(G, rng, 3, 8, den=16)
        B = random_body_in(G, rng, 3, 8, den=16)
        S = minkowski_sum(A, B)
        dirs = rng.integers(-5, 6, size=(20, G.dim))
        for d in dirs:
            if not d.any():
                continue
            d = tuple(int(c) for c in d)
            assert S.support(d) == A.support(d) + B.support(d)
