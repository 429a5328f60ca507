import math
from fractions import Fraction as Q

import pytest

from convexdist.scalar import (
    Interval,
    SqrtSum,
    as_fraction,
    fraction_str,
    sqrt_enclosure,
    unit_ball_volume_interval,
)


def test_as_fraction_strings():
    assert as_fraction("3/4") == Q(3, 4)
    assert as_fraction("-7") == Q(-7)
    assert as_fraction(Q(2, 6)) == Q(1, 3)
    with pytest.raises(ValueError):
        as_fraction("1.5")


def test_fraction_str_roundtrip():
    for x in (Q(0), Q(-3), Q(22, 7), Q(-10, 4)):
        assert as_fraction(fraction_str(x)) == x


def test_sqrt_enclosure_certified():
    for x in (Q(2), Q(3, 7), Q(10**12, 7), Q(1, 10**9)):
        lo, hi = sqrt_enclosure(x, 64)
        assert lo * lo <= x <= hi * hi
        assert hi - lo <= Q(1, 2**60)


def test_sqrt_enclosure_exact_for_squares():
    assert sqrt_enclosure(Q(9, 4)) == (Q(3, 2), Q(3, 2))
    assert sqrt_enclosure(Q(0)) == (Q(0), Q(0))


def test_sqrtsum_algebra():
    s = SqrtSum.rational(2) + SqrtSum.sqrt_of(Q(2))
    sq = s * s
    assert sq == SqrtSum.rational(6) + SqrtSum.sqrt_of(Q(2)) * 4
    assert SqrtSum.sqrt_of(Q(8)) == SqrtSum.sqrt_of(Q(2)) * 2
    assert (SqrtSum.sqrt_of(Q(8)) - SqrtSum.sqrt_of(Q(2)) * 2).sign() == 0
    assert float(SqrtSum.sqrt_of(Q(2))) == pytest.approx(math.sqrt(2), abs=1e-15)


def test_sqrtsum_comparisons():
    assert SqrtSum.sqrt_of(Q(2)) + SqrtSum.sqrt_of(Q(3)) > SqrtSum.sqrt_of(Q(5))
    assert SqrtSum.sqrt_of(Q(2)) < Q(3, 2)
    assert SqrtSum.rational(Q(7, 3)).as_fraction() == Q(7, 3)
    with pytest.raises(ValueError):
        (SqrtSum.sqrt_of(Q(2))).as_fraction()


def test_interval_pi_and_ops():
    pi = Interval.pi()
    assert pi.lo < Q(355, 113) and pi.hi > Q(333, 106)
    assert float(pi.hi - pi.lo) < 1e-30
    prod = pi * Interval.sqrt(Q(2))
    assert prod.midpoint() == pytest.approx(math.pi * math.sqrt(2), abs=1e-14)
    assert prod.lo < prod.hi


def test_unit_ball_volumes():
    assert unit_ball_volume_interval(0).lo == 1
    assert unit_ball_volume_interval(1).lo == 2
    assert unit_ball_volume_interval(2).midpoint() == pytest.approx(math.pi, abs=1e-12)
    assert unit_ball_volume_interval(3).midpoint() == pytest.approx(4 * math.pi / 3, abs=1e-12)
    assert unit_ball_volume_interval(4).midpoint() == pytest.approx(math.pi**2 / 2, abs=1e-12)
