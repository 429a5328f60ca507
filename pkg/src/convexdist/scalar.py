"""Exact scalar arithmetic: rationals, certified square-root enclosures, and
small symbolic sums of square roots.

Every geometric quantity in the exact kernel is a ``fractions.Fraction``
(arbitrary precision, always in lowest terms).  Distance-like quantities are
irrational in general; they are carried as exact squares plus certified
rational enclosures, so that every inequality the package asserts can be
decided without floating-point trust.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

Q = Fraction

# pi to 40 digits; the enclosure below brackets the true value.
_PI_DIGITS = 3141592653589793238462643383279502884197
_PI_LO = Q(_PI_DIGITS, 10**39)
_PI_HI = Q(_PI_DIGITS + 1, 10**39)


def as_fraction(x) -> Q:
    """Coerce ints, Fractions and 'p/q' strings to an exact rational."""
    if isinstance(x, Q):
        return x
    if isinstance(x, int):
        return Q(x)
    if isinstance(x, str):
        s = x.strip()
        if "." in s or "e" in s or "E" in s:
            raise ValueError(f"rational strings must be decimal-free: {x!r}")
        if "/" in s:
            num, den = s.split("/")
            return Q(int(num), int(den))
        return Q(int(s))
    raise TypeError(f"cannot interpret {type(x).__name__} as an exact rational")


def fraction_str(x: Q) -> str:
    """Serialize a rational as 'p' or 'p/q' (decimal-free, bit-exact)."""
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def sqrt_enclosure(x: Q, bits: int = 64) -> tuple[Q, Q]:
    """Certified rational bracket lo <= sqrt(x) <= hi with hi-lo <= 2^-bits * scale.

    sqrt(a/b) = isqrt(a*b*4^k)/(b*2^k) up to one ulp of the scaled integer
    square root, so both bounds are exact consequences of integer arithmetic.
    """
    x = Q(x)
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return (Q(0), Q(0))
    a, b = x.numerator, x.denominator
    ab = a * b << (2 * bits)
    s = math.isqrt(ab)
    den = b << bits
    lo = Q(s, den)
    if s * s == ab:
        return (lo, lo)
    return (lo, Q(s + 1, den))


def sqrt_lower(x: Q, bits: int = 64) -> Q:
    return sqrt_enclosure(x, bits)[0]


def sqrt_upper(x: Q, bits: int = 64) -> Q:
    return sqrt_enclosure(x, bits)[1]


@dataclass(frozen=True)
class Interval:
    """Closed rational interval certified to contain a real value."""

    lo: Q
    hi: Q

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("inverted interval")

    @staticmethod
    def exact(x) -> "Interval":
        x = as_fraction(x) if not isinstance(x, Q) else x
        return Interval(x, x)

    @staticmethod
    def pi() -> "Interval":
        return Interval(_PI_LO, _PI_HI)

    @staticmethod
    def sqrt(x: Q, bits: int = 64) -> "Interval":
        lo, hi = sqrt_enclosure(x, bits)
        return Interval(lo, hi)

    def __add__(self, other: "Interval") -> "Interval":
        other = _coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other: "Interval") -> "Interval":
        other = _coerce(other)
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        other = _coerce(other)
        cands = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
        return Interval(min(cands), max(cands))

    __rmul__ = __mul__

    def __truediv__(self, other: "Interval") -> "Interval":
        other = _coerce(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval divisor straddles zero")
        cands = (self.lo / other.lo, self.lo / other.hi,
                 self.hi / other.lo, self.hi / other.hi)
        return Interval(min(cands), max(cands))

    def __pow__(self, k: int) -> "Interval":
        out = Interval(Q(1), Q(1))
        base = self
        if k < 0:
            raise ValueError("negative interval powers unsupported")
        for _ in range(k):
            out = out * base
        return out

    def midpoint(self) -> float:
        return float((self.lo + self.hi) / 2)

    def certainly_le(self, other: "Interval") -> bool:
        return self.hi <= _coerce(other).lo

    def certainly_ge(self, other: "Interval") -> bool:
        return self.lo >= _coerce(other).hi


def _coerce(x) -> Interval:
    if isinstance(x, Interval):
        return x
    if isinstance(x, (int, Fraction)):
        return Interval.exact(Q(x))
    raise TypeError(f"cannot coerce {type(x).__name__} to Interval")


def _split_square(m: int) -> tuple[int, int]:
    """Write m = s^2 * r with r as small as trial division up to 10^4 finds."""
    if m == 0:
        return 0, 1
    s = 1
    d = 2
    while d * d <= m and d < 10**4:
        dd = d * d
        while m % dd == 0:
            m //= dd
            s *= d
        d += 1
    r = math.isqrt(m)
    if r * r == m:
        return s * r, 1
    return s, m


class SqrtSum:
    """Exact finite sum  sum_i c_i * sqrt(m_i)  with rational c_i, integer m_i >= 1.

    Radicands are kept square-reduced by trial division, which suffices for the
    small edge-length squares produced by the kernel.  Supports ring arithmetic
    and certified comparison against rationals and other SqrtSums.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Q] | None = None):
        clean: dict[int, Q] = {}
        if terms:
            for m, c in terms.items():
                if c == 0:
                    continue
                clean[m] = clean.get(m, Q(0)) + Q(c)
        self.terms = {m: c for m, c in clean.items() if c != 0}

    @staticmethod
    def rational(c) -> "SqrtSum":
        return SqrtSum({1: as_fraction(c) if not isinstance(c, Q) else c})

    @staticmethod
    def sqrt_of(x: Q) -> "SqrtSum":
        """Exact sqrt(x) for rational x >= 0: sqrt(a/b) = sqrt(ab)/b."""
        x = Q(x)
        if x < 0:
            raise ValueError("sqrt of negative rational")
        if x == 0:
            return SqrtSum()
        a, b = x.numerator, x.denominator
        s, r = _split_square(a * b)
        return SqrtSum({r: Q(s, b)})

    def __add__(self, other) -> "SqrtSum":
        other = self._co(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Q(0)) + c
        return SqrtSum(out)

    __radd__ = __add__

    def __neg__(self) -> "SqrtSum":
        return SqrtSum({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "SqrtSum":
        return self + (-self._co(other))

    def __rsub__(self, other) -> "SqrtSum":
        return self._co(other) + (-self)

    def __mul__(self, other) -> "SqrtSum":
        other = self._co(other)
        out: dict[int, Q] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                s, r = _split_square(m1 * m2)
                out[r] = out.get(r, Q(0)) + c1 * c2 * s
        return SqrtSum(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SqrtSum":
        if isinstance(other, (int, Fraction)):
            q = Q(other)
            return SqrtSum({m: c / q for m, c in self.terms.items()})
        raise TypeError("SqrtSum division only by rationals")

    @staticmethod
    def _co(x) -> "SqrtSum":
        if isinstance(x, SqrtSum):
            return x
        if isinstance(x, (int, Fraction)):
            return SqrtSum.rational(x)
        raise TypeError(f"cannot combine SqrtSum with {type(x).__name__}")

    @property
    def is_rational(self) -> bool:
        return all(m == 1 for m in self.terms)

    def as_fraction(self) -> Q:
        if not self.is_rational:
            raise ValueError(f"not rational: {self}")
        return self.terms.get(1, Q(0))

    def interval(self, bits: int = 96) -> Interval:
        lo = Q(0)
        hi = Q(0)
        for m, c in self.terms.items():
            slo, shi = sqrt_enclosure(Q(m), bits)
            if c >= 0:
                lo += c * slo
                hi += c * shi
            else:
                lo += c * shi
                hi += c * slo
        return Interval(lo, hi)

    def __float__(self) -> float:
        return self.interval(64).midpoint()

    def sign(self, max_bits: int = 4096) -> int:
        """Certified sign via enclosure refinement; exact 0 at symbolic zero."""
        if not self.terms:
            return 0
        bits = 96
        while bits <= max_bits:
            iv = self.interval(bits)
            if iv.lo > 0:
                return 1
            if iv.hi < 0:
                return -1
            bits *= 2
        raise ArithmeticError(f"sign of {self} undecided at {max_bits} bits")

    def __eq__(self, other) -> bool:
        try:
            other = self._co(other)
        except TypeError:
            return NotImplemented
        return (self - other).terms == {}

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __le__(self, other) -> bool:
        return (self - self._co(other)).sign() <= 0

    def __lt__(self, other) -> bool:
        return (self - self._co(other)).sign() < 0

    def __ge__(self, other) -> bool:
        return (self - self._co(other)).sign() >= 0

    def __gt__(self, other) -> bool:
        return (self - self._co(other)).sign() > 0

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            parts.append(fraction_str(c) if m == 1 else f"{fraction_str(c)}*sqrt({m})")
        return " + ".join(parts)


def unit_ball_volume_interval(k: int) -> Interval:
    """Volume of the unit k-ball as a certified interval: pi^(k/2)/Gamma(k/2+1)."""
    if k < 0:
        raise ValueError("dimension must be nonnegative")
    if k == 0:
        return Interval.exact(Q(1))
    pi = Interval.pi()
    if k % 2 == 0:
        h = k // 2
        return pi**h * Q(1, math.factorial(h))
    # odd k: 2^((k+1)/2) * pi^((k-1)/2) / k!!
    h = (k - 1) // 2
    dfact = 1
    for j in range(k, 0, -2):
        dfact *= j
    return pi**h * Q(2 ** (h + 1), dfact)


def unit_ball_volumes(n: int) -> tuple[float, ...]:
    """Float table of unit k-ball volumes for k = 0..n."""
    return tuple(unit_ball_volume_interval(k).midpoint() for k in range(n + 1))
