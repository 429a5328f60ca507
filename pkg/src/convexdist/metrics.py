"""Mixed-volume quasi-metrics on the compact convex subsets of a reference body.

Two symmetric distance-like functionals are provided, both exact rationals on
polytope inputs:

* ``mixed_distance`` sums, over j = 1..n, the deficits
  2 MV_j(G, hull(K u L)) - MV_j(G, K) - MV_j(G, L);
* ``volume_distance`` is the single Minkowski-sum expression
  2 Vol(G + hull(K u L)) - Vol(G + K) - Vol(G + L).

They sandwich each other:  mixed <= volume <= binomial(n, floor(n/2)) * mixed,
which ``metric_report`` verifies exactly on every evaluated pair, together
with the explicit Lipschitz upper bound and power-n lower bound against the
Hausdorff distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

from .geometry import (
    HausdorffWitness,
    KernelError,
    VPolytope,
    hausdorff,
    join,
)
from .minkowski import polyval, volume_polynomial
from .scalar import Interval


class ContainmentError(KernelError):
    """K or L is not contained in the reference body."""


def sandwich_factor(n: int) -> int:
    return math.comb(n, n // 2)


def _require_inside(G: VPolytope, X: VPolytope, name: str) -> None:
    if not G.contains_body(X):
        raise ContainmentError(f"{name} is not contained in the reference body")


def _profiles(G: VPolytope, K: VPolytope, L: VPolytope):
    """Volume polynomials of G+tK, G+tL, G+tJ with J = hull(K u L)."""
    J = join(K, L)
    return volume_polynomial(G, K), volume_polynomial(G, L), \
        volume_polynomial(G, J), J


def _mixed_from_polys(pk, pl, pj, n: int) -> Q:
    total = Q(0)
    for j in range(1, n + 1):
        total += (2 * pj[j] - pk[j] - pl[j]) / Q(math.comb(n, j))
    return total


def mixed_distance(G: VPolytope, K: VPolytope, L: VPolytope) -> Q:
    """Exact mixed-volume distance between K and L relative to G."""
    _require_inside(G, K, "K")
    _require_inside(G, L, "L")
    pk, pl, pj, _ = _profiles(G, K, L)
    return _mixed_from_polys(pk, pl, pj, G.dim)


def volume_distance(G: VPolytope, K: VPolytope, L: VPolytope) -> Q:
    """Exact Minkowski-sum volume distance between K and L relative to G."""
    _require_inside(G, K, "K")
    _require_inside(G, L, "L")
    pk, pl, pj, _ = _profiles(G, K, L)
    return 2 * polyval(pj, Q(1)) - polyval(pk, Q(1)) - polyval(pl, Q(1))


def pair_distances(G: VPolytope, K: VPolytope, L: VPolytope) -> tuple[Q, Q]:
    """Both exact distances from a single profile computation."""
    _require_inside(G, K, "K")
    _require_inside(G, L, "L")
    pk, pl, pj, _ = _profiles(G, K, L)
    dG = _mixed_from_polys(pk, pl, pj, G.dim)
    rho = 2 * polyval(pj, Q(1)) - polyval(pk, Q(1)) - polyval(pl, Q(1))
    return dG, rho


@dataclass
class MetricReport:
    """Exact pair comparison, sandwich flags, and explicit-constant bounds."""

    n: int
    dG: Q
    rhoG: Q
    dH_sq: Q
    dH: float
    binom: int
    sandwich_ok: bool
    lipschitz_ok: bool
    power_lower_ok: bool
    witness: HausdorffWitness

    def ok(self) -> bool:
        return self.sandwich_ok and self.lipschitz_ok and self.power_lower_ok


def _check_upper(dG: Q, c_up_iv: Interval, dH_sq: Q) -> bool:
    """Certify dG <= c_up * sqrt(dH_sq) (1e-9 numeric rule if undecided)."""
    if dH_sq == 0:
        return dG == 0
    iv = c_up_iv * Interval.sqrt(dH_sq)
    if dG <= iv.lo:
        return True
    if dG > iv.hi:
        return False
    return float(dG) <= iv.midpoint() * (1 + 1e-9)


def _check_lower(dG: Q, c_low_iv: Interval, dH_sq: Q, n: int) -> bool:
    """Certify c_low * sqrt(dH_sq)^n <= dG (1e-9 numeric rule if undecided)."""
    if dH_sq == 0:
        return True
    if n % 2 == 0:
        pow_iv = Interval.exact(dH_sq ** (n // 2))
    else:
        pow_iv = Interval.exact(dH_sq ** ((n - 1) // 2)) * Interval.sqrt(dH_sq)
    iv = c_low_iv * pow_iv
    if iv.hi <= dG:
        return True
    if iv.lo > dG:
        return False
    return iv.midpoint() <= float(dG) * (1 + 1e-9)


def metric_report(G: VPolytope, K: VPolytope, L: VPolytope,
                  constants=None) -> MetricReport:
    """Bundle the exact distances, Hausdorff witness, and bound checks."""
    _require_inside(G, K, "K")
    _require_inside(G, L, "L")
    if constants is None:
        from .caps import theoretical_constants
        constants = theoretical_constants(G)
    n = G.dim
    pk, pl, pj, _ = _profiles(G, K, L)
    dG = _mixed_from_polys(pk, pl, pj, n)
    rhoG = 2 * polyval(pj, Q(1)) - polyval(pk, Q(1)) - polyval(pl, Q(1))
    wit = hausdorff(K, L)
    binom = sandwich_factor(n)
    sandwich_ok = (dG >= 0) and (dG <= rhoG) and (rhoG <= binom * dG)
    lipschitz_ok = _check_upper(dG, constants.c_upper_interval, wit.value_sq)
    power_lower_ok = _check_lower(dG, constants.c_lower_interval,
                                  wit.value_sq, n)
    return MetricReport(n=n, dG=dG, rhoG=rhoG, dH_sq=wit.value_sq,
                        dH=wit.value, binom=binom, sandwich_ok=sandwich_ok,
                        lipschitz_ok=lipschitz_ok,
                        power_lower_ok=power_lower_ok, witness=wit)


def quasi_triangle_probe(
    G: VPolytope,
    triples: Sequence[tuple[VPolytope, VPolytope, VPolytope]],
) -> Q | None:
    """Empirical quasi-triangle ratio max dG(K,M) / (dG(K,L) + dG(L,M)).

    Reported, never asserted: the relaxed triangle inequality for general
    reference bodies is an open question.  Degenerate 0/0 triples are skipped.
    """
    worst: Q | None = None
    for K, L, M in triples:
        denom = mixed_distance(G, K, L) + mixed_distance(G, L, M)
        if denom == 0:
            continue
        ratio = mixed_distance(G, K, M) / denom
        if worst is None or ratio > worst:
            worst = ratio
    return worst
