"""Least-squares power-law exponent fits on log-log data."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class SlopeFit:
    slope: float
    intercept: float
    r2: float
    window: tuple[float, float]
    npoints: int

    def residuals(self, xs, ys):
        return [math.log(y) - (self.slope * math.log(x) + self.intercept)
                for x, y in zip(xs, ys)]


def fit_power_law(xs: Sequence[float], ys: Sequence[float],
                  window: tuple[float, float] | None = None) -> SlopeFit:
    """Slope of log y against log x over the window (inclusive on x).

    Requires at least four in-window rows with strictly positive values;
    the returned r2 is the squared correlation of the log pairs.
    """
    if window is None:
        pos = [x for x in xs if x > 0]
        if not pos:
            raise ValueError("no positive abscissae to fit")
        window = (min(pos), max(pos))
    lo, hi = window
    sel = [(float(x), float(y)) for x, y in zip(xs, ys) if lo <= x <= hi]
    if any(x <= 0 or y <= 0 for x, y in sel):
        raise ValueError("nonpositive values inside the fit window")
    if len(sel) < 4:
        raise ValueError(f"need at least 4 in-window rows, got {len(sel)}")
    lx = [math.log(x) for x, _ in sel]
    ly = [math.log(y) for _, y in sel]
    m = len(sel)
    mx = sum(lx) / m
    my = sum(ly) / m
    sxx = sum((a - mx) ** 2 for a in lx)
    syy = sum((b - my) ** 2 for b in ly)
    sxy = sum((a - mx) * (b - my) for a, b in zip(lx, ly))
    if sxx == 0:
        raise ValueError("degenerate fit: all abscissae equal")
    slope = sxy / sxx
    intercept = my - slope * mx
    r2 = 1.0 if syy == 0 else (sxy * sxy) / (sxx * syy)
    return SlopeFit(slope, intercept, r2, (float(lo), float(hi)), m)
