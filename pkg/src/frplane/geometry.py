"""Closed-form geometry of the implementation curve over plane blocks.

The curve ``s(h) = w * h**r - t`` is strictly increasing in h, so within
any block it crosses each horizontal edge at most once and the clipped
area under it decomposes into three exactly integrable pieces:

    b_r = integral of (s(h) - p_lo) between the p_lo and p_hi crossings
          + full-height strip beyond the p_hi crossing

with antiderivative ``S(h) = w * h**(r+1) / (r+1) - t * h``. No
quadrature is involved anywhere; results are exact up to float rounding,
which is what lets the area-conservation and oracle tolerances sit at
1e-12 / 1e-9.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domain import (
    Block,
    BlockSplit,
    Decision,
    DynamicFunction,
    InvalidIntervalError,
    NegativeAbscissaError,
    PlaneGrid,
)

# Markers for a curve that never crosses the target ordinate on the interval.
NONE_BELOW = "none-below"  # curve stays above the ordinate throughout
NONE_ABOVE = "none-above"  # curve stays below the ordinate throughout


@dataclass(frozen=True)
class CrossingSolution:
    """Where ``s(h) = p`` on an interval: an abscissa, or a side marker."""

    h_star: float | None = None
    marker: str | None = None

    def __post_init__(self):
        if (self.h_star is None) == (self.marker is None):
            raise InvalidIntervalError("exactly one of h_star / marker must be set")
        if self.marker is not None and self.marker not in (NONE_BELOW, NONE_ABOVE):
            raise InvalidIntervalError(f"unknown crossing marker: {self.marker!r}")

    @property
    def crossed(self) -> bool:
        return self.h_star is not None


def eval_s(f: DynamicFunction, h: float) -> float:
    """Evaluate ``s(h) = w * h**r - t``. Negative values are legitimate when t > 0."""
    if h < 0.0:
        raise NegativeAbscissaError(f"curve is undefined for h={h} < 0")
    return f.w * h**f.r - f.t


def crossing(f: DynamicFunction, p: float, a: float, b: float) -> CrossingSolution:
    """Solve ``s(h) = p`` on [a, b].

    The closed form is ``h* = ((p + t) / w) ** (1/r)``. When h* falls
    outside [a, b] the result is a marker naming the side the curve lies
    on over the whole interval: NONE_BELOW when it never dips down to p,
    NONE_ABOVE when it never climbs up to p.
    """
    if not a < b:
        raise InvalidIntervalError(f"crossing interval is empty: [{a}, {b}]")
    if a < 0.0:
        raise NegativeAbscissaError(f"curve is undefined for h={a} < 0")
    shifted = p + f.t
    if shifted < 0.0:
        # s(h) >= -t > p for every h >= 0: the curve never comes down to p.
        return CrossingSolution(marker=NONE_BELOW)
    h_star = (shifted / f.w) ** (1.0 / f.r)
    if h_star < a:
        return CrossingSolution(marker=NONE_BELOW)
    if h_star > b:
        return CrossingSolution(marker=NONE_ABOVE)
    return CrossingSolution(h_star=h_star)


def integral_s(f: DynamicFunction, a: float, b: float) -> float:
    """Exact signed integral of s over [a, b] via the power antiderivative."""
    if a < 0.0 or a > b:
        raise InvalidIntervalError(f"integration interval must satisfy 0 <= a <= b, got [{a}, {b}]")

    def antiderivative(h: float) -> float:
        return f.w * h ** (f.r + 1.0) / (f.r + 1.0) - f.t * h

    return antiderivative(b) - antiderivative(a)


def _edge_crossing(f: DynamicFunction, p: float, a: float, b: float) -> float:
    """Abscissa where the curve passes ordinate p, clipped into [a, b]."""
    sol = crossing(f, p, a, b)
    if sol.h_star is not None:
        return sol.h_star
    # Curve already above p at a, or still below p at b.
    return a if sol.marker == NONE_BELOW else b


def split_block(block: Block, f: DynamicFunction) -> BlockSplit:
    """Split one block into (b_l, b_r) and apply the strict deployment rule.

    b_r is the block area lying below the curve, i.e. the integral of
    ``clamp(s(h), p_lo, p_hi) - p_lo``; with s increasing this is a band
    integral between the two edge crossings plus a saturated strip.
    b_l is the exact complement, so conservation holds by construction.
    """
    a, b = block.h_lo, block.h_hi
    c1 = _edge_crossing(f, block.p_lo, a, b)
    c2 = _edge_crossing(f, block.p_hi, a, b)
    band = integral_s(f, c1, c2) - block.p_lo * (c2 - c1)
    saturated = (b - c2) * block.height
    area = block.area
    # Rounding may push the sum a hair outside [0, area]; clamp before
    # deriving the complement so both areas stay nonnegative and exact.
    b_r = min(max(band + saturated, 0.0), area)
    b_l = area - b_r
    decision = Decision.DEPLOY if b_r > b_l else Decision.NOT_DEPLOY
    return BlockSplit(block=block, b_l=b_l, b_r=b_r, decision=decision)


def decision_matrix(grid: PlaneGrid, f: DynamicFunction) -> list[BlockSplit]:
    """Split every block of the grid, row-major."""
    return [split_block(block, f) for block in grid.blocks]


def deployment_frontier_w(
    block: Block,
    r: float,
    t: float,
    *,
    tol: float = 1e-10,
    max_iter: int = 200,
) -> float | None:
    """Smallest appearance probability w in (0, 1] that makes the block deploy.

    b_r grows monotonically with w, so bisection on ``b_r - b_l`` applies;
    iteration stops once ``|b_r - b_l| <= tol`` at the probe. Returns None
    when even w = 1 does not deploy (the frontier is unreachable).
    """

    def gap(w: float) -> float:
        s = split_block(block, DynamicFunction(w, r, t, continuous_t=True))
        return s.b_r - s.b_l

    if gap(1.0) <= 0.0:
        return None
    lo, hi = 0.0, 1.0  # gap(0+) = -area < 0 since the curve sinks below p_lo
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        g = gap(mid)
        if abs(g) <= tol:
            return mid
        if g > 0.0:
            hi = mid
        else:
            lo = mid
    return hi
