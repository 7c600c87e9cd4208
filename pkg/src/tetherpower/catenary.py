"""Catenary geometry: fitting cable spans and the forces they exert.

A uniform flexible cable hanging between two supports follows
z = a*cosh((y - b)/a) + c.  Given the two endpoints and the cable arc
length, this module fits (a, b, c), evaluates the curve, measures partial
arc lengths, and resolves the pull the cable applies on each support.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NoConvergence, OutOfSpan, TautTether, VerticalSpan

MIN_HORIZONTAL_SPAN = 1e-6   # m; below this the span counts as vertical
TAUT_RELATIVE_SLACK = 1e-12  # required (length - chord)/chord margin

_PARAM_REL_TOL = 1e-12       # bisection stop on the catenary parameter
_MAX_BRACKET_STEPS = 200
_SINH_OVERFLOW = 700.0       # math.sinh overflows shortly past this


@dataclass(frozen=True)
class PlanarPoint:
    """A point in the vertical cable plane: y horizontal, z vertical (up), in m."""

    y: float
    z: float

    def __post_init__(self):
        if not (math.isfinite(self.y) and math.isfinite(self.z)):
            raise ValueError(f"coordinates must be finite, got ({self.y}, {self.z})")


@dataclass(frozen=True)
class ForceVec:
    """A planar force: fy horizontal, fz vertical (positive up), in N."""

    fy: float
    fz: float


@dataclass(frozen=True)
class CatenarySegment:
    """One fitted cable span.

    `a` is the catenary parameter (horizontal tension over weight per unit
    length), `b`/`c` place the curve in the plane, `p0` is the end nearer
    the power source, `p1` the end farther from it, `length` the arc length.
    """

    a: float
    b: float
    c: float
    p0: PlanarPoint
    p1: PlanarPoint
    length: float

    @property
    def y_min(self) -> float:
        return min(self.p0.y, self.p1.y)

    @property
    def y_max(self) -> float:
        return max(self.p0.y, self.p1.y)


def chord_length(p0: PlanarPoint, p1: PlanarPoint) -> float:
    """Straight-line distance between two points."""
    return math.hypot(p1.y - p0.y, p1.z - p0.z)


def _sinh_minus_arg(x: float) -> float:
    """sinh(x) - x without cancellation for small x."""
    if x >= 0.25:
        return math.sinh(x) - x
    total = term = x * x * x / 6.0
    k = 1
    while True:
        term *= x * x / ((2.0 * k + 2.0) * (2.0 * k + 3.0))
        total += term
        if term <= 1e-17 * total:
            return total
        k += 1


def _bisect_parameter(residual, a0: float) -> float:
    """Root of a strictly decreasing residual, bracketed by doubling from a0."""
    lo = hi = a0
    r0 = residual(a0)
    if r0 == 0.0:
        return a0
    if r0 > 0.0:
        # parameter too small: grow the upper edge
        for _ in range(_MAX_BRACKET_STEPS):
            hi *= 2.0
            if residual(hi) <= 0.0:
                break
            lo = hi
        else:
            raise NoConvergence("failed to bracket the catenary parameter from above")
    else:
        for _ in range(_MAX_BRACKET_STEPS):
            lo *= 0.5
            if residual(lo) >= 0.0:
                break
            hi = lo
        else:
            raise NoConvergence("failed to bracket the catenary parameter from below")
    while hi - lo > _PARAM_REL_TOL * lo:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if residual(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def fit_catenary(p0: PlanarPoint, p1: PlanarPoint, length: float) -> CatenarySegment:
    """Fit the catenary of a given arc length through two endpoints.

    Solves sqrt(length^2 - rise^2) = 2a*sinh(span/(2a)) for the unique
    positive parameter `a` (the residual is strictly decreasing in `a`),
    then places the curve so it passes through both endpoints.

    Raises:
        VerticalSpan: endpoints are horizontally closer than 1e-6 m.
        TautTether: `length` does not exceed the chord.
        NoConvergence: bracketing failed (pathological inputs).
    """
    span = abs(p1.y - p0.y)
    if span <= MIN_HORIZONTAL_SPAN:
        raise VerticalSpan(
            f"horizontal span {span:.3e} m is below {MIN_HORIZONTAL_SPAN} m"
        )
    left, right = (p0, p1) if p0.y <= p1.y else (p1, p0)
    rise = right.z - left.z
    chord = math.hypot(span, rise)
    if not math.isfinite(length) or length <= chord * (1.0 + TAUT_RELATIVE_SLACK):
        raise TautTether(
            f"cable length {length} m does not exceed the chord {chord} m"
        )

    # Work with differences that stay far from cancellation near the taut
    # limit: rhs - span and 2a*(sinh(x) - x) are both O(slack), so the
    # residual keeps full precision even at relative slack ~1e-12.
    rhs = math.sqrt((length - rise) * (length + rise))
    slack = (length - chord) * (length + chord) / (rhs + span)

    def residual(a: float) -> float:
        x = 0.5 * span / a
        if x > _SINH_OVERFLOW:
            return math.inf
        return 2.0 * a * _sinh_minus_arg(x) - slack

    a = _bisect_parameter(residual, 0.5 * span)
    b = left.y + 0.5 * span - a * math.atanh(rise / length)
    c = left.z - a * math.cosh((left.y - b) / a)
    return CatenarySegment(a=a, b=b, c=c, p0=p0, p1=p1, length=length)


def _require_in_span(seg: CatenarySegment, y: float):
    tol = 1e-9 * max(1.0, seg.y_max - seg.y_min)
    if y < seg.y_min - tol or y > seg.y_max + tol:
        raise OutOfSpan(
            f"y={y} outside the segment span [{seg.y_min}, {seg.y_max}]"
        )


def evaluate(seg: CatenarySegment, y: float) -> float:
    """Height of the cable at horizontal coordinate y."""
    _require_in_span(seg, y)
    return seg.a * math.cosh((y - seg.b) / seg.a) + seg.c


def arc_length(seg: CatenarySegment, y0: float, y1: float) -> float:
    """Cable length between two horizontal coordinates inside the span."""
    _require_in_span(seg, y0)
    _require_in_span(seg, y1)
    if y0 > y1:
        raise OutOfSpan(f"interval start {y0} exceeds end {y1}")
    u0 = (y0 - seg.b) / seg.a
    u1 = (y1 - seg.b) / seg.a
    # a*(sinh(u1) - sinh(u0)) in product form, which cannot cancel
    return 2.0 * seg.a * math.cosh(0.5 * (u0 + u1)) * math.sinh(0.5 * (u1 - u0))


def end_forces(seg: CatenarySegment, lam: float, g: float) -> tuple[ForceVec, ForceVec]:
    """Forces the cable exerts ON its two supports, (lower-y end, higher-y end).

    The cable pulls each support along its local tangent, toward the span
    interior, with tension lam*g*a*cosh(u).  Horizontally both pulls have
    magnitude lam*g*a; vertically they sum to the full cable weight.
    """
    horiz = lam * g * seg.a
    u_lo = (seg.y_min - seg.b) / seg.a
    u_hi = (seg.y_max - seg.b) / seg.a
    t_left = ForceVec(fy=horiz, fz=horiz * math.sinh(u_lo))
    t_right = ForceVec(fy=-horiz, fz=-horiz * math.sinh(u_hi))
    return t_left, t_right


def force_on_end(seg: CatenarySegment, point: PlanarPoint, lam: float, g: float) -> ForceVec:
    """Force the cable exerts on the support sitting at `point` (one of its ends)."""
    t_left, t_right = end_forces(seg, lam, g)
    return t_left if point.y == seg.y_min else t_right
