"""Exact collinearity structure of the (value, 1/q) point cloud.

Plotting each reduced fraction p/q at x = p/q, y = 1/q produces a graph
whose maxima line up along rays through (0, 0) and through (1, 1):

* through the origin, the point (p/q, 1/q) lies on the ray of slope 1/p,
  so the rays partition all points with p >= 1 by numerator;
* through (1, 1), the point lies on the ray of slope (q - 1)/(q - p); the
  integer-slope rays c correspond to q = 1 (mod c) with p = q - (q-1)/c.

All grouping is done by exact cross-multiplied rational slopes; no floats
anywhere, so shuffling the input cannot change the groups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .census import farey_sequence, rnf
from .fraction import Fraction

ORIGIN = (0, 0)
ONES = (1, 1)
_ANCHORS = (ORIGIN, ONES)


@dataclass(frozen=True)
class GraphPoint:
    """One plotted fraction: x = p/q, y = 1/q."""

    x: Fraction
    y: Fraction
    source: Fraction


@dataclass(frozen=True)
class LineGroup:
    """Points collinear on the ray of the given exact slope from `anchor`."""

    anchor: tuple[int, int]
    slope: Fraction
    members: tuple[GraphPoint, ...]


def graph_points(kappa: int) -> list[GraphPoint]:
    """One point per reduced fraction in [0, 1] with q <= kappa."""
    return [GraphPoint(x=f, y=rnf(f), source=f) for f in farey_sequence(kappa)]


def _validate_anchor(anchor) -> tuple[int, int]:
    anchor = tuple(anchor)
    if anchor not in _ANCHORS:
        raise ValueError(f"anchor must be one of {_ANCHORS}, got {anchor}")
    return anchor


def _slope_key(anchor, point) -> Fraction | None:
    """Exact slope of the segment anchor -> point; None if vertical."""
    ax, ay = anchor
    p, q = point.source.p, point.source.q
    num = 1 - ay * q  # numerator of y - ay, over denominator q
    den = p - ax * q  # numerator of x - ax, over denominator q
    if den == 0:
        return None
    if den < 0:
        num, den = -num, -den
    return Fraction(num, den)


def collinear_through(anchor, points) -> list[LineGroup]:
    """Group points by exact slope through the anchor.

    Points coincident with the anchor are excluded, points directly above
    or below it (vertical segment) are left out of the slope groups (see
    :func:`vertical_points`), and singleton groups are dropped: a line
    needs two points.  Groups come back sorted by slope, members by x.
    """
    anchor = _validate_anchor(anchor)
    ax, ay = anchor
    anchor_fraction = Fraction(ax, 1), Fraction(ay, 1)
    by_slope: dict[Fraction, list[GraphPoint]] = {}
    for point in points:
        if (point.x, point.y) == anchor_fraction:
            continue
        slope = _slope_key(anchor, point)
        if slope is None:
            continue
        by_slope.setdefault(slope, []).append(point)
    groups = [
        LineGroup(anchor, slope, tuple(sorted(members, key=lambda m: m.x)))
        for slope, members in by_slope.items()
        if len(members) >= 2
    ]
    groups.sort(key=lambda g: g.slope)
    return groups


def vertical_points(anchor, points) -> list[GraphPoint]:
    """Points sharing the anchor's x (reported apart from the slope groups)."""
    anchor = _validate_anchor(anchor)
    ax, ay = anchor
    anchor_fraction = Fraction(ax, 1), Fraction(ay, 1)
    return [
        point
        for point in points
        if point.x == Fraction(ax, 1) and (point.x, point.y) != anchor_fraction
    ]


def classify_category_a(kappa: int) -> list[LineGroup]:
    """Rays through the origin; the slope-1/n ray holds the numerator-n points.

    The characterization is verified on every returned group.
    """
    if kappa < 2:
        raise ValueError("category A needs kappa >= 2")
    points = graph_points(kappa)
    groups = collinear_through(ORIGIN, points)
    by_numerator: dict[int, set[Fraction]] = {}
    for point in points:
        if point.source.p >= 1:
            by_numerator.setdefault(point.source.p, set()).add(point.source)
    for group in groups:
        if group.slope.p != 1:
            raise RuntimeError(
                f"origin-anchored slope {group.slope} is not of the form 1/n"
            )
        n = group.slope.q
        members = {m.source for m in group.members}
        if members != by_numerator.get(n, set()):
            raise RuntimeError(
                f"slope 1/{n} group does not match the numerator-{n} points"
            )
    return groups


def classify_category_b(kappa: int) -> list[LineGroup]:
    """Rays through (1, 1); see :func:`integer_slope_forms` for the
    a*n+1 / a*n-1 decomposition of the integer slopes."""
    if kappa < 3:
        raise ValueError("category B needs kappa >= 3")
    return collinear_through(ONES, graph_points(kappa))


def integer_slope_forms(groups) -> dict[int, dict[str, list[tuple[int, int]]]]:
    """Which detected integer slopes factor as a*n + 1 or a*n - 1 (a >= 2, n >= 1).

    Informational report: every decomposition of each integer slope is
    listed as an (a, n) pair.
    """
    report: dict[int, dict[str, list[tuple[int, int]]]] = {}
    for group in groups:
        if group.slope.q != 1:
            continue
        c = group.slope.p
        plus = [(a, (c - 1) // a) for a in range(2, c) if (c - 1) % a == 0]
        minus = [(a, (c + 1) // a) for a in range(2, c + 2) if (c + 1) % a == 0]
        report[c] = {"an_plus_1": plus, "an_minus_1": minus}
    return report


def rnf_local_maxima(points) -> list[GraphPoint]:
    """Interior points whose y strictly exceeds both value-neighbours.

    Input must be sorted by x (as :func:`graph_points` returns it).  These
    are the second-tier peaks from which finer ray families can be built
    by re-running :func:`collinear_through` on slices.
    """
    maxima = []
    for i in range(1, len(points) - 1):
        if points[i].y > points[i - 1].y and points[i].y > points[i + 1].y:
            maxima.append(points[i])
    return maxima


def points_new_at_order(points, n: int) -> list[GraphPoint]:
    """The points that first appear at Farey order n (denominator == n)."""
    return [point for point in points if point.source.q == n]
