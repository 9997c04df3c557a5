"""Collinearity detection: exact slopes, category characterizations."""

import random
from math import gcd

import pytest

from mediant.fraction import Fraction
from mediant.geometry import (
    ONES,
    ORIGIN,
    classify_category_a,
    classify_category_b,
    collinear_through,
    graph_points,
    integer_slope_forms,
    points_new_at_order,
    rnf_local_maxima,
    vertical_points,
)


def slope_map(groups):
    return {g.slope: [m.source for m in g.members] for g in groups}


def test_graph_points_small():
    points = graph_points(2)
    assert [(str(p.x), str(p.y)) for p in points] == [
        ("0/1", "1/1"),
        ("1/2", "1/2"),
        ("1/1", "1/1"),
    ]
    assert len(graph_points(3)) == 5


def test_graph_point_ordinates_are_reciprocal_denominators():
    for point in graph_points(30):
        assert point.y == Fraction(1, point.source.q)
        assert point.x == point.source


def test_origin_slope_groups_partition_by_numerator():
    points = graph_points(10)
    groups = slope_map(collinear_through(ORIGIN, points))
    assert groups[Fraction(1, 1)] == [
        Fraction(1, q) for q in range(10, 0, -1)
    ]
    assert groups[Fraction(1, 2)] == [
        Fraction(2, 9),
        Fraction(2, 7),
        Fraction(2, 5),
        Fraction(2, 3),
    ]


def test_ones_slope_two_group():
    points = graph_points(10)
    groups = slope_map(collinear_through(ONES, points))
    assert groups[Fraction(2, 1)] == [
        Fraction(5, 9),
        Fraction(4, 7),
        Fraction(3, 5),
        Fraction(2, 3),
    ]
    assert groups[Fraction(3, 1)] == [
        Fraction(7, 10),
        Fraction(5, 7),
        Fraction(3, 4),
    ]


def test_vertical_points_reported_separately():
    points = graph_points(5)
    assert [str(p.source) for p in vertical_points(ORIGIN, points)] == ["0/1"]
    assert vertical_points(ONES, points) == []
    origin_members = {
        m.source
        for g in collinear_through(ORIGIN, points)
        for m in g.members
    }
    assert Fraction(0, 1) not in origin_members


def test_anchor_point_excluded_from_its_own_groups():
    ones_members = {
        m.source
        for g in collinear_through(ONES, graph_points(8))
        for m in g.members
    }
    assert Fraction(1, 1) not in ones_members


def test_invalid_anchor_rejected():
    with pytest.raises(ValueError):
        collinear_through((2, 2), graph_points(5))


def test_category_a_kappa_2():
    groups = classify_category_a(2)
    assert len(groups) == 1
    assert groups[0].slope == Fraction(1, 1)
    assert [m.source for m in groups[0].members] == [Fraction(1, 2), Fraction(1, 1)]


def test_category_a_slope_one_size_at_20():
    groups = slope_map(classify_category_a(20))
    assert len(groups[Fraction(1, 1)]) == 20  # 1/1 down to 1/20


def test_category_a_present_slopes_at_20():
    # a slope 1/n appears exactly when at least two reduced fractions have
    # numerator n (groups of one are dropped)
    kappa = 20
    expected = set()
    for n in range(1, kappa + 1):
        partners = [q for q in range(n, kappa + 1) if gcd(n, q) == 1]
        if len(partners) >= 2:
            expected.add(Fraction(1, n))
    groups = slope_map(classify_category_a(kappa))
    assert set(groups) == expected


def test_category_a_characterization_exhaustive():
    kappa = 60
    groups = slope_map(classify_category_a(kappa))
    # forward: every member of the slope-1/n group has numerator n
    for slope, members in groups.items():
        assert slope.p == 1
        assert all(f.p == slope.q for f in members)
    # converse: every point with numerator n sits in the slope-1/n group
    # (when that group exists)
    for f in (pt.source for pt in graph_points(kappa)):
        if f.p >= 1 and Fraction(1, f.p) in groups:
            assert f in groups[Fraction(1, f.p)]


def test_category_b_characterization_exhaustive():
    kappa = 60
    groups = slope_map(classify_category_b(kappa))
    for slope, members in groups.items():
        for f in members:
            # (y - 1)/(x - 1) == slope, cross-multiplied: (q-1)/(q-p)
            assert (f.q - 1) * slope.q == (f.q - f.p) * slope.p
    # converse for integer slopes: c = (q-1)/(q-p) forces membership
    for f in (pt.source for pt in graph_points(kappa)):
        if f == Fraction(1, 1):
            continue
        num, den = f.q - 1, f.q - f.p
        if num % den == 0:
            c = Fraction(num // den, 1)
            if c in groups:
                assert f in groups[c]


def test_categories_agree_on_slope_one_line():
    kappa = 15
    a = slope_map(classify_category_a(kappa))[Fraction(1, 1)]
    b = slope_map(classify_category_b(kappa))[Fraction(1, 1)]
    # same line y = x; membership differs only by the anchors themselves
    assert set(a) - {Fraction(1, 1)} == set(b) - {Fraction(0, 1)}


def test_kappa_preconditions():
    with pytest.raises(ValueError):
        classify_category_a(1)
    with pytest.raises(ValueError):
        classify_category_b(2)


def test_groups_are_order_insensitive():
    points = graph_points(25)
    shuffled = points[:]
    random.Random(3).shuffle(shuffled)
    assert collinear_through(ONES, points) == collinear_through(ONES, shuffled)
    assert collinear_through(ORIGIN, points) == collinear_through(ORIGIN, shuffled)


def test_groups_sorted_by_slope():
    groups = classify_category_b(20)
    slopes = [g.slope for g in groups]
    assert slopes == sorted(slopes)
    for g in groups:
        xs = [m.x for m in g.members]
        assert xs == sorted(xs)


def test_integer_slope_forms():
    groups = classify_category_b(40)
    report = integer_slope_forms(groups)
    assert report[5] == {
        "an_plus_1": [(2, 2), (4, 1)],
        "an_minus_1": [(2, 3), (3, 2), (6, 1)],
    }
    assert report[3] == {
        "an_plus_1": [(2, 1)],
        "an_minus_1": [(2, 2), (4, 1)],
    }
    assert all(isinstance(slope, int) for slope in report)


def test_local_maxima_of_order_five():
    points = graph_points(5)
    maxima = [p.source for p in rnf_local_maxima(points)]
    assert maxima == [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)]


def test_points_new_at_order():
    points = graph_points(8)
    new = points_new_at_order(points, 8)
    assert [p.source for p in new] == [
        Fraction(p, 8) for p in (1, 3, 5, 7)
    ]
