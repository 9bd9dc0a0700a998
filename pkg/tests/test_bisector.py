import pytest

from doubleangle.bisector import (
    bisector_segments,
    family_bisector,
    integral_bisector_length,
    sub_triangle,
)
from doubleangle.errors import DegenerateTriangle, NotInFamily, NotIntegral, NotIntegralBisector
from doubleangle.exactmath import Rational
from doubleangle.family import BisectorParamTriple, bisector_family_from_params, enumerate_family
from doubleangle.triangle import (
    Triangle,
    double_angle_condition,
    is_double_angle_triangle,
    satisfies_triangle_inequalities,
)

Q = Rational


@pytest.mark.parametrize(
    "t, ad, dc",
    [((12, 18, 15), Q(10), Q(8)), ((4, 6, 5), Q(10, 3), Q(8, 3)), ((5, 8, 5), Q(4), Q(4))],
)
def test_segments(t, ad, dc):
    seg = bisector_segments(Triangle(*t))
    assert (seg.ad, seg.dc, seg.r) == (ad, dc, None)


def test_segments_degenerate():
    with pytest.raises(DegenerateTriangle):
        bisector_segments(Triangle(1, 2, 3))


@pytest.mark.parametrize("t, r", [((4, 6, 5), Q(10, 3)), ((12, 18, 15), Q(10)), ((9, 12, 7), Q(21, 4))])
def test_family_bisector(t, r):
    assert family_bisector(Triangle(*t)).r == r


def test_family_bisector_rejects_non_members():
    with pytest.raises(NotInFamily):
        family_bisector(Triangle(3, 4, 5))
    with pytest.raises(NotInFamily):
        integral_bisector_length(Triangle(1, 2, 3))


@pytest.mark.parametrize("t, r", [((12, 18, 15), 10), ((36, 48, 28), 21)])
def test_integral_bisector_length(t, r):
    assert integral_bisector_length(Triangle(*t)) == r


def test_non_integral_bisector():
    with pytest.raises(NotIntegral):
        integral_bisector_length(Triangle(4, 6, 5))


@pytest.mark.parametrize("t, child", [((12, 18, 15), (8, 12, 10)), ((36, 48, 28), (27, 36, 21))])
def test_sub_triangle(t, child):
    s = sub_triangle(Triangle(*t))
    assert tuple(s) == child
    assert double_angle_condition(s)


def test_sub_triangle_needs_integral_bisector():
    with pytest.raises(NotIntegralBisector):
        sub_triangle(Triangle(4, 6, 5))


def test_segment_sum_and_ratio_exhaustive():
    for a in range(1, 61):
        for b in range(1, 61):
            for c in range(abs(a - b) + 1, min(a + b, 61)):
                t = Triangle(a, b, c)
                seg = bisector_segments(t)
                assert seg.ad + seg.dc == b
                assert seg.ad * a == seg.dc * c


def test_isosceles_abd_for_members():
    # |BD| from the general bisector-length formula equals |AD| when B = 2A
    for fm in enumerate_family(600):
        a, b, c = fm.triangle
        bd_squared = Q(a * c * ((a + c) ** 2 - b * b), (a + c) ** 2)
        assert bd_squared == family_bisector(fm.triangle).ad ** 2


def test_integrality_iff_m_divides_l():
    for fm in enumerate_family(2000):
        l, k, m = fm.params
        try:
            integral_bisector_length(fm.triangle)
            integral = True
        except NotIntegral:
            integral = False
        assert integral is (l % m == 0)
        seg = family_bisector(fm.triangle)
        assert seg.r == Q(l * (m * m - k * k) * k, m)


def test_sub_triangle_closure():
    for d in range(1, 6):
        for m in range(2, 30):
            for k in range(m // 2 + 1, m):
                try:
                    fm = bisector_family_from_params(BisectorParamTriple(d, k, m))
                except ValueError:
                    continue
                child = sub_triangle(fm.triangle)
                assert satisfies_triangle_inequalities(child)
                assert is_double_angle_triangle(child)
                assert (d * m * k * k) ** 2 == d * k**3 * (d * k**3 + d * k * (m * m - k * k))
