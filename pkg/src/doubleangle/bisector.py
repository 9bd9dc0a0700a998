"""Bisector of angle B: segment lengths, integrality and the cut-off triangle.

The bisector from B meets side AC at D.  Segment lengths follow from the
ratio ``|AD| / |DC| = c / a``, giving ``|AD| = bc/(a+c)`` and
``|DC| = ab/(a+c)``.  When B = 2A the triangle ABD is isosceles, so the
bisector length ``|BD|`` equals ``|AD|``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateTriangle, NotInFamily, NotIntegral, NotIntegralBisector
from .exactmath import Rational
from .triangle import Triangle, is_double_angle_triangle, satisfies_triangle_inequalities


@dataclass(frozen=True, slots=True)
class BisectorData:
    ad: Rational
    dc: Rational
    r: Rational | None = None


def bisector_segments(t: Triangle) -> BisectorData:
    if not satisfies_triangle_inequalities(t):
        raise DegenerateTriangle(f"{t} violates the triangle inequality")
    a, b, c = t
    return BisectorData(ad=Rational(b * c, a + c), dc=Rational(a * b, a + c))


def _require_family(t: Triangle):
    if not is_double_angle_triangle(t):
        raise NotInFamily(f"{t} does not have angle B = 2 * angle A")


def family_bisector(t: Triangle) -> BisectorData:
    _require_family(t)
    seg = bisector_segments(t)
    return BisectorData(ad=seg.ad, dc=seg.dc, r=seg.ad)


def integral_bisector_length(t: Triangle) -> int:
    """Bisector length as an int, or :class:`NotIntegral`."""
    _require_family(t)
    num = t.b * t.c
    den = t.a + t.c
    if num % den:
        raise NotIntegral(f"bisector of {t} is {Rational(num, den)}, not an integer")
    return num // den


def sub_triangle(t: Triangle) -> Triangle:
    """Triangle BDC relabelled so its own B is twice its own A.

    In BDC the angle at B is A (half of the old B) and the angle at D is
    the exterior angle of the isosceles ABD, i.e. 2A.  Hence new a is
    |DC|, new b is |BC| (the old a) and new c is |BD|.
    """
    try:
        r = integral_bisector_length(t)
    except NotIntegral as exc:
        raise NotIntegralBisector(str(exc)) from None
    # |DC| = b - r is integral whenever r is.
    return Triangle(t.b - r, t.a, r)
