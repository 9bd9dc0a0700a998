"""Triangles with labelled sides and the double-angle predicates.

Sides are positional: ``a`` is opposite angle A, ``b`` opposite B and ``c``
opposite C.  The double-angle relation ``b**2 == a*(a + c)`` is not
symmetric, so ``Triangle(4, 6, 5)`` and ``Triangle(4, 5, 6)`` are different
objects with different answers.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DegenerateTriangle
from .exactmath import Rational


@dataclass(frozen=True, slots=True)
class Triangle:
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"side {name} must be a positive integer, got {v!r}")

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    @property
    def perimeter(self) -> int:
        return self.a + self.b + self.c

    def sort_key(self) -> tuple[int, int, int]:
        """Canonical enumeration order: perimeter, then a, then b."""
        return (self.perimeter, self.a, self.b)

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c})"


class AngleClass(enum.Enum):
    ACUTE = "acute"
    RIGHT_AT_A = "right_at_a"
    RIGHT_AT_B = "right_at_b"
    RIGHT_AT_C = "right_at_c"
    OBTUSE_AT_A = "obtuse_at_a"
    OBTUSE_AT_B = "obtuse_at_b"
    OBTUSE_AT_C = "obtuse_at_c"


class CosineTriple(NamedTuple):
    cos_a: Rational
    cos_b: Rational
    cos_c: Rational


def satisfies_triangle_inequalities(t: Triangle) -> bool:
    a, b, c = t
    return a < b + c and b < a + c and c < a + b


def _require_valid(t: Triangle):
    if not satisfies_triangle_inequalities(t):
        raise DegenerateTriangle(f"{t} violates the triangle inequality")


def double_angle_condition(t: Triangle) -> bool:
    """``b**2 == a*(a + c)``, the algebraic form of angle B = 2 * angle A."""
    return t.b * t.b == t.a * (t.a + t.c)


def formable_given_condition(a: int, c: int) -> bool:
    """Whether ``a``, ``c`` (with b fixed by the double-angle relation) close up.

    The ``c == a`` boundary is accepted even though no integral ``b`` attains it.
    """
    return c <= a or a < c < 3 * a


def is_double_angle_triangle(t: Triangle) -> bool:
    return double_angle_condition(t) and satisfies_triangle_inequalities(t)


def cosines(t: Triangle) -> CosineTriple:
    """Exact cosines from the law of cosines."""
    _require_valid(t)
    a, b, c = t
    return CosineTriple(
        Rational(b * b + c * c - a * a, 2 * b * c),
        Rational(c * c + a * a - b * b, 2 * c * a),
        Rational(a * a + b * b - c * c, 2 * a * b),
    )


def verify_double_angle_exact(t: Triangle) -> bool:
    """Confirm B = 2A through cosines rather than through side algebra.

    Requires both ``cos B == 2 cos(A)**2 - 1`` and ``cos A == b / (2a)``.
    """
    cos_a, cos_b, _ = cosines(t)
    return cos_b == 2 * cos_a * cos_a - 1 and cos_a == Rational(t.b, 2 * t.a)


def projection_identity_check(t: Triangle) -> bool:
    """``c == a cos B + b cos A``; true for every non-degenerate triangle."""
    cos_a, cos_b, _ = cosines(t)
    return t.a * cos_b + t.b * cos_a == t.c


def classify(t: Triangle) -> AngleClass:
    _require_valid(t)
    a2, b2, c2 = t.a * t.a, t.b * t.b, t.c * t.c
    # At most one angle can be right or obtuse.
    for side2, rest, right, obtuse in (
        (a2, b2 + c2, AngleClass.RIGHT_AT_A, AngleClass.OBTUSE_AT_A),
        (b2, a2 + c2, AngleClass.RIGHT_AT_B, AngleClass.OBTUSE_AT_B),
        (c2, a2 + b2, AngleClass.RIGHT_AT_C, AngleClass.OBTUSE_AT_C),
    ):
        if side2 > rest:
            return obtuse
        if side2 == rest:
            return right
    return AngleClass.ACUTE


def approx_angles_deg(t: Triangle) -> tuple[float, float, float]:
    """Approximate angles in degrees, for display only."""
    return tuple(math.degrees(math.acos(x)) for x in cosines(t))
