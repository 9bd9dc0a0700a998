"""Brute-force search for double-angle triangles.

Only the triangle predicates are used here.  The parametric generators in
``doubleangle.family`` are never imported, so a bug there cannot leak into
the reference set.
"""
from .. import _kernels
from ..triangle import Triangle, is_double_angle_triangle

NAIVE_LIMIT = 300


def _scan(max_perimeter, naive):
    if max_perimeter < 3:
        raise ValueError("max_perimeter must be >= 3")
    if naive:
        if max_perimeter > NAIVE_LIMIT:
            raise ValueError(f"naive scan is limited to max_perimeter <= {NAIVE_LIMIT}")
        candidates = _kernels.naive_condition_scan(max_perimeter)
    else:
        candidates = _kernels.condition_scan(max_perimeter)
    found = []
    for a, b, c in candidates:
        t = Triangle(a, b, c)
        if t.perimeter <= max_perimeter and is_double_angle_triangle(t):
            found.append(t)
    found.sort(key=Triangle.sort_key)
    return found


def brute_force_family(max_perimeter: int, naive: bool = False) -> list[Triangle]:
    """Every triangle with B = 2A and perimeter at most ``max_perimeter``.

    The default scan walks (a, c) and recovers b with an integer square
    root.  ``naive=True`` walks all (a, b, c) instead; it is cubic and
    capped at :data:`NAIVE_LIMIT`.
    """
    return _scan(max_perimeter, naive)


def brute_force_bisector_family(max_perimeter: int, naive: bool = False) -> list[Triangle]:
    """As :func:`brute_force_family`, keeping those where ``(a + c) | b*c``."""
    return [t for t in _scan(max_perimeter, naive) if (t.b * t.c) % (t.a + t.c) == 0]
