"""Exact integer and rational primitives.

Nothing here touches floating point.  Python integers are unbounded, so
side lengths of any size are handled exactly; the only practical limit is
running time.
"""
from fractions import Fraction
from math import gcd as _gcd
from math import isqrt as _isqrt

from .errors import NotASquare, NotASquareProduct, NotCoprime

# Always stored in lowest terms with a positive denominator.
Rational = Fraction

__all__ = [
    "Rational",
    "as_perfect_square",
    "coprime_square_split",
    "fraction_str",
    "gcd",
    "isqrt",
]


def _require_positive(*values):
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"expected a positive integer, got {v!r}")


def gcd(x: int, y: int) -> int:
    _require_positive(x, y)
    return _gcd(x, y)


def isqrt(n: int) -> int:
    """Floor of the square root of a non-negative integer."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"expected a non-negative integer, got {n!r}")
    return _isqrt(n)


def as_perfect_square(n: int) -> int:
    """Return ``s`` with ``s * s == n``; raise :class:`NotASquare` otherwise."""
    _require_positive(n)
    s = _isqrt(n)
    if s * s != n:
        raise NotASquare(f"{n} is not a perfect square")
    return s


def coprime_square_split(p: int, q: int) -> tuple[int, int]:
    """Split coprime ``p``, ``q`` whose product is a square into two roots.

    Returns ``(p1, q1)`` with ``p == p1**2``, ``q == q1**2`` and
    ``gcd(p1, q1) == 1``.
    """
    _require_positive(p, q)
    if _gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {_gcd(p, q)}")
    s = _isqrt(p * q)
    if s * s != p * q:
        raise NotASquareProduct(f"{p} * {q} is not a perfect square")
    # Coprimality forces each factor to be a square on its own.
    p1 = _isqrt(p)
    q1 = _isqrt(q)
    assert p1 * p1 == p and q1 * q1 == q and p1 * q1 == s
    return p1, q1


def fraction_str(x: Fraction) -> str:
    """Serialize as ``"p/q"``; integers keep the ``/1`` so the form is uniform."""
    return f"{x.numerator}/{x.denominator}"
