"""Parametrizations of the double-angle family and their inverse.

Every integral triangle with B = 2A is ``(l*k**2, l*k*m, l*(m**2 - k**2))``
for a unique triple ``(l, k, m)`` with ``gcd(k, m) == 1`` and
``k < m < 2k``.  Members whose bisector of B is integral are exactly those
with ``m | l``; writing ``l = d*m`` gives the bisector subfamily.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .bisector import BisectorData
from .errors import InvalidParams, NotASquare, NotInFamily
from .exactmath import Rational, as_perfect_square
from .triangle import Triangle, is_double_angle_triangle


class ParamTriple(NamedTuple):
    l: int  # noqa: E741
    k: int
    m: int


class BisectorParamTriple(NamedTuple):
    d: int
    k: int
    m: int


class Branch(enum.Enum):
    C_SHORTER = "c_shorter"  # m**2 < 2k**2, c < a
    C_LONGER = "c_longer"  # m**2 > 2k**2, c > a


@dataclass(frozen=True, slots=True)
class FamilyMember:
    triangle: Triangle
    params: ParamTriple
    branch: Branch
    bisector: BisectorData | None = None
    bisector_params: BisectorParamTriple | None = None


def check_km(k, m):
    """Raise :class:`InvalidParams` naming every violated constraint."""
    problems = []
    for name, v in (("k", k), ("m", m)):
        if not isinstance(v, int) or v < 1:
            raise InvalidParams(f"{name} must be a positive integer, got {v!r}")
    if gcd(k, m) != 1:
        problems.append(f"gcd(k, m) = {gcd(k, m)} != 1")
    if not k < m < 2 * k:
        problems.append(f"need k < m < 2k, got k={k}, m={m}")
    if problems:
        raise InvalidParams("; ".join(problems))


def _check_scale(name, v):
    if not isinstance(v, int) or v < 1:
        raise InvalidParams(f"{name} must be a positive integer, got {v!r}")


def branch_of(k: int, m: int) -> Branch:
    return Branch.C_SHORTER if m * m < 2 * k * k else Branch.C_LONGER


def triangle_from_params(p: ParamTriple) -> Triangle:
    l, k, m = p  # noqa: E741
    _check_scale("l", l)
    check_km(k, m)
    return Triangle(l * k * k, l * k * m, l * (m * m - k * k))


def bisector_family_from_params(p: BisectorParamTriple) -> FamilyMember:
    d, k, m = p
    _check_scale("d", d)
    check_km(k, m)
    t = Triangle(d * m * k * k, d * k * m * m, d * m * (m * m - k * k))
    r = d * k * (m * m - k * k)
    bis = BisectorData(ad=Rational(r), dc=Rational(d * k**3), r=Rational(r))
    return FamilyMember(
        triangle=t,
        params=ParamTriple(d * m, k, m),
        branch=branch_of(k, m),
        bisector=bis,
        bisector_params=BisectorParamTriple(d, k, m),
    )


def params_from_triangle(t: Triangle) -> ParamTriple:
    """Recover ``(l, k, m)``; raise :class:`NotInFamily` for non-members."""
    if not is_double_angle_triangle(t):
        raise NotInFamily(f"{t} does not have angle B = 2 * angle A")
    a, b, c = t
    l = gcd(a, c)  # noqa: E741
    try:
        k = as_perfect_square(a // l)
        m = as_perfect_square((a + c) // l)
    except NotASquare as exc:  # pragma: no cover - impossible for members
        raise NotInFamily(f"{t}: {exc}") from None
    if b != l * k * m:  # pragma: no cover - impossible for members
        raise NotInFamily(f"{t}: b != l*k*m")
    return ParamTriple(l, k, m)


def family_member(t: Triangle) -> FamilyMember:
    """Wrap a member triangle with its parameters and branch."""
    p = params_from_triangle(t)
    return FamilyMember(triangle=t, params=p, branch=branch_of(p.k, p.m))


def family_gcd(t: Triangle, p: ParamTriple) -> int:
    """gcd of the three sides of ``t``; equals ``p.l`` for members."""
    return gcd(t.a, t.b, t.c)


def is_primitive(t: Triangle) -> bool:
    return gcd(t.a, t.b, t.c) == 1


def _km_pairs(max_base):
    """Valid (k, m) with ``m*(k + m) <= max_base``, the perimeter at scale 1."""
    m = 2
    # smallest k for a given m is m//2 + 1, so perimeter grows at least 1.5 m**2
    while m * (m // 2 + 1 + m) <= max_base:
        for k in range(m // 2 + 1, m):
            if m * (k + m) > max_base:
                break
            if gcd(k, m) == 1:
                yield k, m
        m += 1


def enumerate_family(max_perimeter: int, primitive_only: bool = False) -> list[FamilyMember]:
    """All members with perimeter at most ``max_perimeter``.

    Sorted by (perimeter, a, b).  Perimeter of ``(l, k, m)`` is
    ``l*m*(k + m)``.
    """
    if max_perimeter < 1:
        raise ValueError("max_perimeter must be >= 1")
    out = []
    for k, m in _km_pairs(max_perimeter):
        base = m * (k + m)
        branch = branch_of(k, m)
        top = 1 if primitive_only else max_perimeter // base
        for l in range(1, top + 1):  # noqa: E741
            p = ParamTriple(l, k, m)
            out.append(FamilyMember(triangle_from_params(p), p, branch))
    out.sort(key=lambda fm: fm.triangle.sort_key())
    assert len({fm.triangle for fm in out}) == len(out), "duplicate triangle"
    return out


def enumerate_bisector_family(max_perimeter: int, primitive_only: bool = False) -> list[FamilyMember]:
    """Members with integral bisector of B and perimeter at most ``max_perimeter``.

    With ``primitive_only`` the result is always empty: primitive members
    would need ``d == m == 1``, but ``m > k >= 1``.
    """
    if max_perimeter < 1:
        raise ValueError("max_perimeter must be >= 1")
    if primitive_only:
        return []
    out = []
    for k, m in _km_pairs(max_perimeter):
        # perimeter is d * m * m * (k + m)
        base = m * m * (k + m)
        for d in range(1, max_perimeter // base + 1):
            out.append(bisector_family_from_params(BisectorParamTriple(d, k, m)))
    out.sort(key=lambda fm: fm.triangle.sort_key())
    return out

