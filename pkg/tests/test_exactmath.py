from math import gcd as stdlib_gcd
from math import isqrt as stdlib_isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from doubleangle.errors import NotASquare, NotASquareProduct, NotCoprime
from doubleangle.exactmath import (
    Rational,
    as_perfect_square,
    coprime_square_split,
    fraction_str,
    gcd,
    isqrt,
)


@pytest.mark.parametrize("x, y, expected", [(12, 18, 6), (7, 1, 1), (4, 5, 1)])
def test_gcd_examples(x, y, expected):
    assert gcd(x, y) == expected


def test_gcd_against_trial_division():
    for x in range(1, 60):
        for y in range(1, 60):
            best = max(d for d in range(1, min(x, y) + 1) if x % d == 0 and y % d == 0)
            assert gcd(x, y) == best


@pytest.mark.parametrize("bad", [0, -3, 2.0, True])
def test_gcd_rejects_non_positive(bad):
    with pytest.raises(ValueError):
        gcd(bad, 4)


@pytest.mark.parametrize("n, expected", [(0, 0), (16, 4), (17, 4)])
def test_isqrt_examples(n, expected):
    assert isqrt(n) == expected


@given(st.integers(min_value=0, max_value=10**40))
def test_isqrt_floor_property(n):
    s = isqrt(n)
    assert s * s <= n < (s + 1) * (s + 1)


def test_isqrt_rejects_negative():
    with pytest.raises(ValueError):
        isqrt(-1)


@pytest.mark.parametrize("n, expected", [(9, 3), (1, 1), (10**30, 10**15)])
def test_as_perfect_square(n, expected):
    assert as_perfect_square(n) == expected


@pytest.mark.parametrize("n", [8, 2, 10**30 + 1])
def test_not_a_square(n):
    with pytest.raises(NotASquare):
        as_perfect_square(n)


@pytest.mark.parametrize("p, q, expected", [(4, 9, (2, 3)), (1, 25, (1, 5)), (1, 1, (1, 1))])
def test_coprime_square_split_examples(p, q, expected):
    assert coprime_square_split(p, q) == expected


def test_coprime_square_split_errors():
    with pytest.raises(NotCoprime):
        coprime_square_split(4, 8)
    with pytest.raises(NotASquareProduct):
        coprime_square_split(2, 3)


def test_coprime_square_split_exhaustive():
    squares = {s * s for s in range(1, 1001)}
    hits = 0
    for p in range(1, 1001):
        for q in range(1, 1001):
            pq = p * q
            r = stdlib_isqrt(pq)
            if r * r != pq or stdlib_gcd(p, q) != 1:
                continue
            p1, q1 = coprime_square_split(p, q)
            assert p1 * p1 == p and q1 * q1 == q
            assert gcd(p1, q1) == 1
            assert p in squares and q in squares
            hits += 1
    expected = sum(1 for i in range(1, 32) for j in range(1, 32) if stdlib_gcd(i, j) == 1)
    assert hits == expected


def test_rational_normalizes():
    x = Rational(24, 9)
    assert (x.numerator, x.denominator) == (8, 3)
    y = Rational(3, -6)
    assert (y.numerator, y.denominator) == (-1, 2)
    assert fraction_str(y) == "-1/2"
    assert fraction_str(Rational(10)) == "10/1"
