"""Exception hierarchy.

Every error raised by the library derives from :class:`DoubleAngleError`,
which is itself a ``ValueError`` so callers that only care about bad input
can catch that.
"""


class DoubleAngleError(ValueError):
    pass


class NotASquare(DoubleAngleError):
    pass


class NotCoprime(DoubleAngleError):
    pass


class NotASquareProduct(DoubleAngleError):
    pass


class DegenerateTriangle(DoubleAngleError):
    """The three sides violate a strict triangle inequality."""


class NotInFamily(DoubleAngleError):
    """The triangle does not have angle B equal to twice angle A."""


class NotIntegral(DoubleAngleError):
    """The bisector of angle B has non-integer length."""


class NotIntegralBisector(NotIntegral):
    pass


class InvalidParams(DoubleAngleError):
    """Parameters violate gcd(k, m) = 1 or k < m < 2k."""
