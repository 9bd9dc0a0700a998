"""Integral triangles with angle B twice angle A.

The family is ``b**2 == a*(a + c)`` over positive integers that form a
triangle.  Submodules:

``exactmath``  gcd, integer square roots, coprime square splitting
``triangle``   sides, double-angle predicates, exact cosines, angle classes
``bisector``   bisector of angle B and the triangle it cuts off
``family``     parametrizations, inversion, enumeration
``oracle``     brute-force search and comparison reports
``cli``        command-line entry point
"""
from ._kernels import BACKEND
from .bisector import (
    BisectorData,
    bisector_segments,
    family_bisector,
    integral_bisector_length,
    sub_triangle,
)
from .errors import (
    DegenerateTriangle,
    DoubleAngleError,
    InvalidParams,
    NotASquare,
    NotASquareProduct,
    NotCoprime,
    NotInFamily,
    NotIntegral,
    NotIntegralBisector,
)
from .exactmath import Rational, as_perfect_square, coprime_square_split, gcd, isqrt
from .family import (
    BisectorParamTriple,
    Branch,
    FamilyMember,
    ParamTriple,
    bisector_family_from_params,
    enumerate_bisector_family,
    enumerate_family,
    family_gcd,
    is_primitive,
    params_from_triangle,
    triangle_from_params,
)
from .triangle import (
    AngleClass,
    CosineTriple,
    Triangle,
    classify,
    cosines,
    double_angle_condition,
    formable_given_condition,
    is_double_angle_triangle,
    projection_identity_check,
    satisfies_triangle_inequalities,
    verify_double_angle_exact,
)

__version__ = "0.1.0"
