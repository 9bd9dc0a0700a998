"""Check the parametric enumerations against brute-force search."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ..family import enumerate_bisector_family, enumerate_family
from ..triangle import Triangle
from .search import NAIVE_LIMIT, brute_force_bisector_family, brute_force_family

__all__ = [
    "NAIVE_LIMIT",
    "OracleReport",
    "Which",
    "brute_force_bisector_family",
    "brute_force_family",
    "compare",
]


class Which(enum.Enum):
    RESULT1 = "result1"
    RESULT2 = "result2"


@dataclass
class OracleReport:
    bound: int
    which: Which
    found: list[Triangle]
    missing_from_parametric: list[Triangle] = field(default_factory=list)
    extra_in_parametric: list[Triangle] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.missing_from_parametric and not self.extra_in_parametric


def compare(bound: int, which: Which | str = Which.RESULT1, naive: bool = False) -> OracleReport:
    which = Which(which)
    if which is Which.RESULT1:
        found = brute_force_family(bound, naive=naive)
        members = enumerate_family(bound)
    else:
        found = brute_force_bisector_family(bound, naive=naive)
        members = enumerate_bisector_family(bound)
    param = [fm.triangle for fm in members]
    oracle_set, param_set = set(found), set(param)
    return OracleReport(
        bound=bound,
        which=which,
        found=found,
        missing_from_parametric=sorted(oracle_set - param_set, key=Triangle.sort_key),
        extra_in_parametric=sorted(param_set - oracle_set, key=Triangle.sort_key),
    )
