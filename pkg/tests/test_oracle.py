import ast
from pathlib import Path

import pytest

import doubleangle.oracle.search as search_module
from doubleangle.oracle import (
    NAIVE_LIMIT,
    Which,
    brute_force_bisector_family,
    brute_force_family,
    compare,
)
from doubleangle.triangle import verify_double_angle_exact

from bruteforce import double_angle_triples

# frozen from tests/bruteforce.py
FAMILY_45 = [(4, 6, 5), (9, 12, 7), (8, 12, 10), (9, 15, 16), (12, 18, 15), (16, 20, 9)]
BISECTOR_90 = [(12, 18, 15), (24, 36, 30)]


def _tri(ts):
    return [tuple(t) for t in ts]


def test_brute_force_examples():
    assert _tri(brute_force_family(15)) == [(4, 6, 5)]
    assert brute_force_family(14) == []
    assert _tri(brute_force_family(45)) == FAMILY_45
    assert _tri(brute_force_bisector_family(45)) == [(12, 18, 15)]
    assert brute_force_bisector_family(44) == []
    assert _tri(brute_force_bisector_family(90)) == BISECTOR_90
    assert _tri(brute_force_bisector_family(112))[-1] == (36, 48, 28)


@pytest.mark.parametrize("bound", [3, 15, 77, 120])
def test_fast_and_naive_scans_agree(bound):
    assert brute_force_family(bound) == brute_force_family(bound, naive=True)
    assert _tri(brute_force_family(bound)) == double_angle_triples(bound)
    assert brute_force_bisector_family(bound) == brute_force_bisector_family(bound, naive=True)


def test_naive_is_capped():
    with pytest.raises(ValueError):
        brute_force_family(NAIVE_LIMIT + 1, naive=True)


def test_bound_below_three_rejected():
    with pytest.raises(ValueError):
        brute_force_family(2)


def test_monotone():
    big = brute_force_family(600)
    for bound in (15, 100, 333):
        small = brute_force_family(bound)
        assert big[: len(small)] == small
        assert all(t.perimeter > bound for t in big[len(small):])


def test_oracle_members_pass_exact_trig():
    assert all(verify_double_angle_exact(t) for t in brute_force_family(1000))


@pytest.mark.parametrize("which", ["result1", "result2", Which.RESULT1])
def test_compare_verified(which):
    report = compare(100, which)
    assert report.verified
    assert report.missing_from_parametric == [] and report.extra_in_parametric == []


def test_compare_small():
    report = compare(15, Which.RESULT1)
    assert _tri(report.found) == [(4, 6, 5)] and report.verified


def test_compare_reports_differences(monkeypatch):
    import doubleangle.oracle as oracle

    real = oracle.enumerate_family
    monkeypatch.setattr(oracle, "enumerate_family", lambda bound: real(bound)[1:])
    report = compare(45)
    assert not report.verified
    assert _tri(report.missing_from_parametric) == [(4, 6, 5)]


def test_search_does_not_import_family():
    tree = ast.parse(Path(search_module.__file__).read_text())
    imported = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom):
            imported.add(node.module or "")
        elif isinstance(node, ast.Import):
            imported.update(alias.name for alias in node.names)
    assert not any("family" in name for name in imported)
