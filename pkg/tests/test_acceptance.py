"""Acceptance criteria: one test per criterion, exact, within its time budget.

Each test runs the corresponding verification suite(s) at the criterion's
stated size, asserts every check passed exactly, and prints one line.
Run with `pytest tests/test_acceptance.py -v -s` to see the lines live.
"""

from __future__ import annotations

import time

from fpskit.suites import run_suite

_BUDGETS = {
    1: 1.0,
    2: 1.0,
    3: 5.0,
    4: 60.0,
    5: 30.0,
    6: 60.0,
    7: 60.0,
    8: 60.0,
    9: 60.0,
    10: 60.0,
    11: 120.0,
    12: 60.0,
}


def _run(criterion: int, description: str, suite_names: list[str]):
    start = time.perf_counter()
    reports = [run_suite(name) for name in suite_names]
    elapsed = time.perf_counter() - start
    failures = [
        f"{report.suite}: {check['name']}"
        for report in reports
        for check in report.checks
        if not check["passed"]
    ]
    status = "PASS" if not failures and elapsed <= _BUDGETS[criterion] else "FAIL"
    print(f"criterion {criterion:2d} ({description}): {status} [{elapsed:.2f}s]")
    assert not failures, f"criterion {criterion} failed: {failures}"
    assert elapsed <= _BUDGETS[criterion], (
        f"criterion {criterion} overran its budget: {elapsed:.2f}s"
    )


def test_criterion_01_reversion_closed_forms():
    _run(1, "reversion closed forms", ["thm3"])


def test_criterion_02_squared_sine():
    _run(2, "squared-sine reversion and ODE", ["sin2"])


def test_criterion_03_triple_agreement():
    _run(3, "ladder/Newton/formula triple agreement", ["thm2"])


def test_criterion_04_coefficient_identity():
    _run(4, "power-coefficient identity", ["thm1"])


def test_criterion_05_generating_identity():
    _run(5, "symbolic generating identity and word oracle", ["thm4"])


def test_criterion_06_exponential_closed_forms():
    _run(6, "exponential ladder closed forms", ["exp"])


def test_criterion_07_deformation_group():
    _run(7, "deformation group and endpoints", ["prop52"])


def test_criterion_08_degree_bound_and_s1_freeness():
    _run(8, "iterate degree bound; s1-free determinants", ["thm5i", "thm5ii"])


def test_criterion_09_hankel_invariances():
    _run(9, "Hankel invariances and condensation", ["dodgson"])


def test_criterion_10_continued_fractions():
    _run(10, "continued fractions, minors, path systems", ["thm8", "lgv"])


def test_criterion_11_combinatorial_bijections():
    _run(11, "combinatorial bijections", ["bijections", "prop72"])


def test_criterion_12_iterate_interpolation():
    _run(12, "composition-iterate interpolation", ["iterate"])
