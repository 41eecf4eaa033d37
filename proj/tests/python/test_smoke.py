"""Smoke tests for the pybind11 module."""

from fractions import Fraction

import pytest

import puncture_metric as pm


def test_sigma3():
    assert pm.sigma3(1) == 1
    assert pm.sigma3(6) == 252


def test_bell_polynomial_exact():
    # B_{3,2}(t1, t2) = 3 t1 t2
    assert pm.bell_polynomial(3, 2, [Fraction(1, 2), 3]) == Fraction(9, 2)


def test_solve_lambda():
    cov = pm.solve_covering_coefficients(2, 16, -128, 8)
    assert cov.c[2] == Fraction(704)
    assert cov.b[0] == Fraction(1, 16)
    assert cov.b[1] == Fraction(1, 32)
    assert cov.l[0] == Fraction(1, 2)


def test_gamma3_builtin():
    cov = pm.builtin_covering("gamma3", 6)
    assert cov.c[:3] == [Fraction(1), Fraction(3), Fraction(9)]
    assert cov.b[1] == Fraction(-3)


def test_eta_quotient():
    dense = pm.eta_quotient_expansion([("3", 3), (Fraction(1, 3), -3)], 1, 3, 4)
    assert dense == [0, 1, 3, 9, 22]


def test_metric_expansion_close_to_direct():
    cov = pm.builtin_covering("lambda", 10)
    p = 1e-3 + 0j
    exp_v = pm.metric_expansion_eval(cov, p, 1.0, 6)
    direct = pm.metric_direct_eval(cov, p, 1.0)
    assert exp_v.value > 0
    assert abs(exp_v.value - direct.value) / direct.value < 1e-9
    assert len(exp_v.term_breakdown) == 6


def test_picard_bound_decreases():
    cov = pm.builtin_covering("lambda", 8)
    b2 = pm.picard_radius_bound(cov, 1e-2 + 0j, 3)
    b3 = pm.picard_radius_bound(cov, 1e-3 + 0j, 3)
    assert b3.bound < b2.bound
    assert abs(b3.bound - b3.direct_reciprocal) / b3.direct_reciprocal < 1e-6


def test_user_supplied_covering():
    cov = pm.covering_from_coefficients([2, 1], 1)
    assert cov.level_N == 0
    assert cov.b == [Fraction(1, 2), Fraction(-1, 8)]


def test_json_round_trip():
    cov = pm.builtin_covering("lambda", 8)
    text = cov.to_json()
    again = pm.CoveringData.from_json(text)
    assert again.to_json() == text
    assert again.c == cov.c


def test_errors_are_typed():
    with pytest.raises(pm.PunctureError):
        pm.solve_covering_coefficients(6, 1, 1, 5)
    with pytest.raises(pm.PunctureError):
        pm.metric_expansion_eval(pm.builtin_covering("lambda", 6), 0j, 1.0, 3)


def test_verification_suite():
    checks = pm.run_verification(10)
    assert checks and all(passed for _, passed, _ in checks)
