"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import gstirling


def test_exact_eval():
    assert gstirling.eval_exact(-3, 2) == Fraction(85, 216)
    assert gstirling.eval_exact(5, 2) == -50
    assert gstirling.eval_exact(-5, 1, method="knuth") == Fraction(-137, 7200)
    assert gstirling.eval_exact(4, 2, method="partition") == 11


def test_methods_agree():
    for n in range(-4, 5):
        for k in range(0, 5):
            expected = gstirling.eval_exact(n, k)
            assert gstirling.eval_exact(n, k, method="defn") == expected
            assert gstirling.eval_exact(n, k, method="symfunc") == expected


def test_defn_coeffs():
    assert gstirling.defn_coeffs(-1, 4) == [1, -1, 1, -1, 1]
    assert gstirling.defn_coeffs(3, 3) == [0, 2, -3, 1]


def test_table_cells():
    cells = dict()
    for n, k, v in gstirling.table_cells(-2, 2, 3):
        cells[(n, k)] = v
    assert cells[(-2, 2)] == Fraction(7, 8)
    assert cells[(2, 1)] == -1
    assert len(cells) == 5 * 4


def test_partition_enumeration():
    assert gstirling.enum_bounded(2, 2) == [[2, 2], [2, 1], [1, 1]]
    assert gstirling.enum_distinct_below(2, 4) == [[3, 2], [3, 1], [2, 1]]
    assert gstirling.enum_weight(4, 2) == [[3, 1], [2, 2]]
    assert gstirling.enum_compositions(2, 2) == [[2, 0], [1, 1], [0, 2]]


def test_symmetric_functions():
    assert gstirling.complete_h(2, [Fraction(-1), Fraction(-1, 2)]) == Fraction(7, 4)
    assert gstirling.elementary_e(2, [-1, -2, -3]) == 11
    assert gstirling.genfunc_h_coeffs(["-1"], 3) == [1, -1, 1, -1]


def test_second_kind_and_harmonics():
    assert gstirling.stirling2(4, 2) == 7
    assert gstirling.nested_harmonic(2, 2) == Fraction(7, 4)
    assert gstirling.alternating_sum(4) == 24


def test_real_degree():
    assert gstirling.eval_real(0.5, 0) == pytest.approx(0.5641895835477563, abs=1e-10)
    assert gstirling.polygamma(0, 1.0) == pytest.approx(-0.5772156649015329, abs=1e-10)
    series = gstirling.lower_factorial_series(-2 + 1e-6, 3)
    assert series[1] == pytest.approx(-0.75, abs=1e-4)
    report = gstirling.real_identity_checks(0.5, 6, 1e-8)
    assert report["passed"]


def test_real_degree_rejects_integers():
    with pytest.raises(ValueError):
        gstirling.eval_real(2.0, 1)


def test_verify():
    ok, results = gstirling.verify(-4, 4, 6, only="harmonic")
    assert ok
    assert all(r["passed"] for r in results)


def test_native_table_round_trip():
    text = gstirling.native_table(-2, 2, 3, created="2026-08-11T00:00:00Z")
    assert text.startswith("gstirling-table 1\n")
    assert "-2,1,-3/4" in text
