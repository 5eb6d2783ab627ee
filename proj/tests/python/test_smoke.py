"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import weylkit


def test_normal_order_text():
    assert weylkit.normal_order("[X^2,Y^2]") == "4*c*Y*X + 2*c^2"
    assert weylkit.normal_order("{X,Y}", c_value="1") == "2*Y*X + 1"
    assert weylkit.normal_order("X*Y - Y*X - c") == "0"


def test_normal_order_json_terms():
    terms = weylkit.normal_order_terms("X*Y - Y*X")
    assert terms["basis"] == "YX"
    assert terms["terms"] == [
        {"y": 0, "x": 0, "coeff": [{"c": 1, "s": 0, "t": 0, "re": "1/1", "im": "0/1"}]}
    ]


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="position 2"):
        weylkit.normal_order("X^-1")


def test_tables():
    assert weylkit.bernoulli_table(4) == [
        Fraction(1),
        Fraction(-1, 2),
        Fraction(1, 6),
        Fraction(0),
        Fraction(-1, 30),
    ]
    assert weylkit.v_table(9) == [
        Fraction(1, 2),
        Fraction(0),
        Fraction(-1, 4),
        Fraction(0),
        Fraction(1, 2),
        Fraction(0),
        Fraction(-17, 8),
        Fraction(0),
        Fraction(31, 2),
    ]
    assert weylkit.euler_zero_table(3) == [Fraction(-1, 2), Fraction(0), Fraction(1, 4)]


def test_identity_suites():
    names = weylkit.identity_names()
    assert "main-euler" in names and "bd-shift" in names

    report = weylkit.run_identity("main-euler", max_degree=3)
    (suite,) = report["suites"]
    assert suite["name"] == "main-euler"
    assert suite["asserted"] is True
    assert suite["failures"] == []

    report = weylkit.verify_all(max_degree=2, free_cutoff=3, jobs=2)
    by_name = {s["name"]: s for s in report["suites"]}
    assert len(by_name) == len(names)
    for suite in report["suites"]:
        if suite["asserted"]:
            assert suite["failures"] == [], suite["name"]
    # the diagnostic suites report their known mismatches
    assert by_name["bd-shift"]["failures"]
    assert by_name["bch-z1-anti-diagnostic"]["failures"]


def test_bch_report():
    text = weylkit.bch_report(cutoff=4)
    assert "match: yes" in text
    assert "diagnostic" in text
