"""Smoke tests for the python bindings: exactness across the boundary and
agreement with the documented CLI behavior."""

import json

import pytest

import tbtop


def test_circle_helpers_are_exact():
    assert tbtop.circle_normalize("3", "2") == "1/2"
    assert tbtop.circle_add("1/2", "2/3") == "1/6"
    assert tbtop.circle_scale("-1", "1/3") == "2/3"
    assert tbtop.circle_dist_to_zero("3/4") == "1/4"
    big = tbtop.circle_normalize("1", str(5**100))
    assert big == "1/" + str(5**100)


def test_certify_factorial_bound():
    out = tbtop.run_dict(
        "certify",
        {
            "theorem": "5.2",
            "character": {
                "kind": "padic",
                "p": 2,
                "digits": {
                    "kind": "indicator",
                    "set": {"kind": "subsetOfFac", "rule": {"kind": "all"}},
                },
            },
            "sequence": {
                "kind": "factorialPruefer",
                "p": 2,
                "digits": {"kind": "const", "v": 1},
            },
            "nMax": 7,
        },
    )
    cert = out["certificate"]
    assert cert["verdict"] == "certified"
    assert cert["range"] == [3, 7]
    assert cert["values"][0]["bound"] == "3/8"
    # Every stored value respects its bound as an exact fraction.
    from fractions import Fraction

    for entry in cert["values"]:
        value = Fraction(entry["value"])
        dist = min(value, 1 - value)
        assert dist <= Fraction(entry["bound"])


def test_eval_matches_digit_formula():
    out = tbtop.run_dict(
        "eval",
        {
            "character": {
                "kind": "padic",
                "p": 2,
                "digits": {
                    "kind": "indicator",
                    "set": {"kind": "subsetOfFac", "rule": {"kind": "all"}},
                },
            },
            "element": {"kind": "pruefer", "p": 2, "a": "1", "n": 3},
        },
    )
    assert out["value"] == "3/4"


def test_snf_exposes_transforms():
    out = tbtop.run_dict("snf", {"matrix": [[2, 4], [6, 8]]})
    assert out["diagonal"] == ["2", "4"]
    assert len(out["U"]) == 2 and len(out["V"]) == 2


def test_reports_are_deterministic():
    params = json.dumps({"matrix": [[2, 0], [0, 3]]})
    assert tbtop.run_report("snf", params) == tbtop.run_report("snf", params)


def test_input_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        tbtop.run("snf", json.dumps({"matrix": [[2, 4], [6]]}))
    with pytest.raises(ValueError):
        tbtop.circle_normalize("1", "0")
