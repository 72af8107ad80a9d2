"""Smoke tests for the Python bindings: import, wrap, and round-trip."""

import json

import pytest

import anderson_ring as ar


def test_predicates():
    assert ar.check_predicate("Z6", "vnr") is True
    assert ar.check_predicate("Z6", "local") is False
    assert ar.check_predicate("Z4", "local") is True
    assert ar.check_predicate("Z5", "field") is True
    with pytest.raises(ValueError):
        ar.check_predicate("Z6", "noetherian")
    with pytest.raises(ValueError):
        ar.check_predicate("Z0", "vnr")


def test_member_outcomes():
    assert ar.member("(X+2)/(2X+1)@Z6:A", "(2)+X") == "member"
    assert ar.member("(X+2)/(2X+1)@Z6:A", "(3)+X") == "not-member"
    assert ar.member("(2X)/(1)@Z4:A", "[X^2]") == "not-member"
    assert ar.member("(2X)/(1)@Z4:A", "[X^2+2X]", degree=3) == \
        "not-found-up-to(3)"


def test_spectrum_json_parses():
    report = json.loads(ar.spectrum_json("Z6", samples=6, seed=2))
    assert len(report["tops"]) == 2
    assert report["krull_dimension"] == 1
    assert all(chain["separator_in_top"] for chain in report["chains"])
    # Deterministic given the seed.
    assert ar.spectrum_json("Z6", samples=6, seed=2) == \
        ar.spectrum_json("Z6", samples=6, seed=2)


def test_gen_search_json():
    found = json.loads(ar.gen_search_json("Z6", "(2)+X", degree=1))
    assert found["found"] is True
    assert found["certificate"]["generator"] == "X+2"
    assert found["candidates_examined"] == 9

    missing = json.loads(ar.gen_search_json("Z4", "(2)+X", degree=3))
    assert missing["found"] is False
    assert missing["candidates_examined"] == 128


def test_theorem_json():
    verified = json.loads(ar.theorem_json("pir2", "Z6", degree=1))
    assert verified["outcome"] == "verified"
    bounded = json.loads(ar.theorem_json("pir2", "Z4", degree=2))
    assert bounded["outcome"] == "bounded-consistent(2)"
    gaussian = json.loads(ar.theorem_json("gaussian", "Z6", trials=50))
    assert gaussian["verdict"]["outcome"] == "verified"
    assert gaussian["violations"] == []


def test_run_is_the_cli():
    code, text = ar.run(["spectrum", "Z30"])
    assert code == 0
    doc = json.loads(text)
    assert doc["command"] == "spectrum"
    assert doc["outcome"] == "maximal=3"

    code, text = ar.run(["spectrum", "NOTARING"])
    assert code == 2
    assert "error" in json.loads(text)
