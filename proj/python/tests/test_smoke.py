import pytest

import jlogic

ONE_WORLD_LP = {
    "logic": "LP",
    "cs": {"kind": "total"},
    "worlds": ["w0"],
    "R": [["w0", "w0"]],
    "base": [{"term": "x1", "formula": "p1", "world": "w0"}],
    "valuation": [{"world": "w0", "atom": "p1"}],
}


def test_parse_prints_canonical_form():
    assert jlogic.parse_formula("x1:p1->p1") == "x1 : p1 -> p1"
    assert jlogic.parse_term("x1*x2+c1") == "x1 * x2 + c1"
    assert jlogic.logics() == ["J", "JD", "JT", "J4", "JD4", "LP"]


def test_parse_error_is_a_value_error():
    with pytest.raises(jlogic.ParseError):
        jlogic.parse_formula("x1:")
    with pytest.raises(ValueError):
        jlogic.parse_formula("p1 -> -> p2")


def test_check_proof():
    proof = {
        "logic": "J",
        "cs": {"kind": "total"},
        "lines": [
            {"formula": "c1 : (p1 -> (p2 -> p1))", "rule": "an:c1,0,p1 -> (p2 -> p1)"},
            {"formula": "c1:(p1->(p2->p1)) -> (x1:p1 -> c1*x1:(p2->p1))", "rule": "axiom:j2"},
            {"formula": "x1:p1 -> c1*x1:(p2->p1)", "rule": "mp:1,2"},
        ],
    }
    assert jlogic.check_proof(proof) == []
    proof["lines"] = [{"formula": "p1 -> p1", "rule": "axiom:cl1"}]
    assert jlogic.check_proof(proof) == [(1, "not an instance of cl1")]


def test_eval_and_evidence():
    assert jlogic.eval(ONE_WORLD_LP, "w0", "x1:p1")
    assert not jlogic.eval(ONE_WORLD_LP, "w0", "x2:p1")
    assert jlogic.evidence_contains(ONE_WORLD_LP, "!x1", "x1:p1", "w0")
    assert not jlogic.evidence_contains(ONE_WORLD_LP, "x2", "p1", "w0")


def test_invalid_model_is_rejected():
    with pytest.raises(jlogic.FormatError, match="serial"):
        jlogic.eval({"logic": "JD", "worlds": ["w0"]}, "w0", "p1")
    with pytest.raises(jlogic.FormatError, match="unknown world"):
        jlogic.eval(ONE_WORLD_LP, "w3", "p1")


def test_decide():
    valid = jlogic.decide("J", "x1:(p1->p2) -> (x2:p1 -> x1*x2:p2)", mode="valid")
    assert valid["verdict"] == "valid within bounds"
    counter = jlogic.decide("J", "x1:p1 -> p1", mode="valid", max_worlds=3, max_base=6)
    assert counter["verdict"] == "countermodel"
    assert not jlogic.eval(counter["model"], counter["world"], "x1:p1 -> p1")
    assert jlogic.decide("JT", "x1:p1 -> p1", mode="valid")["verdict"] == "valid within bounds"
    sat = jlogic.decide("J", "x1:p1 & ~p1")
    assert sat["verdict"] == "satisfiable"
    assert jlogic.eval(sat["model"], sat["world"], "x1:p1 & ~p1")
    assert jlogic.decide("LP", "p1 & ~p1")["verdict"] == "unsatisfiable within bounds"
    schematic = {"kind": "schematic", "map": {"c1": ["cl1"]}}
    assert jlogic.decide("J", "~c1:(p1->p2->p1)", cs=schematic)["verdict"].startswith("unsat")
    with pytest.raises(ValueError):
        jlogic.decide("J", "p1", mode="maybe")
