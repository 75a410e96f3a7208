"""Justification logics J, JD, JT, J4, JD4 and LP.

Models, proofs and constant specifications are plain dicts in the same
shape as the JSON files read by the ``jl`` tool.
"""

import json

from . import _jlogic
from ._jlogic import FormatError, ParseError, logics, parse_formula, parse_term

__all__ = [
    "FormatError",
    "ParseError",
    "check_proof",
    "decide",
    "eval",
    "evidence_contains",
    "logics",
    "parse_formula",
    "parse_term",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def check_proof(proof):
    """List of (line, message) pairs; empty when the proof is accepted."""
    return _jlogic.check_proof(_text(proof))


def eval(model, world, formula):
    return _jlogic.eval(_text(model), world, formula)


def evidence_contains(model, term, formula, world):
    return _jlogic.evidence_contains(_text(model), term, formula, world)


def decide(logic, formula, mode="sat", cs=None, max_worlds=None, max_base=None):
    """Bounded search. The result's "model" entry, when present, is a dict."""
    out = _jlogic.decide(
        logic,
        formula,
        mode,
        None if cs is None else _text(cs),
        max_worlds,
        max_base,
    )
    if "model" in out:
        out["model"] = json.loads(out["model"])
    return out
