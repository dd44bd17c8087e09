"""Exact orbit computations for polynomial dynamics over F_q(t)."""

import json

from ._orbitlab import (
    Element,
    Field,
    Map,
    OrbitlabError,
    Twisted,
    binom_mod,
    canonical_height,
    common_iterate,
    intersect_orbits,
    multiplicative_dependence,
    synchronized_collisions,
    verify_all,
)
from ._orbitlab import _run_scenario_json

__all__ = [
    "Element",
    "Field",
    "Map",
    "OrbitlabError",
    "Twisted",
    "binom_mod",
    "canonical_height",
    "common_iterate",
    "error_kind",
    "intersect_orbits",
    "multiplicative_dependence",
    "run_scenario",
    "synchronized_collisions",
    "verify_all",
]


def run_scenario(text, source="<python>", timing=False):
    """Run scenario text; returns (report dict, exit code)."""
    body, code = _run_scenario_json(text, source, timing)
    return json.loads(body), code


def error_kind(exc):
    """Error kind name carried by an OrbitlabError, e.g. 'SyntaxError'."""
    return exc.args[1] if len(exc.args) > 1 else None
