"""Exact computations with weak bialgebras, weak Hopf algebras and bialgebroids."""

import json as _json

from ._wqg import (
    ParseError,
    SchemaError,
    Structure,
    WqgError,
    check_json,
    dual,
    from_bialgebroid,
    load,
    monoid_bialgebra,
    pair_groupoid_algebra,
    pair_groupoid_function_algebra,
    parse,
    run_cli,
    save,
    solve_antipode,
    to_bialgebroid,
)


def check(structure, all_witnesses=False):
    """Axiom report of a weak bialgebra as a dict."""
    return _json.loads(check_json(structure, all_witnesses))


__all__ = [
    "ParseError",
    "SchemaError",
    "Structure",
    "WqgError",
    "check",
    "check_json",
    "dual",
    "from_bialgebroid",
    "load",
    "monoid_bialgebra",
    "pair_groupoid_algebra",
    "pair_groupoid_function_algebra",
    "parse",
    "run_cli",
    "save",
    "solve_antipode",
    "to_bialgebroid",
]
