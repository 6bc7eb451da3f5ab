"""Digitised operation tables for the S4 and S6 example spaces.

Cells use the union-of-classes notation read by
:func:`rough_biheyting.space.parse_class_notation`.  Unary tables group
several inputs that share one output; binary tables list rows (first
operand) against columns (second operand).
"""
from __future__ import annotations

import json
from importlib import resources

from ..biheyting import CLOSED_FORMS, brute_force_oracle
from ..report import PropertyReport
from ..space import ApproximationSpace, enumerate_T, format_set, parse_class_notation, representative

OP_KINDS = {"pseudo": "pseudo", "dualpseudo": "dual_pseudo", "impl": "rel", "coimpl": "dual_rel"}


def fixture_names() -> list[str]:
    return sorted(p.name for p in resources.files(__name__).iterdir() if p.name.endswith(".json"))


def load_fixture(name: str) -> dict:
    return json.loads(resources.files(__name__).joinpath(name).read_text(encoding="utf-8"))


def fixtures_for(space_name: str) -> list[dict]:
    return [f for f in map(load_fixture, fixture_names()) if f["space"] == space_name]


def fixture_cells(space: ApproximationSpace, fixture: dict):
    """Yield ``(operands, expected)`` with both sides parsed into T."""
    p = lambda s: parse_class_notation(space, s)  # noqa: E731
    if "groups" in fixture:
        for g in fixture["groups"]:
            out = p(g["output"])
            for x in g["inputs"]:
                yield (p(x),), out
    else:
        cols = [p(c) for c in fixture["columns"]]
        for row in fixture["rows"]:
            a = p(row["row"])
            for b, cell in zip(cols, row["cells"]):
                yield (a, b), p(cell)


def check_fixture(space: ApproximationSpace, fixture: dict) -> PropertyReport:
    """Diff a digitised table against the closed-form operator.

    Every mismatch carries the oracle's verdict in ``note``.  A table that
    does not cover each operand (pair) of T exactly once is also reported.
    """
    kind = OP_KINDS[fixture["op"]]
    op = CLOSED_FORMS[kind]
    rep = PropertyReport(f"fixture table {fixture['table']} ({fixture['op']})", space.name or "space")
    r = lambda e: format_set(space, representative(space, e))  # noqa: E731
    seen = {}
    for args, expected in fixture_cells(space, fixture):
        rep.checked += 1
        key = tuple(a.states for a in args)
        seen[key] = seen.get(key, 0) + 1
        got = op(space, *args)
        if got == expected:
            continue
        oracle = brute_force_oracle(space, kind, *args)
        if oracle == got:
            verdict = "oracle agrees with implementation: fixture cell is wrong"
        elif oracle == expected:
            verdict = "oracle agrees with fixture: implementation is wrong"
        else:
            verdict = f"oracle disagrees with both (oracle gives {r(oracle)})"
        rep.fail(kind, [r(a) for a in args], r(expected), r(got), verdict)

    T = enumerate_T(space)
    arity = 1 if "groups" in fixture else 2
    expected_keys = {tuple(e.states for e in combo) for combo in _combos(T, arity)}
    for key in expected_keys - seen.keys():
        rep.fail("coverage", [r(space.element(s)) for s in key], "present", "missing")
    for key, count in seen.items():
        if count > 1:
            rep.fail("coverage", [r(space.element(s)) for s in key], "listed once", f"listed {count} times")
    return rep


def _combos(T, arity):
    if arity == 1:
        return [(a,) for a in T]
    return [(a, b) for a in T for b in T]


def split_errata(space: ApproximationSpace, fixture: dict, rep: PropertyReport):
    """Partition ``rep.failures`` into documented errata and everything else.

    A failure counts as a documented erratum only when the table lists that
    cell under ``errata`` and the oracle sided with the implementation.
    """
    r = lambda s: format_set(space, representative(space, parse_class_notation(space, s)))  # noqa: E731
    listed = {(r(e["row"]), r(e["column"])) for e in fixture.get("errata", [])}
    known, other = [], []
    for f in rep.failures:
        is_known = tuple(f.inputs) in listed and f.note.endswith("fixture cell is wrong")
        (known if is_known else other).append(f)
    return known, other
