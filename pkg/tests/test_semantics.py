import itertools
import random

import pytest

from rough_biheyting import biheyting as bh
from rough_biheyting.errors import SpaceMismatch
from rough_biheyting.logic import (
    SatClass,
    TruthPair,
    TruthValuation,
    class_truth,
    classify,
    eval_formula,
    formal_check,
    kripke_check,
    parse_formula,
    random_formula,
    rough_upset,
    satisfied,
    truth_pair,
    world_valuation,
)
from rough_biheyting.logic.formula import CoImpl, DualPseudo, Impl, Join, Meet, Pseudo
from rough_biheyting.praba import state_join, state_meet
from rough_biheyting.space import describe, enumerate_T

FORMAL_PHI = "[x1,x3,x5] <- [x1]"
FORMAL_PSI = "[x1,x3,x2] /\\ [x2,x4,x6,x5]"
KRIPKE_PHI = "([x1,x3,x2] -> [x2,x4,x6]) -> ([x1,x3,x5] <- [x5])"
KRIPKE_PSI = "[x2,x4,x6,x5] /\\ [x1,x2,x5]"


def test_eval_examples(s6, rs6):
    assert eval_formula(s6, parse_formula(KRIPKE_PHI)) == rs6("X1")
    assert eval_formula(s6, parse_formula(KRIPKE_PSI)) == rs6("{x2} ∪ X3")
    assert eval_formula(s6, parse_formula("UNIV -> UNIV")) == s6.top
    assert eval_formula(s6, parse_formula("EMPTY")) == s6.bottom
    assert eval_formula(s6, parse_formula("x3")) == rs6("{x1}")


def test_world_valuation(s6, rs6):
    v = world_valuation(s6, rs6("X1 ∪ {x2} ∪ X3"))
    assert v.bits(s6) == (1, 1, 1, 0, 1, 0)
    assert [class_truth(s6, v, i) for i in range(3)] == [1, 0, 1]
    assert set(world_valuation(s6, s6.top).assignment.values()) == {1}
    assert set(world_valuation(s6, s6.bottom).assignment.values()) == {0}
    ones = world_valuation(s6, s6.top)
    assert all(class_truth(s6, ones, i) == 1 for i in range(3))


def test_truth_pairs(s6, rs6):
    v = world_valuation(s6, rs6("{x1} ∪ X3"))
    assert truth_pair(s6, v, rs6("X1")) == (0, 0)
    assert truth_pair(s6, v, rs6("{x2} ∪ X3")) == (1, 1)
    assert truth_pair(s6, v, s6.bottom) == (0, 0)
    assert str(TruthPair(0, 1)) == "(0,1)"


def test_truth_pair_space_check(s4, s6):
    with pytest.raises(SpaceMismatch):
        truth_pair(s6, world_valuation(s6, s6.top), s4.top)


def test_classify():
    assert classify(TruthPair(1, 1)) is SatClass.SATISFIABLE
    assert classify(TruthPair(0, 1)) is SatClass.POSSIBLY_SATISFIABLE
    assert classify(TruthPair(0, 0)) is SatClass.NOT_SATISFIABLE
    with pytest.raises(ValueError):
        classify(TruthPair(1, 0))


def test_truth_pair_never_one_zero_all_valuations_s4(s4):
    T = enumerate_T(s4)
    for bits in itertools.product((0, 1), repeat=len(s4.atoms)):
        v = TruthValuation(dict(zip(s4.atoms, bits)))
        for e in T:
            assert truth_pair(s4, v, e) != (1, 0)


def test_truth_pair_never_one_zero_sampled_s6(s6):
    rng = random.Random(5)
    T = enumerate_T(s6)
    for _ in range(64):
        v = TruthValuation({a: rng.randint(0, 1) for a in s6.atoms})
        for e in T:
            assert truth_pair(s6, v, e) != (1, 0)


def test_three_way_partition_at_every_world(s6):
    T = enumerate_T(s6)
    for w in T:
        v = world_valuation(s6, w)
        classes = [classify(truth_pair(s6, v, e)) for e in T]
        assert len(classes) == len(T)
        assert set(classes) <= set(SatClass)


def test_upset_and_downset_are_order_closed(s6):
    from rough_biheyting.space import leq, rough_downset
    T = enumerate_T(s6)
    for e in T:
        up, down = rough_upset(s6, e), rough_downset(s6, e)
        assert e in up and e in down
        for y in up:
            assert all(z in up for z in T if leq(y, z))
        for y in down:
            assert all(z in down for z in T if leq(z, y))


def test_eval_is_structural(s6):
    rng = random.Random(9)
    ops = {
        Join: lambda a, b: state_join(a, b),
        Meet: lambda a, b: state_meet(a, b),
        Impl: lambda a, b: bh.rel_pseudocomplement(s6, a, b),
        CoImpl: lambda a, b: bh.dual_rel_pseudocomplement(s6, a, b),
    }
    for _ in range(300):
        f = random_formula(rng, list(s6.atoms), depth=4)
        got = eval_formula(s6, f)
        if type(f) in ops:
            assert got == ops[type(f)](eval_formula(s6, f.left), eval_formula(s6, f.right))
        elif isinstance(f, Pseudo):
            assert got == bh.pseudocomplement(s6, eval_formula(s6, f.child))
        elif isinstance(f, DualPseudo):
            assert got == bh.dual_pseudocomplement(s6, eval_formula(s6, f.child))


def _values(rep):
    return {k: (e.value, e.pair) for k, e in rep.evaluations.items()}


def test_first_worked_world_formal(s6, rs6):
    rep = formal_check(s6, rs6("X1 ∪ {x2} ∪ X3"), parse_formula(FORMAL_PHI), parse_formula(FORMAL_PSI))
    assert _values(rep) == {
        "phi": ("X1 ∪ X3", "(1,1)"),
        "psi": ("{x2}", "(0,0)"),
        "phi Δ psi": ("X1 ∪ {x2} ∪ X3", "(1,1)"),
        "phi ∇ psi": ("∅", "(0,0)"),
        "phi -> psi": ("X2", "(0,0)"),
        "phi <- psi": ("X1 ∪ X3", "(1,1)"),
        "phi*": ("X2", "(0,0)"),
        "phi+": ("X2", "(0,0)"),
        "psi*": ("X1 ∪ X3", "(1,1)"),
        "psi+": ("U", "(1,1)"),
    }
    assert rep.passed and all(v.holds for v in rep.clauses)
    assert {v.clause for v in rep.clauses} == {1, 3, 4, 5, 6, 7, 8}


def test_second_worked_world_kripke(s6, rs6):
    w = rs6("{x1} ∪ X3")
    rep = kripke_check(s6, w, parse_formula(KRIPKE_PHI), parse_formula(KRIPKE_PSI))
    vals = _values(rep)
    assert vals["phi"] == ("X1", "(0,0)") and vals["psi"] == ("{x2} ∪ X3", "(1,1)")
    assert vals["phi Δ psi"][0] == "X1 ∪ {x2} ∪ X3"
    assert vals["phi ∇ psi"] == ("∅", "(0,0)")
    assert vals["phi -> psi"] == ("X2 ∪ X3", "(1,1)")
    assert vals["phi <- psi"] == ("X1", "(0,0)")
    assert vals["phi*"][0] == vals["phi+"][0] == "X2 ∪ X3"
    assert vals["psi*"][0] == "X1"
    assert vals["psi+"][0] == "X1 ∪ X2"   # not the misprinted X1 ∪ {x4} ∪ {x6}

    up = {r["world"]: (r["phi"], r["psi"]) for r in rep.neighbourhoods["upset"]}
    assert up == {
        "U": ("(1,1)", "(1,1)"),
        "X1 ∪ {x2} ∪ X3": ("(1,1)", "(1,1)"),
        "{x1} ∪ X2 ∪ X3": ("(0,0)", "(1,1)"),
        "{x1} ∪ {x2} ∪ X3": ("(0,0)", "(1,1)"),
        "X1 ∪ X3": ("(1,1)", "(1,1)"),
        "{x1} ∪ X3": ("(0,0)", "(1,1)"),
    }
    down = {r["world"]: (r["phi"], r["psi"]) for r in rep.neighbourhoods["downset"]}
    assert down == {
        "{x1} ∪ X3": ("(0,0)", "(1,1)"),
        "X3": ("(0,0)", "(1,1)"),
        "{x1}": ("(0,0)", "(0,0)"),
        "∅": ("(0,0)", "(0,0)"),
    }
    sat = {k: e.sat for k, e in rep.evaluations.items()}
    assert sat == {"phi": False, "psi": True, "phi Δ psi": True, "phi ∇ psi": False,
                   "phi -> psi": True, "phi <- psi": False, "phi*": True, "psi*": False,
                   "phi+": True, "psi+": False}
    for subject in ("phi Δ psi", "phi ∇ psi", "phi -> psi", "phi <- psi", "psi*", "phi+"):
        assert rep.verdict(subject).holds
    # honest evaluation over the whole upset / downset
    assert not rep.verdict("phi*").holds
    assert not rep.verdict("psi+").holds
    assert sorted(f.inputs[0] for f in rep.failures) == ["phi*", "psi+"]


def test_univ_clause_depends_on_full_classes(s6, rs6):
    u = parse_formula("UNIV")
    for w in enumerate_T(s6):
        rep = formal_check(s6, w, u, u)
        has_true_class = any(class_truth(s6, world_valuation(s6, w), i) for i in range(3))
        assert rep.verdict("UNIV and not EMPTY").holds == has_true_class
        assert satisfied(s6, w, s6.top) == has_true_class
    assert formal_check(s6, s6.top, u, u).passed
    assert not formal_check(s6, s6.bottom, u, u).verdict("UNIV and not EMPTY").holds


def test_atom_clauses_recorded_separately(s6, rs6):
    rep = formal_check(s6, rs6("X1 ∪ {x2} ∪ X3"), parse_formula(FORMAL_PHI), parse_formula(FORMAL_PSI))
    assert [v.subject for v in rep.atom_clauses] == list(s6.atoms)
    assert not any(f.prop == "clause 2" for f in rep.failures)


def test_checks_never_raise_on_any_world(s4):
    rng = random.Random(1)
    for w in enumerate_T(s4):
        for _ in range(5):
            phi, psi = (random_formula(rng, list(s4.atoms), 3) for _ in range(2))
            for check in (formal_check, kripke_check):
                rep = check(s4, w, phi, psi)
                assert rep.checked == 9
                assert rep.world == describe(s4, w)
                d = rep.to_dict()
                assert len(d["clauses"]) == 9 and "holds" in d["clauses"][0]
