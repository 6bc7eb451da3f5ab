"""Algebraic evaluation, truth valuations and satisfaction checks.

A world is an element of T.  It induces a 0/1 valuation on atoms by
membership in its canonical representative.  A formula evaluates to an
element of T independently of the world; the world only decides the
truth pair of that value.  ``M, w |= f`` means the truth pair is (1,1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

from ..biheyting import (
    dual_pseudocomplement,
    dual_rel_pseudocomplement,
    pseudocomplement,
    rel_pseudocomplement,
)
from ..errors import UnknownAtom
from ..praba import state_join, state_meet
from ..report import PropertyReport
from ..space import (
    DEFAULT_CAP,
    ApproximationSpace,
    ClassState,
    RoughElement,
    _check,
    canonicalize,
    describe,
    representative,
    rough_downset,
    rough_upset,
)
from .formula import (
    Atom,
    CoImpl,
    DualPseudo,
    Empty,
    Formula,
    Impl,
    Join,
    Meet,
    Pseudo,
    SubsetConst,
    Univ,
    bind,
)


def eval_formula(space: ApproximationSpace, f: Formula) -> RoughElement:
    if isinstance(f, Atom):
        return canonicalize(space, [f.name])
    if isinstance(f, SubsetConst):
        return canonicalize(space, f.atoms)
    if isinstance(f, Empty):
        return space.bottom
    if isinstance(f, Univ):
        return space.top
    if isinstance(f, Pseudo):
        return pseudocomplement(space, eval_formula(space, f.child))
    if isinstance(f, DualPseudo):
        return dual_pseudocomplement(space, eval_formula(space, f.child))
    a = eval_formula(space, f.left)
    b = eval_formula(space, f.right)
    if isinstance(f, Join):
        return state_join(a, b)
    if isinstance(f, Meet):
        return state_meet(a, b)
    if isinstance(f, Impl):
        return rel_pseudocomplement(space, a, b)
    if isinstance(f, CoImpl):
        return dual_rel_pseudocomplement(space, a, b)
    raise TypeError(f"not a formula: {f!r}")


@dataclass(frozen=True)
class TruthValuation:
    assignment: dict[str, int]

    def __getitem__(self, atom: str) -> int:
        try:
            return self.assignment[atom]
        except KeyError:
            raise UnknownAtom(atom) from None

    def bits(self, space: ApproximationSpace) -> tuple[int, ...]:
        return tuple(self.assignment[a] for a in space.atoms)


class TruthPair(NamedTuple):
    lower_bit: int
    upper_bit: int

    def __str__(self):
        return f"({self.lower_bit},{self.upper_bit})"


class SatClass(Enum):
    SATISFIABLE = "Satisfiable"
    POSSIBLY_SATISFIABLE = "PossiblySatisfiable"
    NOT_SATISFIABLE = "NotSatisfiable"


def world_valuation(space: ApproximationSpace, world: RoughElement) -> TruthValuation:
    members = representative(space, world)
    return TruthValuation({a: int(a in members) for a in space.atoms})


def class_truth(space: ApproximationSpace, v: TruthValuation, index: int) -> int:
    out = 1
    for i in space.classes[index]:
        out *= v[space.atoms[i]]
    return out


def truth_pair(space: ApproximationSpace, v: TruthValuation, e: RoughElement) -> TruthPair:
    _check(space, e)
    lower = upper = 0
    for ci, s in enumerate(e.states):
        if s is ClassState.EMPTY:
            continue
        t = class_truth(space, v, ci)
        upper = max(upper, t)
        if s is ClassState.FULL:
            lower = max(lower, t)
    return TruthPair(lower, upper)


_CLASSES = {
    (1, 1): SatClass.SATISFIABLE,
    (0, 1): SatClass.POSSIBLY_SATISFIABLE,
    (0, 0): SatClass.NOT_SATISFIABLE,
}


def classify(p: TruthPair) -> SatClass:
    try:
        return _CLASSES[tuple(p)]
    except KeyError:
        raise ValueError(f"{p} is not a valid truth pair") from None


def satisfied(space: ApproximationSpace, world: RoughElement, e: RoughElement) -> bool:
    return truth_pair(space, world_valuation(space, world), e) == (1, 1)


# -- conformance reports ---------------------------------------------------

@dataclass
class Evaluation:
    value: str
    pair: str
    sat: bool
    sat_class: str


@dataclass
class ClauseVerdict:
    """One instance of a satisfaction biconditional: ``lhs iff rhs``."""

    clause: int
    subject: str
    lhs: bool
    rhs: bool

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class ConformanceReport(PropertyReport):
    """Per-clause verdicts for one world.

    Atom clauses are kept apart in ``atom_clauses``: their (0,1) condition
    cannot agree with (1,1) satisfaction, so they never enter ``failures``.
    """

    world: str = ""
    clauses: list[ClauseVerdict] = field(default_factory=list)
    atom_clauses: list[ClauseVerdict] = field(default_factory=list)
    evaluations: dict[str, Evaluation] = field(default_factory=dict)
    neighbourhoods: dict[str, list[dict]] = field(default_factory=dict)

    def record(self, clause: int, subject: str, lhs: bool, rhs: bool):
        v = ClauseVerdict(clause, subject, bool(lhs), bool(rhs))
        self.clauses.append(v)
        self.checked += 1
        if not v.holds:
            self.fail(f"clause {clause}", [subject], f"right side {v.rhs}", f"left side {v.lhs}",
                      "biconditional does not hold at this world")

    def verdict(self, subject: str) -> ClauseVerdict:
        for v in self.clauses:
            if v.subject == subject:
                return v
        raise KeyError(subject)

    def to_dict(self) -> dict:
        d = super().to_dict()
        for key in ("clauses", "atom_clauses"):
            for row, v in zip(d[key], getattr(self, key)):
                row["holds"] = v.holds
        return d


def _compounds(phi: Formula, psi: Formula) -> dict[str, Formula]:
    return {
        "phi": phi,
        "psi": psi,
        "phi Δ psi": Join(phi, psi),
        "phi ∇ psi": Meet(phi, psi),
        "phi -> psi": Impl(phi, psi),
        "phi <- psi": CoImpl(phi, psi),
        "phi*": Pseudo(phi),
        "psi*": Pseudo(psi),
        "phi+": DualPseudo(phi),
        "psi+": DualPseudo(psi),
    }


def _evaluate(space, world, formulas, report):
    v = world_valuation(space, world)
    sat = {}
    for label, f in formulas.items():
        value = eval_formula(space, f)
        p = truth_pair(space, v, value)
        sat[label] = p == (1, 1)
        report.evaluations[label] = Evaluation(describe(space, value), str(p), sat[label], classify(p).value)
    return sat


def _bounds_and_atoms(space, world, report):
    v = world_valuation(space, world)
    top = truth_pair(space, v, space.top) == (1, 1)
    bottom = truth_pair(space, v, space.bottom) == (1, 1)
    report.record(1, "UNIV and not EMPTY", top and not bottom, True)
    for a in space.atoms:
        p = truth_pair(space, v, canonicalize(space, [a]))
        report.atom_clauses.append(ClauseVerdict(2, a, p == (1, 1), p == (0, 1)))


def _start(space, world, suite, phi, psi):
    _check(space, world)
    bind(phi, space)
    bind(psi, space)
    return ConformanceReport(suite, space.name or "space", world=describe(space, world))


def formal_check(space: ApproximationSpace, world: RoughElement, phi: Formula, psi: Formula) -> ConformanceReport:
    """Evaluate the local satisfaction clauses at ``world``.

    Every connective is read truth-functionally at the world itself.
    Violations are recorded in the report and never raised.
    """
    rep = _start(space, world, "formal", phi, psi)
    s = _evaluate(space, world, _compounds(phi, psi), rep)
    _bounds_and_atoms(space, world, rep)
    rep.record(3, "phi Δ psi", s["phi Δ psi"], s["phi"] or s["psi"])
    rep.record(4, "phi ∇ psi", s["phi ∇ psi"], s["phi"] and s["psi"])
    rep.record(5, "phi*", s["phi*"], not s["phi"])
    rep.record(5, "psi*", s["psi*"], not s["psi"])
    rep.record(6, "phi+", s["phi+"], not s["phi"])
    rep.record(6, "psi+", s["psi+"], not s["psi"])
    rep.record(7, "phi -> psi", s["phi -> psi"], not s["phi"] or s["psi"])
    rep.record(8, "phi <- psi", s["phi <- psi"], s["phi"] and not s["psi"])
    return rep


def kripke_check(
    space: ApproximationSpace,
    world: RoughElement,
    phi: Formula,
    psi: Formula,
    cap: int = DEFAULT_CAP,
) -> ConformanceReport:
    """Evaluate the upset/downset satisfaction clauses at ``world``.

    Implication and pseudocomplement quantify over every world above,
    co-implication and dual pseudocomplement over some world below.  Each
    neighbouring world uses its own valuation.  The truth pairs of phi and
    psi across both neighbourhoods are kept in ``neighbourhoods``.
    """
    rep = _start(space, world, "kripke", phi, psi)
    s = _evaluate(space, world, _compounds(phi, psi), rep)
    _bounds_and_atoms(space, world, rep)
    phi_v, psi_v = eval_formula(space, phi), eval_formula(space, psi)

    def local(ws):
        rows = []
        for w in ws:
            v = world_valuation(space, w)
            pp, qp = truth_pair(space, v, phi_v), truth_pair(space, v, psi_v)
            rows.append({"world": describe(space, w), "phi": str(pp), "psi": str(qp),
                         "phi_sat": pp == (1, 1), "psi_sat": qp == (1, 1)})
        return rows

    up = local(rough_upset(space, world, cap))
    down = local(rough_downset(space, world, cap))
    rep.neighbourhoods = {"upset": up, "downset": down}

    rep.record(3, "phi Δ psi", s["phi Δ psi"], s["phi"] or s["psi"])
    rep.record(4, "phi ∇ psi", s["phi ∇ psi"], s["phi"] and s["psi"])
    rep.record(5, "phi -> psi", s["phi -> psi"], all(not r["phi_sat"] or r["psi_sat"] for r in up))
    rep.record(6, "phi <- psi", s["phi <- psi"], any(r["phi_sat"] and not r["psi_sat"] for r in down))
    rep.record(7, "phi*", s["phi*"], all(not r["phi_sat"] for r in up))
    rep.record(7, "psi*", s["psi*"], all(not r["psi_sat"] for r in up))
    rep.record(8, "phi+", s["phi+"], any(not r["phi_sat"] for r in down))
    rep.record(8, "psi+", s["psi+"], any(not r["psi_sat"] for r in down))
    return rep


def format_conformance(rep: ConformanceReport) -> str:
    """Plain-text rendering used by the CLI."""
    lines = [f"{rep.suite} semantics at world {rep.world}"]
    for label, e in rep.evaluations.items():
        mark = "|=" if e.sat else "|/="
        lines.append(f"  {mark} {label:<11} = {e.value}  pair {e.pair}  {e.sat_class}")
    for v in rep.clauses:
        lines.append(f"  clause {v.clause} [{v.subject}]: {'holds' if v.holds else 'VIOLATED'}"
                     f" (lhs {v.lhs}, rhs {v.rhs})")
    bad_atoms = [v.subject for v in rep.atom_clauses if not v.holds]
    lines.append(f"  clause 2 (atoms, reported separately): {len(rep.atom_clauses) - len(bad_atoms)} hold"
                 + (f", violated for {', '.join(bad_atoms)}" if bad_atoms else ""))
    for name, rows in rep.neighbourhoods.items():
        lines.append(f"  {name}:")
        for r in rows:
            lines.append(f"    {r['world']:<24} phi {r['phi']}  psi {r['psi']}")
    lines.append(rep.summary())
    return "\n".join(lines)


__all__ = [
    "ClauseVerdict", "ConformanceReport", "Evaluation", "SatClass", "TruthPair",
    "TruthValuation", "class_truth", "classify", "eval_formula", "formal_check",
    "format_conformance", "kripke_check", "rough_downset", "rough_upset",
    "satisfied", "truth_pair", "world_valuation",
]
