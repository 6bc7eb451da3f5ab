"""Formula syntax and the three semantics (algebraic, formal, Kripke)."""
from .formula import (
    Atom, CoImpl, DualPseudo, Empty, Formula, Impl, Join, Meet, Pseudo, SubsetConst, Univ,
    atoms_of, bind, parse_formula, random_formula, to_text, tokenize,
)
from .semantics import (
    ClauseVerdict, ConformanceReport, Evaluation, SatClass, TruthPair, TruthValuation,
    class_truth, classify, eval_formula, formal_check, format_conformance, kripke_check,
    rough_downset, rough_upset, satisfied, truth_pair, world_valuation,
)

__all__ = [
    "Atom", "CoImpl", "DualPseudo", "Empty", "Formula", "Impl", "Join", "Meet", "Pseudo",
    "SubsetConst", "Univ", "atoms_of", "bind", "parse_formula", "random_formula", "to_text",
    "tokenize", "ClauseVerdict", "ConformanceReport", "Evaluation", "SatClass", "TruthPair",
    "TruthValuation", "class_truth", "classify", "eval_formula", "formal_check",
    "format_conformance", "kripke_check", "rough_downset", "rough_upset", "satisfied",
    "truth_pair", "world_valuation",
]
