"""Rough-set semiring over a finite approximation space, with its bi-Heyting operators."""
from .biheyting import (
    brute_force_oracle,
    dual_pseudocomplement,
    dual_rel_pseudocomplement,
    pseudocomplement,
    rel_pseudocomplement,
)
from .errors import (
    FormulaSyntaxError,
    RoughSetError,
    SizeLimitExceeded,
    SpaceError,
    SpaceMismatch,
    UnknownAtom,
)
from .praba import praba_join_sets, praba_meet_sets, state_join, state_meet
from .report import Failure, PropertyReport
from .space import (
    ApproximationSpace,
    ClassState,
    RoughElement,
    build_space,
    canonicalize,
    enumerate_T,
    leq,
    load_space,
    random_space,
    representative,
    space_s4,
    space_s6,
)

__version__ = "0.1.0"

__all__ = [
    "ApproximationSpace", "ClassState", "Failure", "FormulaSyntaxError", "PropertyReport",
    "RoughElement", "RoughSetError", "SizeLimitExceeded", "SpaceError", "SpaceMismatch",
    "UnknownAtom", "brute_force_oracle", "build_space", "canonicalize",
    "dual_pseudocomplement", "dual_rel_pseudocomplement", "enumerate_T", "leq",
    "load_space", "praba_join_sets", "praba_meet_sets", "pseudocomplement",
    "random_space", "rel_pseudocomplement", "representative", "space_s4", "space_s6",
    "state_join", "state_meet",
]
