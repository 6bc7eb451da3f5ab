"""Praba join and meet, on subsets of the universe and on elements of T.

The set-level procedures follow the textbook construction literally: a
union corrected by an induced-weight test for the join, and the
contained-classes-plus-pivots rule for the meet.  The state-level
operations are the componentwise max/min on class states and are the
semantic ground truth the set-level ones are tested against.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import SizeLimitExceeded
from .report import PropertyReport
from .space import (
    ApproximationSpace,
    RoughElement,
    _check,
    canonicalize,
    format_set,
    representative,
)


@dataclass(frozen=True)
class PivotSet:
    pivots: frozenset[str]
    classes_hit: frozenset[int]


def _full_classes(space: ApproximationSpace, members: frozenset[int]) -> list[int]:
    return [ci for ci, c in enumerate(space.classes) if members.issuperset(c)]


def induced_weight(space: ApproximationSpace, X: Iterable[str]) -> int:
    """|X| plus the number of equivalence classes lying entirely inside X."""
    members = space.indices(X)
    return len(members) + len(_full_classes(space, members))


def _iw(space, members):
    return len(members) + len(_full_classes(space, members))


def praba_join_sets(
    space: ApproximationSpace,
    X: Iterable[str],
    Y: Iterable[str],
    with_iterations: bool = False,
):
    """Praba join ``X Δ Y``.

    While the induced weight of the union exceeds the inclusion-exclusion
    value, some class is completed only by putting X and Y together; Y's
    members of every such class are dropped and the test is repeated.
    With ``with_iterations`` the number of correction rounds is returned
    alongside the result.
    """
    xs = space.indices(X)
    ys = space.indices(Y)
    rounds = 0
    while True:
        union = xs | ys
        if _iw(space, union) == _iw(space, xs) + _iw(space, ys) - _iw(space, xs & ys):
            break
        joint = [
            c for c in space.classes
            if union.issuperset(c) and not xs.issuperset(c) and not ys.issuperset(c)
        ]
        # weight defect equals len(joint), so joint is non-empty here
        ys = ys - frozenset(i for c in joint for i in c)
        rounds += 1
        if rounds > space.n_classes:
            raise RuntimeError("Praba join correction did not terminate")
    result = space.names(xs | ys)
    return (result, rounds) if with_iterations else result


def pivot_set(space: ApproximationSpace, X: Iterable[str], Y: Iterable[str]) -> PivotSet:
    xs = space.indices(X)
    ys = space.indices(Y)
    both = xs & ys
    pivots, hit = [], []
    for ci, c in enumerate(space.classes):
        if both.issuperset(c) or xs.isdisjoint(c) or ys.isdisjoint(c):
            continue
        common = [i for i in c if i in both]
        pivots.append(common[0] if common else min(i for i in c if i in xs))
        hit.append(ci)
    return PivotSet(space.names(pivots), frozenset(hit))


def praba_meet_sets(space: ApproximationSpace, X: Iterable[str], Y: Iterable[str]) -> frozenset[str]:
    xs = space.indices(X)
    ys = space.indices(Y)
    both = xs & ys
    contained = space.names(i for c in space.classes if both.issuperset(c) for i in c)
    return contained | pivot_set(space, space.names(xs), space.names(ys)).pivots


def state_join(a: RoughElement, b: RoughElement) -> RoughElement:
    _check(a.space, b)
    return RoughElement(tuple(map(max, a.states, b.states)), a.space)


def state_meet(a: RoughElement, b: RoughElement) -> RoughElement:
    _check(a.space, b)
    return RoughElement(tuple(map(min, a.states, b.states)), a.space)



def _subsets(space: ApproximationSpace):
    atoms = space.atoms
    n = len(atoms)
    for mask in range(1 << n):
        yield frozenset(atoms[i] for i in range(n) if mask >> i & 1)


def check_praba(space: ApproximationSpace, max_atoms: int = 9) -> PropertyReport:
    """Set-level join/meet against state_join/state_meet on all subset pairs.

    Also checks that the join needs at most one correction round per class
    and that pivot sets hold at most one atom per class.
    """
    if len(space.atoms) > max_atoms:
        raise SizeLimitExceeded(4 ** len(space.atoms), 4**max_atoms)
    rep = PropertyReport("praba", space.name or "space")
    subsets = list(_subsets(space))
    canon = {X: canonicalize(space, X) for X in subsets}
    name = lambda X: format_set(space, X)  # noqa: E731
    for X in subsets:
        for Y in subsets:
            rep.checked += 1
            joined, rounds = praba_join_sets(space, X, Y, with_iterations=True)
            want = state_join(canon[X], canon[Y])
            if canonicalize(space, joined) != want:
                rep.fail("RS(X Δ Y) = RS(X) ⊔ RS(Y)", [name(X), name(Y)],
                         name(representative(space, want)), name(joined))
            if rounds > space.n_classes:
                rep.fail("join terminates", [name(X), name(Y)], space.n_classes, rounds)
            met = praba_meet_sets(space, X, Y)
            want = state_meet(canon[X], canon[Y])
            if canonicalize(space, met) != want:
                rep.fail("RS(X ∇ Y) = RS(X) ⊓ RS(Y)", [name(X), name(Y)],
                         name(representative(space, want)), name(met))
            piv = pivot_set(space, X, Y)
            owners = [space.class_of[space.atom_index[p]] for p in piv.pivots]
            if len(set(owners)) != len(owners) or set(owners) != piv.classes_hit:
                rep.fail("one pivot per class", [name(X), name(Y)], "distinct classes", name(piv.pivots))
    return rep
