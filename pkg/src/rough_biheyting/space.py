"""Approximation spaces, rough-set approximations and the carrier set T.

A rough set over a space is identified by the state of each equivalence
class relative to a representative subset ``X``: the class is disjoint from
``X`` (EMPTY), contained in ``X`` (FULL), or neither (PARTIAL).  This
per-class vector is the canonical encoding of ``RS(X)`` used everywhere
else in the package.
"""
from __future__ import annotations

import itertools
import json
import random
import re
from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateAtom,
    EmptyClass,
    EmptyUniverse,
    InvalidAtomName,
    NotAPartition,
    SizeLimitExceeded,
    SpaceError,
    SpaceMismatch,
    UnknownAtom,
)

DEFAULT_CAP = 3**12
ATOM_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ClassState(IntEnum):
    EMPTY = 0
    PARTIAL = 1
    FULL = 2


_STATES = (ClassState.EMPTY, ClassState.PARTIAL, ClassState.FULL)


@dataclass(frozen=True)
class ApproximationSpace:
    """A finite universe together with the partition induced by ``R``.

    ``classes`` holds atom indices; class order is the order of appearance
    in the source description and is authoritative for enumeration and
    rendering.  Build instances with :func:`build_space`.
    """

    atoms: tuple[str, ...]
    classes: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    @cached_property
    def atom_index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.atoms)}

    @cached_property
    def class_of(self) -> tuple[int, ...]:
        owner = [0] * len(self.atoms)
        for ci, members in enumerate(self.classes):
            for i in members:
                owner[i] = ci
        return tuple(owner)

    @cached_property
    def class_sets(self) -> tuple[frozenset[str], ...]:
        return tuple(frozenset(self.atoms[i] for i in c) for c in self.classes)

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def universe(self) -> frozenset[str]:
        return frozenset(self.atoms)

    @cached_property
    def size_T(self) -> int:
        singletons = sum(1 for c in self.classes if len(c) == 1)
        return 2**singletons * 3 ** (len(self.classes) - singletons)

    def indices(self, X: Iterable[str]) -> frozenset[int]:
        idx = self.atom_index
        out = set()
        for name in X:
            try:
                out.add(idx[name])
            except KeyError:
                raise UnknownAtom(name) from None
        return frozenset(out)

    def names(self, indices: Iterable[int]) -> frozenset[str]:
        return frozenset(self.atoms[i] for i in indices)

    def sorted_atoms(self, X: Iterable[str]) -> list[str]:
        return sorted(X, key=self.atom_index.__getitem__)

    @property
    def bottom(self) -> RoughElement:
        return RoughElement((ClassState.EMPTY,) * self.n_classes, self)

    @property
    def top(self) -> RoughElement:
        return RoughElement((ClassState.FULL,) * self.n_classes, self)

    def element(self, states: Sequence[int]) -> RoughElement:
        if len(states) != self.n_classes:
            raise SpaceMismatch(
                f"expected {self.n_classes} class states, got {len(states)}"
            )
        st = tuple(_STATES[int(s)] for s in states)
        for ci, s in enumerate(st):
            if s is ClassState.PARTIAL and len(self.classes[ci]) == 1:
                raise SpaceError(f"singleton class {ci + 1} cannot be PARTIAL")
        return RoughElement(st, self)

    def to_json(self) -> dict:
        return {
            "universe": list(self.atoms),
            "classes": [[self.atoms[i] for i in c] for c in self.classes],
        }

    @cached_property
    def tables(self) -> LatticeTables:
        return LatticeTables(self)


@dataclass(frozen=True)
class RoughElement:
    """Canonical member of T; one :class:`ClassState` per class."""

    states: tuple[ClassState, ...]
    space: ApproximationSpace = field(compare=False, repr=False)

    def __str__(self):
        return describe(self.space, self)

    @property
    def has_partial(self) -> bool:
        return ClassState.PARTIAL in self.states


@dataclass(frozen=True)
class RoughSetPair:
    lower: frozenset[str]
    upper: frozenset[str]


def build_space(atoms: Sequence[str], classes: Sequence[Iterable[str]], name: str = "") -> ApproximationSpace:
    atoms = list(atoms)
    if not atoms:
        raise EmptyUniverse("the universe must contain at least one atom")
    index: dict[str, int] = {}
    for a in atoms:
        if not isinstance(a, str) or not ATOM_NAME.match(a):
            raise InvalidAtomName(f"invalid atom name {a!r}")
        if a in index:
            raise DuplicateAtom(f"atom {a!r} listed twice")
        index[a] = len(index)

    owner: dict[int, int] = {}
    built = []
    for ci, cls in enumerate(classes):
        members = list(cls)
        if not members:
            raise EmptyClass(f"class {ci + 1} is empty")
        idx = []
        for a in members:
            if a not in index:
                raise NotAPartition(f"class {ci + 1} mentions {a!r}, which is not in the universe")
            i = index[a]
            if i in owner or i in idx:
                raise NotAPartition(f"atom {a!r} belongs to more than one class")
            idx.append(i)
            owner[i] = ci
        built.append(tuple(sorted(idx)))
    missing = [a for a in atoms if index[a] not in owner]
    if missing:
        raise NotAPartition(f"atoms not covered by any class: {', '.join(missing)}")
    return ApproximationSpace(tuple(atoms), tuple(built), name)


def load_space(path: str | Path) -> ApproximationSpace:
    """Read a space file: ``{"universe": [...], "classes": [[...], ...]}``."""
    path = Path(path)
    data = json.loads(path.read_text())
    return space_from_json(data, name=path.stem)


def space_from_json(data, name: str = "") -> ApproximationSpace:
    if not isinstance(data, dict) or "universe" not in data or "classes" not in data:
        raise SpaceError('space description needs "universe" and "classes" keys')
    universe, classes = data["universe"], data["classes"]
    if not isinstance(universe, list) or not isinstance(classes, list):
        raise SpaceError('"universe" and "classes" must be lists')
    if any(not isinstance(c, list) for c in classes):
        raise SpaceError("every class must be a list of atom names")
    return build_space(universe, classes, name=name)


def _check(space: ApproximationSpace, *elements: RoughElement):
    for e in elements:
        if e.space is not space and e.space != space:
            raise SpaceMismatch("element belongs to a different approximation space")
        if len(e.states) != space.n_classes:
            raise SpaceMismatch("state vector length does not match the space")


def lower_approx(space: ApproximationSpace, X: Iterable[str]) -> frozenset[str]:
    members = space.indices(X)
    return space.names(i for c in space.classes if members.issuperset(c) for i in c)


def upper_approx(space: ApproximationSpace, X: Iterable[str]) -> frozenset[str]:
    members = space.indices(X)
    return space.names(i for c in space.classes if not members.isdisjoint(c) for i in c)


def rough_pair(space: ApproximationSpace, X: Iterable[str]) -> RoughSetPair:
    X = frozenset(X)
    return RoughSetPair(lower_approx(space, X), upper_approx(space, X))


def _states_of(space: ApproximationSpace, members: frozenset[int]) -> tuple[ClassState, ...]:
    out = []
    for c in space.classes:
        hit = sum(1 for i in c if i in members)
        if hit == 0:
            out.append(ClassState.EMPTY)
        elif hit == len(c):
            out.append(ClassState.FULL)
        else:
            out.append(ClassState.PARTIAL)
    return tuple(out)


def canonicalize(space: ApproximationSpace, X: Iterable[str]) -> RoughElement:
    return RoughElement(_states_of(space, space.indices(X)), space)


def representative(space: ApproximationSpace, e: RoughElement) -> frozenset[str]:
    """Full classes plus the least-indexed atom of every partial class."""
    _check(space, e)
    out = []
    for c, s in zip(space.classes, e.states):
        if s is ClassState.FULL:
            out.extend(c)
        elif s is ClassState.PARTIAL:
            out.append(c[0])
    return space.names(out)


def element_pair(space: ApproximationSpace, e: RoughElement) -> RoughSetPair:
    _check(space, e)
    lower, upper = [], []
    for c, s in zip(space.classes, e.states):
        if s is ClassState.FULL:
            lower.extend(c)
        if s is not ClassState.EMPTY:
            upper.extend(c)
    return RoughSetPair(space.names(lower), space.names(upper))


def enumerate_T(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> list[RoughElement]:
    """All of T in lexicographic state order (EMPTY < PARTIAL < FULL)."""
    if space.size_T > cap:
        raise SizeLimitExceeded(space.size_T, cap)
    choices = [
        (ClassState.EMPTY, ClassState.FULL) if len(c) == 1 else _STATES
        for c in space.classes
    ]
    return [RoughElement(st, space) for st in itertools.product(*choices)]


def leq(a: RoughElement, b: RoughElement) -> bool:
    if a.space is not b.space and a.space != b.space:
        raise SpaceMismatch("cannot compare elements of different spaces")
    return all(x <= y for x, y in zip(a.states, b.states))


def rough_upset(space: ApproximationSpace, e: RoughElement, cap: int = DEFAULT_CAP) -> list[RoughElement]:
    _check(space, e)
    return [y for y in enumerate_T(space, cap) if leq(e, y)]


def rough_downset(space: ApproximationSpace, e: RoughElement, cap: int = DEFAULT_CAP) -> list[RoughElement]:
    _check(space, e)
    return [y for y in enumerate_T(space, cap) if leq(y, e)]


# -- rendering -------------------------------------------------------------

def format_set(space: ApproximationSpace, X: Iterable[str]) -> str:
    return "{" + ",".join(space.sorted_atoms(X)) + "}"


def parse_set(space: ApproximationSpace, text: str) -> frozenset[str]:
    """Inverse of :func:`format_set`; ``{}`` is the empty set."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise SpaceError(f"not a set literal: {text!r}")
    body = text[1:-1].strip()
    names = [t.strip() for t in body.split(",")] if body else []
    return space.names(space.indices(names))


def describe(space: ApproximationSpace, e: RoughElement) -> str:
    """Union-of-classes name, e.g. ``X1 ∪ {x2} ∪ X3``; classes are X1..Xn."""
    terms = []
    for ci, (c, s) in enumerate(zip(space.classes, e.states)):
        if s is ClassState.FULL:
            terms.append(f"X{ci + 1}")
        elif s is ClassState.PARTIAL:
            terms.append("{" + space.atoms[c[0]] + "}")
    if not terms:
        return "∅"
    if all(s is ClassState.FULL for s in e.states):
        return "U"
    return " ∪ ".join(terms)


_TERM = re.compile(r"\s*(X(\d+)|\{\s*([A-Za-z_][A-Za-z0-9_]*)\s*\}|U|∅)\s*")


def parse_class_notation(space: ApproximationSpace, text: str) -> RoughElement:
    """Inverse of :func:`describe`: ``∅``, ``U``, or terms ``Xi`` / ``{atom}`` joined by ``∪``.

    ``{atom}`` denotes the rough set of that single atom, so a singleton
    class written as ``{x5}`` is FULL.
    """
    text = text.strip()
    if text.startswith("RS(") and text.endswith(")"):
        text = text[3:-1]
    states = [ClassState.EMPTY] * space.n_classes
    for part in text.split("∪"):
        m = _TERM.fullmatch(part)
        if not m:
            raise SpaceError(f"cannot read rough-set term {part.strip()!r}")
        if m.group(1) == "U":
            return space.top
        if m.group(1) == "∅":
            continue
        if m.group(2):
            ci = int(m.group(2)) - 1
            if not 0 <= ci < space.n_classes:
                raise SpaceError(f"no class X{ci + 1} in this space")
            states[ci] = ClassState.FULL
        else:
            i = space.indices([m.group(3)])
            (ai,) = i
            ci = space.class_of[ai]
            single = _states_of(space, i)[ci]
            states[ci] = max(states[ci], single)
    return RoughElement(tuple(states), space)


# -- dense lattice tables ----------------------------------------------------

class LatticeTables:
    """Index-based view of (T, ≤, ⊔, ⊓) used by the vectorised oracle.

    ``states[i]`` is the state vector of ``elements[i]``; ``leq[i, j]`` is
    ``elements[i] ≤ elements[j]``.  Join/meet index tables are derived from
    componentwise max/min.
    """

    def __init__(self, space: ApproximationSpace, cap: int = DEFAULT_CAP):
        self.space = space
        self.elements = enumerate_T(space, cap)
        self.index = {e.states: i for i, e in enumerate(self.elements)}
        k = space.n_classes
        self.states = np.array([e.states for e in self.elements], dtype=np.int8).reshape(-1, k)
        weights = 3 ** np.arange(k - 1, -1, -1, dtype=np.int64)
        self._code = self.states.astype(np.int64) @ weights
        self._lookup = np.full(3**k, -1, dtype=np.int64)
        self._lookup[self._code] = np.arange(len(self.elements))
        self._weights = weights
        S = self.states
        self.leq = (S[:, None, :] <= S[None, :, :]).all(axis=2)

    def __len__(self):
        return len(self.elements)

    def lookup(self, states: np.ndarray) -> np.ndarray:
        """Map state arrays (..., k) to indices into ``elements``."""
        return self._lookup[states.astype(np.int64) @ self._weights]

    @cached_property
    def join(self) -> np.ndarray:
        S = self.states
        return self.lookup(np.maximum(S[:, None, :], S[None, :, :]))

    @cached_property
    def meet(self) -> np.ndarray:
        S = self.states
        return self.lookup(np.minimum(S[:, None, :], S[None, :, :]))


# -- seeded random spaces ------------------------------------------------------

def random_space(
    seed: int,
    max_atoms: int = 9,
    max_class_size: int = 4,
    max_T: int = 486,
) -> ApproximationSpace:
    """Deterministic random partition of ``x1..xn`` (n <= max_atoms)."""
    rng = random.Random(seed)
    while True:
        n = rng.randint(1, max_atoms)
        sizes = []
        left = n
        while left:
            s = rng.randint(1, min(max_class_size, left))
            sizes.append(s)
            left -= s
        singles = sizes.count(1)
        if 2**singles * 3 ** (len(sizes) - singles) <= max_T:
            break
    atoms = [f"x{i + 1}" for i in range(n)]
    order = atoms[:]
    rng.shuffle(order)
    classes, pos = [], 0
    for s in sizes:
        classes.append(order[pos:pos + s])
        pos += s
    # order of appearance: by least member, mirroring how example spaces are written
    classes.sort(key=lambda c: min(atoms.index(a) for a in c))
    return build_space(atoms, classes, name=f"random-{seed}")


# -- the two worked spaces ------------------------------------------------------

def space_s4() -> ApproximationSpace:
    return build_space(["x1", "x2", "x3", "x4"], [["x1", "x3"], ["x2", "x4"]], name="S4")


def space_s6() -> ApproximationSpace:
    return build_space(
        ["x1", "x2", "x3", "x4", "x5", "x6"],
        [["x1", "x3"], ["x2", "x4", "x6"], ["x5"]],
        name="S6",
    )


BUILTIN_SPACES = {"S4": space_s4, "S6": space_s6}
