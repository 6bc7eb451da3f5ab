"""The four bi-Heyting operators on T, their brute-force oracle, and the
axiom suites built on top of them.

Each operator exists in three forms:

* a per-class closed form (the functions without suffix), which is what the
  rest of the package uses;
* a set-level form (``*_sets``) evaluating the complement/approximation
  formulas on canonical representatives, routed through the Praba
  procedures;
* the brute-force scan over T (:func:`brute_force_oracle`, and the
  vectorised :func:`oracle_table` for whole operation tables).
"""
from __future__ import annotations

import itertools
import random
from typing import Callable, Iterator

import numpy as np

from .errors import NoExtremum, SizeLimitExceeded
from .praba import praba_join_sets, praba_meet_sets, state_join, state_meet
from .report import PropertyReport
from .space import (
    DEFAULT_CAP,
    ApproximationSpace,
    ClassState,
    RoughElement,
    _check,
    canonicalize,
    enumerate_T,
    format_set,
    leq,
    lower_approx,
    representative,
    upper_approx,
)

E, P, F = ClassState.EMPTY, ClassState.PARTIAL, ClassState.FULL

TRIPLE_LIMIT = 10**7
KINDS = ("pseudo", "dual_pseudo", "rel", "dual_rel")

_PSEUDO = {E: F, P: E, F: E}
_DUAL_PSEUDO = {E: F, P: F, F: E}


def pseudocomplement(space: ApproximationSpace, a: RoughElement) -> RoughElement:
    _check(space, a)
    return RoughElement(tuple(_PSEUDO[s] for s in a.states), space)


def dual_pseudocomplement(space: ApproximationSpace, a: RoughElement) -> RoughElement:
    _check(space, a)
    return RoughElement(tuple(_DUAL_PSEUDO[s] for s in a.states), space)


def rel_pseudocomplement(space: ApproximationSpace, a: RoughElement, b: RoughElement) -> RoughElement:
    """``a → b``: FULL where a's class state is below b's, b's state elsewhere."""
    _check(space, a, b)
    return RoughElement(tuple(F if x <= y else y for x, y in zip(a.states, b.states)), space)


def dual_rel_pseudocomplement(space: ApproximationSpace, a: RoughElement, b: RoughElement) -> RoughElement:
    """``a ← b``: EMPTY where a's class state is below b's, a's state elsewhere."""
    _check(space, a, b)
    return RoughElement(tuple(E if x <= y else x for x, y in zip(a.states, b.states)), space)


# -- set-level formulas -----------------------------------------------------

def pseudocomplement_sets(space: ApproximationSpace, a: RoughElement) -> RoughElement:
    X = representative(space, a)
    return canonicalize(space, space.universe - upper_approx(space, X))


def dual_pseudocomplement_sets(space: ApproximationSpace, a: RoughElement) -> RoughElement:
    X = representative(space, a)
    return canonicalize(space, space.universe - lower_approx(space, X))


def rel_pseudocomplement_sets(space: ApproximationSpace, a: RoughElement, b: RoughElement) -> RoughElement:
    # (Y ∇ Z) Δ (classes not meeting Y - Y ∇ Z)
    Y, Z = representative(space, a), representative(space, b)
    M = praba_meet_sets(space, Y, Z)
    outside = space.universe - upper_approx(space, Y - M)
    return canonicalize(space, praba_join_sets(space, M, outside))


def dual_rel_pseudocomplement_sets(space: ApproximationSpace, a: RoughElement, b: RoughElement) -> RoughElement:
    # Y ∇ (upper approximation of Y - Y ∇ Z)
    Y, Z = representative(space, a), representative(space, b)
    M = praba_meet_sets(space, Y, Z)
    return canonicalize(space, praba_meet_sets(space, Y, upper_approx(space, Y - M)))


# -- oracle -------------------------------------------------------------------

def brute_force_oracle(space, kind, a, b=None, cap=DEFAULT_CAP) -> RoughElement:
    """Scan T for the extremal element satisfying the operator's defining predicate.

    pseudo:      max { w : a ⊓ w = ⊥ }
    dual_pseudo: min { w : a ⊔ w = ⊤ }
    rel:         max { w : a ⊓ w ≤ b }
    dual_rel:    min { v : b ⊔ v ≥ a }
    """
    if kind not in KINDS:
        raise ValueError(f"unknown operator kind {kind!r}")
    binary = kind in ("rel", "dual_rel")
    if binary != (b is not None):
        raise ValueError(f"{kind} takes {'two' if binary else 'one'} operand(s)")
    _check(space, a, *([b] if binary else []))
    T = enumerate_T(space, cap)
    bot, top = space.bottom, space.top
    if kind == "pseudo":
        cands, want_max = [w for w in T if state_meet(a, w) == bot], True
    elif kind == "dual_pseudo":
        cands, want_max = [w for w in T if state_join(a, w) == top], False
    elif kind == "rel":
        cands, want_max = [w for w in T if leq(state_meet(a, w), b)], True
    else:
        cands, want_max = [v for v in T if leq(a, state_join(b, v))], False
    for c in cands:
        if all(leq(x, c) if want_max else leq(c, x) for x in cands):
            return c
    raise NoExtremum(f"{kind}: no unique {'maximum' if want_max else 'minimum'} among {len(cands)} candidates")


def oracle_table(space: ApproximationSpace, kind: str, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Brute-force results for every operand (pair), as indices into
    ``space.tables.elements``.  Shape ``(n,)`` for unary kinds, ``(n, n)``
    indexed ``[a, b]`` for binary ones.

    Same predicate scan as :func:`brute_force_oracle`, vectorised over the
    dense ≤ / ⊔ / ⊓ tables.  An extremum is found by rank (sum of class
    states) and then verified to dominate every candidate.
    """
    if space.size_T > cap:
        raise SizeLimitExceeded(space.size_T, cap)
    t = space.tables
    n = len(t)
    rank = t.states.sum(axis=1).astype(np.int64)
    LEQ, JOIN, MEET = t.leq, t.join, t.meet
    bot, top = 0, n - 1

    def extremum(cands: np.ndarray, want_max: bool) -> np.ndarray:
        # cands: (rows, n) boolean
        if not cands.any(axis=1).all():
            raise NoExtremum(f"{kind}: empty candidate set")
        if want_max:
            pick = np.where(cands, rank[None, :], -1).argmax(axis=1)
            ok = ~(cands & ~LEQ[:, pick].T)
        else:
            pick = np.where(cands, rank[None, :], 1 << 30).argmin(axis=1)
            ok = ~(cands & ~LEQ[pick, :])
        if not ok.all():
            raise NoExtremum(f"{kind}: candidate set has no unique extremum")
        return pick

    if kind == "pseudo":
        return extremum(MEET == bot, True)
    if kind == "dual_pseudo":
        return extremum(JOIN == top, False)
    out = np.empty((n, n), dtype=np.int64)
    if kind == "rel":
        for a in range(n):
            # cands[b, w] = (a ⊓ w) ≤ b
            out[a] = extremum(LEQ[MEET[a], :].T, True)
        return out
    if kind == "dual_rel":
        for b in range(n):
            # cands[a, v] = a ≤ (b ⊔ v)
            out[:, b] = extremum(LEQ[:, JOIN[b]], False)
        return out
    raise ValueError(f"unknown operator kind {kind!r}")


# -- suites -------------------------------------------------------------------

def _r(space, e):
    return format_set(space, representative(space, e))


def _sid(space):
    return space.name or "space"


def _triples(T, shard, sample, seed) -> Iterator[tuple]:
    n = len(T)
    if sample is not None and sample < n**3:
        rng = random.Random(seed)
        it = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(sample))
    else:
        if n**3 > TRIPLE_LIMIT:
            raise SizeLimitExceeded(n**3, TRIPLE_LIMIT)
        it = itertools.product(range(n), repeat=3)
    k, parts = shard
    for idx, (i, j, l) in enumerate(it):
        if idx % parts == k:
            yield T[i], T[j], T[l]


def check_stone(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> PropertyReport:
    """a* ⊔ a** = ⊤ and a* ⊓ a** = ⊥ for every a (plus a*** = a*, a* = a → ⊥)."""
    rep = PropertyReport("stone", _sid(space))
    top, bot = space.top, space.bottom
    for a in enumerate_T(space, cap):
        s = pseudocomplement(space, a)
        ss = pseudocomplement(space, s)
        rep.checked += 1
        if state_join(s, ss) != top:
            rep.fail("a* ⊔ a** = ⊤", [_r(space, a)], _r(space, top), _r(space, state_join(s, ss)))
        if state_meet(s, ss) != bot:
            rep.fail("a* ⊓ a** = ⊥", [_r(space, a)], _r(space, bot), _r(space, state_meet(s, ss)))
        if pseudocomplement(space, ss) != s:
            rep.fail("a*** = a*", [_r(space, a)], _r(space, s), _r(space, pseudocomplement(space, ss)))
        imp = rel_pseudocomplement(space, a, bot)
        if imp != s:
            rep.fail("a* = a → ⊥", [_r(space, a)], _r(space, imp), _r(space, s))
    return rep


def check_dual_stone(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> PropertyReport:
    """a⁺ ⊓ a⁺⁺ = ⊥ and a⁺ ⊔ a⁺⁺ = ⊤ for every a (plus a⁺⁺⁺ = a⁺, a⁺ = ⊤ ← a)."""
    rep = PropertyReport("dualstone", _sid(space))
    top, bot = space.top, space.bottom
    for a in enumerate_T(space, cap):
        d = dual_pseudocomplement(space, a)
        dd = dual_pseudocomplement(space, d)
        rep.checked += 1
        if state_meet(d, dd) != bot:
            rep.fail("a⁺ ⊓ a⁺⁺ = ⊥", [_r(space, a)], _r(space, bot), _r(space, state_meet(d, dd)))
        if state_join(d, dd) != top:
            rep.fail("a⁺ ⊔ a⁺⁺ = ⊤", [_r(space, a)], _r(space, top), _r(space, state_join(d, dd)))
        if dual_pseudocomplement(space, dd) != d:
            rep.fail("a⁺⁺⁺ = a⁺", [_r(space, a)], _r(space, d), _r(space, dual_pseudocomplement(space, dd)))
        co = dual_rel_pseudocomplement(space, top, a)
        if co != d:
            rep.fail("a⁺ = ⊤ ← a", [_r(space, a)], _r(space, co), _r(space, d))
    return rep


def check_boundary(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> PropertyReport:
    """a ⊔ a* = ⊤ and a ⊓ a⁺ = ⊥ hold exactly on elements without a PARTIAL class."""
    rep = PropertyReport("boundary", _sid(space))
    top, bot = space.top, space.bottom
    for a in enumerate_T(space, cap):
        rep.checked += 1
        exact = not a.has_partial
        j = state_join(a, pseudocomplement(space, a))
        if (j == top) != exact:
            rep.fail("a ⊔ a* = ⊤ iff no PARTIAL class", [_r(space, a)], exact, j == top)
        m = state_meet(a, dual_pseudocomplement(space, a))
        if (m == bot) != exact:
            rep.fail("a ⊓ a⁺ = ⊥ iff no PARTIAL class", [_r(space, a)], exact, m == bot)
    return rep


def check_operator_identities(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> PropertyReport:
    """Eight bound and order identities of → and ← over every pair."""
    rep = PropertyReport("identities", _sid(space))
    top, bot = space.top, space.bottom
    imp = lambda x, y: rel_pseudocomplement(space, x, y)  # noqa: E731
    co = lambda x, y: dual_rel_pseudocomplement(space, x, y)  # noqa: E731
    T = enumerate_T(space, cap)
    for x, y in itertools.product(T, repeat=2):
        rep.checked += 1
        args = [_r(space, x), _r(space, y)]
        props: list[tuple[str, object, object]] = [
            ("x → y = ⊤ iff x ≤ y", leq(x, y), imp(x, y) == top),
            ("x → ⊤ = ⊤", top, imp(x, top)),
            ("⊥ → x = ⊤", top, imp(bot, x)),
            ("⊤ → x = x", x, imp(top, x)),
            ("x ← y = ⊥ iff x ≤ y", leq(x, y), co(x, y) == bot),
            ("x ← ⊤ = ⊥", bot, co(x, top)),
            ("x ← ⊥ = x", x, co(x, bot)),
            ("⊥ ← x = ⊥", bot, co(bot, x)),
        ]
        for name, want, got in props:
            if want != got:
                show = (lambda v: _r(space, v) if isinstance(v, RoughElement) else v)
                rep.fail(name, args, show(want), show(got))
    return rep


def check_residuation(space, cap=DEFAULT_CAP, shard=(0, 1), sample=None, seed=0) -> PropertyReport:
    """(a ⊓ c) ≤ b ⟺ c ≤ (a → b)  and  a ≤ (b ⊔ c) ⟺ (a ← b) ≤ c."""
    rep = PropertyReport("residuation", _sid(space))
    T = enumerate_T(space, cap)
    for a, b, c in _triples(T, shard, sample, seed):
        rep.checked += 1
        lhs, rhs = leq(state_meet(a, c), b), leq(c, rel_pseudocomplement(space, a, b))
        if lhs != rhs:
            rep.fail("residuation", [_r(space, v) for v in (a, b, c)], lhs, rhs)
        lhs, rhs = leq(a, state_join(b, c)), leq(dual_rel_pseudocomplement(space, a, b), c)
        if lhs != rhs:
            rep.fail("co-residuation", [_r(space, v) for v in (a, b, c)], lhs, rhs)
    return rep


def algebraic_conditions(space, x, y, z) -> list[tuple[str, RoughElement, RoughElement]]:
    """The four pairs of identities of the algebraic semantics, as (name, lhs, rhs)."""
    imp = lambda p, q: rel_pseudocomplement(space, p, q)  # noqa: E731
    co = lambda p, q: dual_rel_pseudocomplement(space, p, q)  # noqa: E731
    return [
        ("1a: x → x = ⊤", imp(x, x), space.top),
        ("1b: x ← x = ⊥", co(x, x), space.bottom),
        ("2a: x ⊓ (x → y) = x ⊓ y", state_meet(x, imp(x, y)), state_meet(x, y)),
        ("2b: x ⊔ (x ← y) = x", state_join(x, co(x, y)), x),
        ("3a: (x → y) ⊓ y = y", state_meet(imp(x, y), y), y),
        ("3b: (x ← y) ⊔ y = x ⊔ y", state_join(co(x, y), y), state_join(x, y)),
        ("4a: x → (y ⊓ z) = (x → y) ⊓ (x → z)",
         imp(x, state_meet(y, z)), state_meet(imp(x, y), imp(x, z))),
        ("4b: (x ⊔ y) ← z = (x ← z) ⊔ (y ← z)",
         co(state_join(x, y), z), state_join(co(x, z), co(y, z))),
    ]


def check_algebraic_axioms(space, cap=DEFAULT_CAP, shard=(0, 1), sample=None, seed=0) -> PropertyReport:
    rep = PropertyReport("algebraic", _sid(space))
    T = enumerate_T(space, cap)
    for x, y, z in _triples(T, shard, sample, seed):
        rep.checked += 1
        for name, lhs, rhs in algebraic_conditions(space, x, y, z):
            if lhs != rhs:
                rep.fail(name, [_r(space, v) for v in (x, y, z)], _r(space, rhs), _r(space, lhs))
    return rep


def check_lattice(space, cap=DEFAULT_CAP, shard=(0, 1), sample=None, seed=0) -> PropertyReport:
    """Bounded distributive lattice laws for (T, ⊔, ⊓), plus agreement of
    ⊔/⊓ with least upper / greatest lower bounds under ≤."""
    rep = PropertyReport("lattice", _sid(space))
    T = enumerate_T(space, cap)
    J, M = state_join, state_meet
    top, bot = space.top, space.bottom
    for a, b, c in _triples(T, shard, sample, seed):
        rep.checked += 1
        laws = [
            ("join commutative", J(a, b), J(b, a)),
            ("meet commutative", M(a, b), M(b, a)),
            ("join associative", J(a, J(b, c)), J(J(a, b), c)),
            ("meet associative", M(a, M(b, c)), M(M(a, b), c)),
            ("join idempotent", J(a, a), a),
            ("meet idempotent", M(a, a), a),
            ("absorption a ⊔ (a ⊓ b)", J(a, M(a, b)), a),
            ("absorption a ⊓ (a ⊔ b)", M(a, J(a, b)), a),
            ("meet distributes over join", M(a, J(b, c)), J(M(a, b), M(a, c))),
            ("join distributes over meet", J(a, M(b, c)), M(J(a, b), J(a, c))),
            ("bottom is join identity", J(a, bot), a),
            ("top is meet identity", M(a, top), a),
        ]
        for name, lhs, rhs in laws:
            if lhs != rhs:
                rep.fail(name, [_r(space, v) for v in (a, b, c)], _r(space, rhs), _r(space, lhs))
        if (leq(a, c) and leq(b, c)) != leq(J(a, b), c):
            rep.fail("join is least upper bound", [_r(space, v) for v in (a, b, c)], True, False)
        if (leq(c, a) and leq(c, b)) != leq(c, M(a, b)):
            rep.fail("meet is greatest lower bound", [_r(space, v) for v in (a, b, c)], True, False)
        if leq(a, b) and leq(b, c) and not leq(a, c):
            rep.fail("≤ transitive", [_r(space, v) for v in (a, b, c)], True, False)
        if leq(a, b) and leq(b, a) and a != b:
            rep.fail("≤ antisymmetric", [_r(space, v) for v in (a, b)], True, False)
    return rep


CLOSED_FORMS: dict[str, Callable] = {
    "pseudo": pseudocomplement,
    "dual_pseudo": dual_pseudocomplement,
    "rel": rel_pseudocomplement,
    "dual_rel": dual_rel_pseudocomplement,
}

SET_FORMS: dict[str, Callable] = {
    "pseudo": pseudocomplement_sets,
    "dual_pseudo": dual_pseudocomplement_sets,
    "rel": rel_pseudocomplement_sets,
    "dual_rel": dual_rel_pseudocomplement_sets,
}


def check_oracle(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> PropertyReport:
    """Closed-form operators against the brute-force scan on every element / pair."""
    rep = PropertyReport("oracle", _sid(space))
    t = space.tables if space.size_T <= cap else None
    if t is None:
        raise SizeLimitExceeded(space.size_T, cap)
    T = t.elements
    for kind in KINDS:
        table = oracle_table(space, kind, cap)
        op = CLOSED_FORMS[kind]
        if table.ndim == 1:
            for i, a in enumerate(T):
                rep.checked += 1
                got = op(space, a)
                if t.index[got.states] != table[i]:
                    rep.fail(kind, [_r(space, a)], _r(space, T[table[i]]), _r(space, got))
        else:
            for i, a in enumerate(T):
                for j, b in enumerate(T):
                    rep.checked += 1
                    got = op(space, a, b)
                    if t.index[got.states] != table[i, j]:
                        rep.fail(kind, [_r(space, a), _r(space, b)],
                                 _r(space, T[table[i, j]]), _r(space, got))
    return rep


def check_set_formulas(space: ApproximationSpace, cap: int = DEFAULT_CAP) -> PropertyReport:
    """Set-level formulas on canonical representatives against the closed forms."""
    rep = PropertyReport("setforms", _sid(space))
    T = enumerate_T(space, cap)
    for kind in KINDS:
        op, via_sets = CLOSED_FORMS[kind], SET_FORMS[kind]
        operands = [(a,) for a in T] if kind in ("pseudo", "dual_pseudo") else itertools.product(T, repeat=2)
        for args in operands:
            rep.checked += 1
            want, got = op(space, *args), via_sets(space, *args)
            if want != got:
                rep.fail(kind, [_r(space, a) for a in args], _r(space, want), _r(space, got))
    return rep
