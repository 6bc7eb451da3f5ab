"""Formula syntax: AST, parser and printer.

Concrete grammar (loosest binding first)::

    formula := coimpl
    coimpl  := impl { "<-" impl }          left-associative
    impl    := join [ "->" impl ]          right-associative
    join    := meet { "\\/" meet }
    meet    := postfix { "/\\" postfix }
    postfix := primary { "*" | "+" }
    primary := ATOM | "EMPTY" | "UNIV" | "[" ATOM {"," ATOM} "]" | "(" formula ")"
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Sequence, Union

from ..errors import FormulaSyntaxError, UnknownAtom


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class SubsetConst:
    atoms: tuple[str, ...]


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Univ:
    pass


@dataclass(frozen=True)
class Join:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Meet:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Impl:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class CoImpl:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Pseudo:
    child: "Formula"


@dataclass(frozen=True)
class DualPseudo:
    child: "Formula"


Formula = Union[Atom, SubsetConst, Empty, Univ, Join, Meet, Impl, CoImpl, Pseudo, DualPseudo]

KEYWORDS = {"EMPTY", "UNIV"}

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>->|<-|\\/|/\\|[*+\[\],()])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.group(), pos))
        pos = m.end()
    tokens.append(("", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i][0]

    @property
    def pos(self):
        return self.tokens[self.i][1]

    def take(self, expected=None):
        tok, pos = self.tokens[self.i]
        if expected is not None and tok != expected:
            found = repr(tok) if tok else "end of input"
            raise FormulaSyntaxError(f"expected {expected!r}, found {found}", pos)
        self.i += 1
        return tok

    def formula(self):
        node = self.impl()
        while self.tok == "<-":
            self.take()
            node = CoImpl(node, self.impl())
        return node

    def impl(self):
        node = self.join()
        if self.tok == "->":
            self.take()
            return Impl(node, self.impl())
        return node

    def join(self):
        node = self.meet()
        while self.tok == "\\/":
            self.take()
            node = Join(node, self.meet())
        return node

    def meet(self):
        node = self.postfix()
        while self.tok == "/\\":
            self.take()
            node = Meet(node, self.postfix())
        return node

    def postfix(self):
        node = self.primary()
        while self.tok in ("*", "+"):
            node = Pseudo(node) if self.take() == "*" else DualPseudo(node)
        return node

    def atom_name(self):
        tok, pos = self.tokens[self.i]
        if not tok or not (tok[0].isalpha() or tok[0] == "_") or tok in KEYWORDS:
            found = repr(tok) if tok else "end of input"
            raise FormulaSyntaxError(f"expected an atom name, found {found}", pos)
        self.i += 1
        return tok

    def primary(self):
        tok = self.tok
        if tok == "(":
            self.take()
            node = self.formula()
            self.take(")")
            return node
        if tok == "[":
            self.take()
            names = [self.atom_name()]
            while self.tok == ",":
                self.take()
                names.append(self.atom_name())
            self.take("]")
            return SubsetConst(tuple(names))
        if tok == "EMPTY":
            self.take()
            return Empty()
        if tok == "UNIV":
            self.take()
            return Univ()
        return Atom(self.atom_name())


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    node = p.formula()
    if p.tok:
        raise FormulaSyntaxError(f"unexpected {p.tok!r}", p.pos)
    return node


# binding strength: 0 coimpl, 1 impl, 2 join, 3 meet, 4 postfix/primary
def _level(f) -> int:
    if isinstance(f, CoImpl):
        return 0
    if isinstance(f, Impl):
        return 1
    if isinstance(f, Join):
        return 2
    if isinstance(f, Meet):
        return 3
    return 4


def _show(f, need: int) -> str:
    s = to_text(f)
    return f"({s})" if _level(f) < need else s


def to_text(f: Formula) -> str:
    """Print with the fewest parentheses that re-parse to the same tree."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, SubsetConst):
        return "[" + ",".join(f.atoms) + "]"
    if isinstance(f, Empty):
        return "EMPTY"
    if isinstance(f, Univ):
        return "UNIV"
    if isinstance(f, Pseudo):
        return _show(f.child, 4) + "*"
    if isinstance(f, DualPseudo):
        return _show(f.child, 4) + "+"
    if isinstance(f, CoImpl):
        return f"{_show(f.left, 0)} <- {_show(f.right, 1)}"
    if isinstance(f, Impl):
        return f"{_show(f.left, 2)} -> {_show(f.right, 1)}"
    if isinstance(f, Join):
        return f"{_show(f.left, 2)} \\/ {_show(f.right, 3)}"
    if isinstance(f, Meet):
        return f"{_show(f.left, 3)} /\\ {_show(f.right, 4)}"
    raise TypeError(f"not a formula: {f!r}")


def atoms_of(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {f.name}
    if isinstance(f, SubsetConst):
        return set(f.atoms)
    if isinstance(f, (Empty, Univ)):
        return set()
    if isinstance(f, (Pseudo, DualPseudo)):
        return atoms_of(f.child)
    return atoms_of(f.left) | atoms_of(f.right)


def bind(f: Formula, space) -> Formula:
    """Check every atom of ``f`` against the space; returns ``f`` unchanged."""
    for name in sorted(atoms_of(f)):
        if name not in space.atom_index:
            raise UnknownAtom(name)
    return f


_BINARY = (Join, Meet, Impl, CoImpl)
_UNARY = (Pseudo, DualPseudo)


def random_formula(rng: random.Random, atoms: Sequence[str], depth: int = 4) -> Formula:
    """Random AST over ``atoms``; leaves include subset constants and both bounds."""
    if depth <= 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.5:
            return Atom(rng.choice(atoms))
        if roll < 0.8:
            k = rng.randint(1, min(3, len(atoms)))
            return SubsetConst(tuple(rng.sample(list(atoms), k)))
        return Empty() if roll < 0.9 else Univ()
    if rng.random() < 0.25:
        return rng.choice(_UNARY)(random_formula(rng, atoms, depth - 1))
    cls = rng.choice(_BINARY)
    return cls(random_formula(rng, atoms, depth - 1), random_formula(rng, atoms, depth - 1))
