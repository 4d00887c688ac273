"""Implicational formulas over propositional variables and the falsity constant.

Formulas are immutable and hash-consed: building the same tree twice returns
the same object, so equality and hashing are O(1) in the common case.
Structural equality is still the semantics of ``==``; interning only makes
it cheap.  Every traversal here is iterative so formulas of degree in the
thousands are fine.
"""

from __future__ import annotations

import re
import weakref
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "Formula",
    "Var",
    "Falsum",
    "Implies",
    "F",
    "ParseError",
    "parse",
    "to_text",
    "degree",
    "in_L",
    "neg",
    "variables",
    "subformulas",
    "imp_chain",
]

_VAR_RE = re.compile(r"[a-z][a-z0-9_]*\Z")

_interned: weakref.WeakValueDictionary = weakref.WeakValueDictionary()


class Formula:
    """Base class of the three node kinds.  Do not instantiate directly."""

    __slots__ = ("_hash", "degree", "has_falsum", "__weakref__")

    _hash: int
    degree: int
    has_falsum: bool

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Formula) or self._hash != other._hash:
            return False
        return _struct_eq(self, other)

    def __ne__(self, other: object) -> bool:
        return not self == other

    def __setattr__(self, name, value):
        raise AttributeError("Formula is immutable")

    def __delattr__(self, name):
        raise AttributeError("Formula is immutable")

    def __reduce__(self):
        # rebuild through the constructors so unpickled nodes are interned
        return (parse, (to_text(self),))

    def __str__(self) -> str:
        return to_text(self)

    def __rshift__(self, other: Formula) -> Implies:
        """``a >> b`` builds ``a -> b``."""
        return Implies(self, other)


def _init(obj: Formula, **fields) -> None:
    for k, v in fields.items():
        object.__setattr__(obj, k, v)


class Var(Formula):
    __slots__ = ("name",)
    __match_args__ = ("name",)

    name: str

    def __new__(cls, name: str) -> Var:
        key = ("v", name)
        obj = _interned.get(key)
        if obj is not None:
            return obj
        if not isinstance(name, str) or not _VAR_RE.match(name):
            raise ValueError(f"invalid variable name {name!r}")
        obj = object.__new__(cls)
        _init(obj, name=name, _hash=hash(key), degree=0, has_falsum=False)
        _interned[key] = obj
        return obj

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


class Falsum(Formula):
    __slots__ = ()

    def __new__(cls) -> Falsum:
        obj = _interned.get("F")
        if obj is None:
            obj = object.__new__(cls)
            _init(obj, _hash=hash("F"), degree=0, has_falsum=True)
            _interned["F"] = obj
        return obj

    def __repr__(self) -> str:
        return "Falsum()"


class Implies(Formula):
    __slots__ = ("antecedent", "consequent")
    __match_args__ = ("antecedent", "consequent")

    antecedent: Formula
    consequent: Formula

    def __new__(cls, antecedent: Formula, consequent: Formula) -> Implies:
        key = ("i", antecedent, consequent)
        obj = _interned.get(key)
        if obj is not None:
            return obj
        if not isinstance(antecedent, Formula) or not isinstance(consequent, Formula):
            raise TypeError("Implies takes two Formulas")
        obj = object.__new__(cls)
        _init(
            obj,
            antecedent=antecedent,
            consequent=consequent,
            _hash=hash(("i", antecedent._hash, consequent._hash)),
            degree=1 + antecedent.degree + consequent.degree,
            has_falsum=antecedent.has_falsum or consequent.has_falsum,
        )
        _interned[key] = obj
        return obj

    def __repr__(self) -> str:
        return f"Implies({self.antecedent!r}, {self.consequent!r})"


F = Falsum()


def _struct_eq(a: Formula, b: Formula) -> bool:
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x is y:
            continue
        if type(x) is not type(y) or x._hash != y._hash:
            return False
        if isinstance(x, Var):
            if x.name != y.name:
                return False
        elif isinstance(x, Implies):
            stack.append((x.antecedent, y.antecedent))
            stack.append((x.consequent, y.consequent))
    return True


# ---------------------------------------------------------------- queries


def degree(f: Formula) -> int:
    """Number of conditionals in ``f``."""
    return f.degree


def in_L(f: Formula) -> bool:
    """True iff the falsity constant does not occur in ``f``."""
    return not f.has_falsum


def neg(z: Formula) -> Implies:
    return Implies(z, F)


def imp_chain(antecedents, conclusion: Formula) -> Formula:
    """Right-nest ``a1 -> (a2 -> ... -> conclusion)``."""
    out = conclusion
    for a in reversed(list(antecedents)):
        out = Implies(a, out)
    return out


def subformulas(f: Formula) -> Iterator[Formula]:
    """Distinct subformulas of ``f``, children before parents."""
    seen: set[int] = set()
    stack: list[tuple[Formula, bool]] = [(f, False)]
    while stack:
        g, expanded = stack.pop()
        if id(g) in seen:
            continue
        if expanded or not isinstance(g, Implies):
            seen.add(id(g))
            yield g
        else:
            stack.append((g, True))
            stack.append((g.consequent, False))
            stack.append((g.antecedent, False))


def variables(f: Formula) -> list[str]:
    """Sorted variable names occurring in ``f``."""
    return sorted({g.name for g in subformulas(f) if isinstance(g, Var)})


# ---------------------------------------------------------------- text


@dataclass
class ParseError(ValueError):
    message: str
    position: int
    text: str = ""

    def __str__(self) -> str:
        return f"{self.message} at position {self.position}"


_TOKEN_RE = re.compile(r"\s*(?:(->)|(\()|(\))|([A-Za-z_0-9]+))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("->", "->", start))
        elif m.group(2):
            tokens.append(("(", "(", start))
        elif m.group(3):
            tokens.append((")", ")", start))
        else:
            word = m.group(4)
            if word == "F":
                tokens.append(("F", word, start))
            elif _VAR_RE.match(word):
                tokens.append(("VAR", word, start))
            else:
                raise ParseError(f"bad identifier {word!r}", start, text)
        pos = m.end()
    tokens.append(("EOF", "", n))
    return tokens


def parse(text: str) -> Formula:
    """Parse ``text``; ``->`` associates to the right.

    Raises ParseError carrying the offending character position.
    """
    tokens = _tokenize(text)
    i = 0
    # Explicit stack machine for: formula := atom ('->' formula)?
    # Each frame is a list of atoms of one right-nested chain.
    chains: list[list[Formula]] = [[]]
    opens: list[int] = []
    expect_atom = True
    while True:
        kind, _, pos = tokens[i]
        if expect_atom:
            if kind == "VAR":
                chains[-1].append(Var(tokens[i][1]))
                expect_atom = False
            elif kind == "F":
                chains[-1].append(F)
                expect_atom = False
            elif kind == "(":
                chains.append([])
                opens.append(pos)
            elif kind == "EOF":
                what = "dangling '->'" if chains[-1] else "expected formula"
                raise ParseError(f"{what}, found end of input", pos, text)
            else:
                raise ParseError(f"expected formula, found {kind!r}", pos, text)
            i += 1
            continue
        if kind == "->":
            expect_atom = True
        elif kind == ")":
            if not opens:
                raise ParseError("unbalanced ')'", pos, text)
            opens.pop()
            done = imp_chain(chains[-1][:-1], chains[-1][-1])
            chains.pop()
            chains[-1].append(done)
        elif kind == "EOF":
            if opens:
                raise ParseError("unbalanced '('", opens[-1], text)
            return imp_chain(chains[0][:-1], chains[0][-1])
        else:
            raise ParseError(f"expected '->' or ')', found {kind!r}", pos, text)
        i += 1


def to_text(f: Formula) -> str:
    """Print with minimal parentheses: only implication antecedents are wrapped."""
    out: list[str] = []
    # work items are a Formula to print or a literal string to emit
    stack: list[Formula | str] = [f]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif isinstance(item, Var):
            out.append(item.name)
        elif isinstance(item, Falsum):
            out.append("F")
        else:
            ant = item.antecedent
            stack.append(item.consequent)
            stack.append(" -> ")
            if isinstance(ant, Implies):
                stack.append(")")
                stack.append(ant)
                stack.append("(")
            else:
                stack.append(ant)
    return "".join(out)
