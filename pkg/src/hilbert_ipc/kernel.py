"""Proof objects for PC and IPC and the trusted line-by-line checker.

A proof is a flat sequence of lines under an ordered hypothesis list.  Axiom
lines carry the formulas the scheme is instantiated at, so checking never
unifies: it rebuilds the expected formula and compares.

PC (classical) admits ax1, ax2 and dneg; IPC (implicational) admits ax1, ax2
and peirce and forbids the falsity constant everywhere.  Modus ponens is the
only rule: ``MP(minor, major)`` with ``major`` proving ``minor -> conclusion``.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .formula import F, Formula, Implies, ParseError, in_L, parse, to_text

__all__ = [
    "SystemId",
    "Ax1",
    "Ax2",
    "DNeg",
    "Peirce",
    "Hyp",
    "MP",
    "Justification",
    "ProofLine",
    "Proof",
    "Sequent",
    "Reason",
    "Accepted",
    "Rejected",
    "Verdict",
    "ProofError",
    "ProofFormatError",
    "axiom_instance",
    "check",
    "concat",
    "ProofBuilder",
    "format_proof",
    "parse_proof",
    "justification_kinds",
]


class SystemId(enum.Enum):
    PC = "PC"
    IPC = "IPC"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Ax1:
    a: Formula
    b: Formula


@dataclass(frozen=True)
class Ax2:
    a: Formula
    b: Formula
    c: Formula


@dataclass(frozen=True)
class DNeg:
    a: Formula


@dataclass(frozen=True)
class Peirce:
    a: Formula
    b: Formula


@dataclass(frozen=True)
class Hyp:
    index: int


@dataclass(frozen=True)
class MP:
    minor: int
    major: int


Axiom = Union[Ax1, Ax2, DNeg, Peirce]
Justification = Union[Ax1, Ax2, DNeg, Peirce, Hyp, MP]

_SCHEMES = {
    SystemId.PC: (Ax1, Ax2, DNeg),
    SystemId.IPC: (Ax1, Ax2, Peirce),
}


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Sequent:
    system: SystemId
    hypotheses: tuple[Formula, ...]
    conclusion: Formula

    def __str__(self) -> str:
        hyps = ", ".join(to_text(h) for h in self.hypotheses)
        return f"{hyps} |-{self.system} {to_text(self.conclusion)}".lstrip()


@dataclass(frozen=True)
class Proof:
    system: SystemId
    hypotheses: tuple[Formula, ...]
    lines: tuple[ProofLine, ...]

    def __post_init__(self):
        # accept lists from callers, store tuples
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))
        object.__setattr__(self, "lines", tuple(self.lines))

    @property
    def conclusion(self) -> Formula:
        return self.lines[-1].formula

    @property
    def sequent(self) -> Sequent:
        return Sequent(self.system, self.hypotheses, self.conclusion)

    def __len__(self) -> int:
        return len(self.lines)


class Reason(enum.Enum):
    EMPTY_PROOF = "proof has no lines"
    SCHEME_NOT_IN_SYSTEM = "scheme-not-in-system"
    AXIOM_MISMATCH = "formula is not the stated axiom instance"
    HYP_OUT_OF_RANGE = "hypothesis index out of range"
    HYP_MISMATCH = "formula differs from the cited hypothesis"
    MP_INDEX = "modus ponens must cite strictly earlier lines"
    MP_MISMATCH = "major premise is not minor -> line"
    FALSUM_IN_IPC = "falsity constant occurs in an IPC line"
    HYPOTHESIS_NOT_IN_L = "falsity constant occurs in an IPC hypothesis"
    BAD_JUSTIFICATION = "unknown justification"


@dataclass(frozen=True)
class Accepted:
    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class Rejected:
    """``line`` is 0-based; None means the hypothesis list itself is at fault."""

    line: int | None
    reason: Reason

    def __bool__(self) -> bool:
        return False


Verdict = Union[Accepted, Rejected]


class ProofError(ValueError):
    """A builder or transformer was handed a proof violating its precondition."""


def axiom_instance(j: Axiom) -> Formula:
    if isinstance(j, Ax1):
        return Implies(j.a, Implies(j.b, j.a))
    if isinstance(j, Ax2):
        a, b, c = j.a, j.b, j.c
        return Implies(Implies(a, Implies(b, c)), Implies(Implies(a, b), Implies(a, c)))
    if isinstance(j, DNeg):
        return Implies(Implies(Implies(j.a, F), F), j.a)
    if isinstance(j, Peirce):
        return Implies(Implies(Implies(j.a, j.b), j.a), j.a)
    raise TypeError(f"not an axiom justification: {j!r}")


def check(p: Proof) -> Verdict:
    """Validate ``p``; returns Accepted or the first failing line."""
    ipc = p.system is SystemId.IPC
    if ipc and any(h.has_falsum for h in p.hypotheses):
        return Rejected(None, Reason.HYPOTHESIS_NOT_IN_L)
    if not p.lines:
        return Rejected(None, Reason.EMPTY_PROOF)
    admitted = _SCHEMES[p.system]
    lines = p.lines
    nhyp = len(p.hypotheses)
    for i, line in enumerate(lines):
        f = line.formula
        j = line.justification
        if ipc and f.has_falsum:
            return Rejected(i, Reason.FALSUM_IN_IPC)
        if isinstance(j, MP):
            m, k = j.minor, j.major
            if not (0 <= m < i and 0 <= k < i):
                return Rejected(i, Reason.MP_INDEX)
            major = lines[k].formula
            if not (
                isinstance(major, Implies)
                and major.antecedent == lines[m].formula
                and major.consequent == f
            ):
                return Rejected(i, Reason.MP_MISMATCH)
        elif isinstance(j, Hyp):
            if not 0 <= j.index < nhyp:
                return Rejected(i, Reason.HYP_OUT_OF_RANGE)
            if p.hypotheses[j.index] != f:
                return Rejected(i, Reason.HYP_MISMATCH)
        elif isinstance(j, (Ax1, Ax2, DNeg, Peirce)):
            if not isinstance(j, admitted):
                return Rejected(i, Reason.SCHEME_NOT_IN_SYSTEM)
            if axiom_instance(j) != f:
                return Rejected(i, Reason.AXIOM_MISMATCH)
        else:
            return Rejected(i, Reason.BAD_JUSTIFICATION)
    return Accepted()


def justification_kinds(p: Proof) -> Counter:
    """Histogram of justification class names, e.g. ``{'MP': 3, 'Ax1': 2}``."""
    return Counter(type(line.justification).__name__ for line in p.lines)


class ProofBuilder:
    """Mutable accumulator of proof lines; justifications are computed here.

    ``embed`` splices a whole proof in, wiring each of its hypotheses either to
    an existing line (a cut: the Hyp line is dropped and references re-routed)
    or to one of this builder's own hypotheses.
    """

    def __init__(self, system: SystemId, hypotheses: Iterable[Formula] = ()):
        self.system = system
        self.hypotheses = list(hypotheses)
        self.lines: list[ProofLine] = []

    def __len__(self) -> int:
        return len(self.lines)

    def formula(self, i: int) -> Formula:
        return self.lines[i].formula

    def _emit(self, f: Formula, j: Justification) -> int:
        self.lines.append(ProofLine(f, j))
        return len(self.lines) - 1

    def axiom(self, j: Axiom) -> int:
        return self._emit(axiom_instance(j), j)

    def ax1(self, a: Formula, b: Formula) -> int:
        return self.axiom(Ax1(a, b))

    def ax2(self, a: Formula, b: Formula, c: Formula) -> int:
        return self.axiom(Ax2(a, b, c))

    def dneg(self, a: Formula) -> int:
        return self.axiom(DNeg(a))

    def peirce(self, a: Formula, b: Formula) -> int:
        return self.axiom(Peirce(a, b))

    def hyp(self, k: int) -> int:
        return self._emit(self.hypotheses[k], Hyp(k))

    def hyp_of(self, f: Formula) -> int:
        """Emit a Hyp line for ``f``, which must be one of the hypotheses."""
        return self.hyp(self.hypotheses.index(f))

    def mp(self, minor: int, major: int) -> int:
        maj = self.lines[major].formula
        if not isinstance(maj, Implies) or maj.antecedent != self.lines[minor].formula:
            raise ProofError(
                f"cannot apply MP: {to_text(self.lines[minor].formula)} "
                f"against {to_text(maj)}"
            )
        return self._emit(maj.consequent, MP(minor, major))

    def copy_line(self, i: int) -> int:
        """Re-emit line ``i`` with the same justification (always valid)."""
        line = self.lines[i]
        return self._emit(line.formula, line.justification)

    def ensure_last(self, i: int) -> int:
        if i != len(self.lines) - 1:
            return self.copy_line(i)
        return i

    def embed(self, p: Proof, wiring: Sequence[int | None] | None = None) -> int:
        """Splice ``p`` in; return the index of its conclusion.

        ``wiring[k]`` is an existing line index proving ``p.hypotheses[k]``, or
        None to cite the builder's own hypothesis with that formula.  Missing
        wiring means "cite own hypotheses" for all of them.
        """
        if p.system is not self.system and not (
            self.system is SystemId.PC and _pc_compatible(p)
        ):
            raise ProofError(f"cannot embed a {p.system} proof into a {self.system} proof")
        if wiring is None:
            wiring = [None] * len(p.hypotheses)
        if len(wiring) != len(p.hypotheses):
            raise ProofError("wiring must cover every hypothesis of the embedded proof")
        own: list[int | None] = []
        for h, w in zip(p.hypotheses, wiring):
            if w is None:
                try:
                    own.append(self.hypotheses.index(h))
                except ValueError:
                    raise ProofError(f"hypothesis {to_text(h)} is not available") from None
            else:
                if self.lines[w].formula != h:
                    raise ProofError(f"line {w} does not prove {to_text(h)}")
                own.append(None)
        index: list[int] = []
        for line in p.lines:
            j = line.justification
            if isinstance(j, Hyp):
                if own[j.index] is None:
                    index.append(wiring[j.index])
                    continue
                index.append(self._emit(line.formula, Hyp(own[j.index])))
            elif isinstance(j, MP):
                index.append(self._emit(line.formula, MP(index[j.minor], index[j.major])))
            else:
                index.append(self._emit(line.formula, j))
        return index[-1]

    def build(self, conclusion: int | None = None) -> Proof:
        """Freeze; if ``conclusion`` is given it is made the last line."""
        if conclusion is not None:
            self.ensure_last(conclusion)
        return Proof(self.system, tuple(self.hypotheses), tuple(self.lines))


def _pc_compatible(p: Proof) -> bool:
    # an IPC proof without Peirce lines is verbatim a PC proof
    return not any(isinstance(line.justification, Peirce) for line in p.lines)


def concat(prefix: Proof, suffix: Proof) -> Proof:
    """Append ``suffix`` after ``prefix``, re-basing its indices.

    Each suffix hypothesis must be a prefix hypothesis or the formula of some
    prefix line; in the latter case the suffix's Hyp lines are routed to that
    line.  The result concludes with the suffix's conclusion.
    """
    if prefix.system is not suffix.system:
        raise ProofError("concat: system mismatch")
    if not prefix.lines or not suffix.lines:
        raise ProofError("concat: both proofs must have at least one line")
    b = ProofBuilder(prefix.system, prefix.hypotheses)
    b.lines.extend(prefix.lines)
    # latest line per formula wins, so a chain of concats cuts to the newest result
    by_formula = {line.formula: i for i, line in enumerate(prefix.lines)}
    wiring: list[int | None] = []
    for h in suffix.hypotheses:
        if h in prefix.hypotheses:
            wiring.append(None)
        elif h in by_formula:
            wiring.append(by_formula[h])
        else:
            raise ProofError(f"concat: hypothesis mismatch, {to_text(h)} is not available")
    return b.build(b.embed(suffix, wiring))


# ---------------------------------------------------------------- text format

_JUST_RE = re.compile(r"(ax1|ax2|dneg|peirce)\s*\((.*)\)\s*\Z|hyp\s+(\d+)\s*\Z|mp\s+(\d+)\s+(\d+)\s*\Z")
_LINE_RE = re.compile(r"(\d+)\s*\.\s*([^;]*);(.*)\Z")
_ARITY = {"ax1": (Ax1, 2), "ax2": (Ax2, 3), "dneg": (DNeg, 1), "peirce": (Peirce, 2)}


@dataclass
class ProofFormatError(ValueError):
    message: str
    lineno: int  # 1-based line of the text file

    def __str__(self) -> str:
        return f"line {self.lineno}: {self.message}"


def _just_text(j: Justification) -> str:
    if isinstance(j, Hyp):
        return f"hyp {j.index + 1}"
    if isinstance(j, MP):
        return f"mp {j.minor + 1} {j.major + 1}"
    if isinstance(j, Ax1):
        args = (j.a, j.b)
    elif isinstance(j, Ax2):
        args = (j.a, j.b, j.c)
    elif isinstance(j, DNeg):
        args = (j.a,)
    else:
        args = (j.a, j.b)
    name = type(j).__name__.lower()
    return f"{name}({'; '.join(to_text(a) for a in args)})"


def format_proof(p: Proof) -> str:
    out = [f"system: {p.system}"]
    out += [f"hyp: {to_text(h)}" for h in p.hypotheses]
    for n, line in enumerate(p.lines, 1):
        out.append(f"{n}. {to_text(line.formula)} ; {_just_text(line.justification)}")
    return "\n".join(out) + "\n"


def _formula_at(text: str, lineno: int) -> Formula:
    try:
        return parse(text)
    except ParseError as e:
        raise ProofFormatError(f"{e} in {text.strip()!r}", lineno) from None


def parse_proof(text: str) -> Proof:
    """Read the line-oriented proof format (inverse of ``format_proof``).

    Only the syntax is validated here; whether the proof is correct is
    ``check``'s business.
    """
    system: SystemId | None = None
    hyps: list[Formula] = []
    lines: list[ProofLine] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        if s.startswith("system:"):
            if system is not None or lines or hyps:
                raise ProofFormatError("'system:' must come first, once", lineno)
            name = s[len("system:"):].strip()
            try:
                system = SystemId(name)
            except ValueError:
                raise ProofFormatError(f"unknown system {name!r}", lineno) from None
            continue
        if system is None:
            raise ProofFormatError("missing 'system:' header", lineno)
        if s.startswith("hyp:"):
            if lines:
                raise ProofFormatError("'hyp:' after proof lines", lineno)
            hyps.append(_formula_at(s[len("hyp:"):], lineno))
            continue
        m = _LINE_RE.match(s)
        if m is None:
            raise ProofFormatError(f"cannot read proof line {s!r}", lineno)
        n = int(m.group(1))
        if n != len(lines) + 1:
            raise ProofFormatError(f"expected line number {len(lines) + 1}, got {n}", lineno)
        formula = _formula_at(m.group(2), lineno)
        jm = _JUST_RE.match(m.group(3).strip())
        if jm is None:
            raise ProofFormatError(f"cannot read justification {m.group(3).strip()!r}", lineno)
        if jm.group(1):
            cls, arity = _ARITY[jm.group(1)]
            args = [a for a in jm.group(2).split(";")]
            if len(args) != arity:
                raise ProofFormatError(
                    f"{jm.group(1)} takes {arity} formula(s), got {len(args)}", lineno
                )
            just: Justification = cls(*(_formula_at(a, lineno) for a in args))
        elif jm.group(3):
            just = Hyp(int(jm.group(3)) - 1)
        else:
            just = MP(int(jm.group(4)) - 1, int(jm.group(5)) - 1)
        lines.append(ProofLine(formula, just))
    if system is None:
        raise ProofFormatError("missing 'system:' header", 1)
    if not lines:
        raise ProofFormatError("proof has no lines", max(1, len(text.splitlines())))
    return Proof(system, tuple(hyps), tuple(lines))
