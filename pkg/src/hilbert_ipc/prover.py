"""Truth tables and a Kalmar-style PC proof synthesizer.

``prove_pc`` splits on variables in name order, but only as far as needed:
under a partial assignment each subformula is evaluated three-valued, and a
branch is closed as soon as the goal is already forced true.  A closed branch
is proved by structural recursion with a small library of PC lemmas; sibling
branches are merged by discharging the split literal and a case lemma that
uses double negation.  Every lemma is itself a checked proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .derive import deduction, discharge_all, efq_imp, emit_hs, emit_identity
from .formula import F, Falsum, Formula, Implies, Var, in_L, subformulas, to_text, variables
from .kernel import Proof, ProofBuilder, SystemId

__all__ = [
    "Valuation",
    "UnboundVariable",
    "TooManyVariables",
    "NotATautology",
    "eval_formula",
    "is_tautology",
    "prove_pc",
    "prove_ipc",
    "DEFAULT_VARIABLE_CAP",
]

Valuation = Mapping[str, bool]

DEFAULT_VARIABLE_CAP = 20

PC = SystemId.PC


class UnboundVariable(KeyError):
    pass


class TooManyVariables(ValueError):
    pass


@dataclass
class NotATautology(ValueError):
    formula: Formula
    valuation: dict

    def __str__(self) -> str:
        row = ", ".join(f"{k}={'true' if v else 'false'}" for k, v in self.valuation.items())
        return f"{to_text(self.formula)} is not a tautology: falsified by {{{row}}}"


def eval_formula(f: Formula, v: Valuation) -> bool:
    """Two-valued semantics; the falsity constant is always false."""
    val: dict = {}
    for g in subformulas(f):
        if isinstance(g, Falsum):
            val[g] = False
        elif isinstance(g, Var):
            try:
                val[g] = bool(v[g.name])
            except KeyError:
                raise UnboundVariable(g.name) from None
        else:
            val[g] = (not val[g.antecedent]) or val[g.consequent]
    return val[f]


def is_tautology(f: Formula, cap: int = DEFAULT_VARIABLE_CAP) -> bool | dict:
    """True, or the first falsifying valuation (names sorted, false before true).

    All 2^n rows are evaluated at once as bit vectors; row ``r`` gives the
    k-th sorted variable the value of bit ``n - 1 - k`` of ``r``.
    """
    names = variables(f)
    n = len(names)
    if n > cap:
        raise TooManyVariables(f"{n} variables exceeds the cap of {cap}")
    rows = 1 << n
    mask = (1 << rows) - 1
    column = {}
    for k, name in enumerate(names):
        period = 1 << (n - 1 - k)
        pattern = ((1 << period) - 1) << period
        width = 2 * period
        while width < rows:  # doubling, not a loop over rows
            pattern |= pattern << width
            width *= 2
        column[name] = pattern
    val: dict = {}
    for g in subformulas(f):
        if isinstance(g, Falsum):
            val[g] = 0
        elif isinstance(g, Var):
            val[g] = column[g.name]
        else:
            val[g] = (~val[g.antecedent] | val[g.consequent]) & mask
    falsified = ~val[f] & mask
    if not falsified:
        return True
    r = (falsified & -falsified).bit_length() - 1
    return {name: bool((r >> (n - 1 - k)) & 1) for k, name in enumerate(names)}


# ---------------------------------------------------------------- lemma library


class _Lemmas:
    """Closed PC lemma instances, memoized for the duration of one proof."""

    def __init__(self):
        self._memo: dict = {}

    def _get(self, key, make):
        p = self._memo.get(key)
        if p is None:
            p = self._memo[key] = make()
        return p

    def efq_imp(self, x: Formula, y: Formula) -> Proof:
        """``|- (x -> F) -> x -> y``."""
        return self._get(("efq", x, y), lambda: discharge_all(efq_imp(x, y), sparse=True))

    def false_imp(self, x: Formula, y: Formula) -> Proof:
        """``|- x -> (y -> F) -> (x -> y) -> F``."""

        def make():
            b = ProofBuilder(PC, [x, Implies(y, F), Implies(x, y)])
            got_y = b.mp(b.hyp(0), b.hyp(2))
            b.mp(got_y, b.hyp(1))
            return discharge_all(b.build(len(b) - 1), sparse=True)

        return self._get(("fimp", x, y), make)

    def falsum_false(self) -> Proof:
        """``|- F -> F``."""

        def make():
            b = ProofBuilder(PC)
            return b.build(emit_identity(b, F))

        return self._get(("ff",), make)

    def merge(self, p: Formula, f: Formula) -> Proof:
        """``|- (p -> f) -> ((p -> F) -> f) -> f``: case split on ``p``."""

        def make():
            not_f = Implies(f, F)
            b = ProofBuilder(PC, [Implies(p, f), Implies(Implies(p, F), f), not_f])
            not_p = emit_hs(b, b.hyp(0), b.hyp(2))
            got_f = b.mp(not_p, b.hyp(1))
            b.mp(got_f, b.hyp(2))
            nn = deduction(b.build(len(b) - 1), sparse=True)
            b = ProofBuilder(PC, nn.hypotheses)
            b.lines.extend(nn.lines)
            b.mp(len(b) - 1, b.dneg(f))
            return discharge_all(b.build(len(b) - 1), sparse=True)

        return self._get(("merge", p, f), make)


def _three_valued(f: Formula, assign: dict) -> dict:
    val: dict = {}
    for g in subformulas(f):
        if isinstance(g, Falsum):
            val[g] = False
        elif isinstance(g, Var):
            val[g] = assign.get(g.name)
        else:
            a, c = val[g.antecedent], val[g.consequent]
            if a is False or c is True:
                val[g] = True
            elif a is True and c is False:
                val[g] = False
            else:
                val[g] = None
    return val


def _literal(name: str, value: bool) -> Formula:
    return Var(name) if value else Implies(Var(name), F)


def _prove_branch(f: Formula, order: list[str], assign: list[tuple[str, bool]],
                  lemmas: _Lemmas) -> Proof:
    """Proof of ``f`` under the literal hypotheses of ``assign``."""
    hyps = [_literal(n, v) for n, v in assign]
    val = _three_valued(f, dict(assign))
    if val[f] is True:
        return _prove_forced(f, val, hyps, lemmas)
    name = next(n for n in order if n not in dict(assign))
    b = ProofBuilder(PC, hyps)
    cases = []
    for value in (True, False):
        sub = _prove_branch(f, order, assign + [(name, value)], lemmas)
        cases.append(b.embed(deduction(sub, sparse=True, verify=False)))
    m = b.embed(lemmas.merge(Var(name), f))
    return b.build(b.mp(cases[1], b.mp(cases[0], m)))


def _prove_forced(f: Formula, val: dict, hyps: list[Formula], lemmas: _Lemmas) -> Proof:
    """Prove ``g`` (if true) or ``g -> F`` (if false) for every needed subformula."""
    needed = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if g in needed:
            continue
        needed.add(g)
        if isinstance(g, Implies):
            x, y = g.antecedent, g.consequent
            if val[y] is True:
                stack.append(y)
            elif val[x] is False:
                stack.append(x)
            else:
                stack += [x, y]
    b = ProofBuilder(PC, hyps)
    line: dict = {}
    for g in subformulas(f):
        if g not in needed:
            continue
        if isinstance(g, Var):
            line[g] = b.hyp_of(_literal(g.name, val[g]))
        elif isinstance(g, Falsum):
            line[g] = b.embed(lemmas.falsum_false())
        else:
            x, y = g.antecedent, g.consequent
            if val[y] is True:
                line[g] = b.mp(line[y], b.ax1(y, x))
            elif val[x] is False:
                line[g] = b.mp(line[x], b.embed(lemmas.efq_imp(x, y)))
            else:
                lem = b.embed(lemmas.false_imp(x, y))
                line[g] = b.mp(line[y], b.mp(line[x], lem))
    return b.build(line[f])


def prove_pc(f: Formula, cap: int = DEFAULT_VARIABLE_CAP) -> Proof:
    """A closed PC proof of the tautology ``f``."""
    res = is_tautology(f, cap)
    if res is not True:
        raise NotATautology(f, res)
    return _prove_branch(f, variables(f), [], _Lemmas())


def prove_ipc(f: Formula, cap: int = DEFAULT_VARIABLE_CAP) -> Proof:
    """A closed IPC proof of the implicational tautology ``f``, via PC."""
    from .transpile import pc_to_ipc

    if not in_L(f):
        raise ValueError(f"{to_text(f)} contains the falsity constant")
    return pc_to_ipc(prove_pc(f, cap), f)
