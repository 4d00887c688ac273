"""Random formulas and proofs for property tests and experiment scripts.

All generators take an explicit ``random.Random`` so corpora are reproducible.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .formula import F, Formula, Implies, Var
from .kernel import (
    MP,
    Ax1,
    Ax2,
    DNeg,
    Hyp,
    Peirce,
    Proof,
    ProofLine,
    SystemId,
    axiom_instance,
)

__all__ = [
    "catalan",
    "count_formulas",
    "uniform_formula",
    "random_formula",
    "random_proof",
    "dedupe",
]

DEFAULT_VARS = ("p", "q", "r", "s")


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n == 0:
        return 1
    return sum(catalan(k) * catalan(n - 1 - k) for k in range(n))


def count_formulas(n_cond: int, n_atoms: int) -> int:
    """Formulas with exactly ``n_cond`` conditionals over ``n_atoms`` leaf symbols."""
    return catalan(n_cond) * n_atoms ** (n_cond + 1)


def _uniform_tree(n: int, leaves: list[Formula], rng: random.Random) -> Formula:
    # pick the left-subtree size with weight C_k * C_{n-1-k}, iteratively
    work: list = [n]
    out: list[Formula] = []
    while work:
        item = work.pop()
        if item == "build":
            right = out.pop()
            left = out.pop()
            out.append(Implies(left, right))
            continue
        if item == 0:
            out.append(rng.choice(leaves))
            continue
        total = catalan(item)
        pick = rng.randrange(total)
        for k in range(item):
            w = catalan(k) * catalan(item - 1 - k)
            if pick < w:
                break
            pick -= w
        work.append("build")
        work.append(item - 1 - k)
        work.append(k)
    return out[0]


def uniform_formula(rng: random.Random, max_cond: int, names=DEFAULT_VARS,
                    falsum: bool = False) -> Formula:
    """Uniform over all formulas with at most ``max_cond`` conditionals."""
    leaves: list[Formula] = [Var(n) for n in names] + ([F] if falsum else [])
    weights = [count_formulas(n, len(leaves)) for n in range(max_cond + 1)]
    n = rng.choices(range(max_cond + 1), weights=weights)[0]
    return _uniform_tree(n, leaves, rng)


def random_formula(rng: random.Random, max_degree: int, names=DEFAULT_VARS,
                   falsum: bool = False) -> Formula:
    """Degree drawn uniformly from ``0..max_degree``, then a uniform tree of that size."""
    leaves: list[Formula] = [Var(n) for n in names] + ([F] if falsum else [])
    return _uniform_tree(rng.randint(0, max_degree), leaves, rng)


def random_proof(rng: random.Random, system: SystemId, *, max_lines: int = 25,
                 n_hyps: int = 0, max_degree: int = 2, names=("p", "q", "r"),
                 mp_bias: float = 0.5) -> Proof:
    """A checking proof built by forward chaining from random axioms and hypotheses."""
    falsum = system is SystemId.PC
    hyps = tuple(random_formula(rng, max_degree, names, falsum) for _ in range(n_hyps))
    lines: list[ProofLine] = []

    def rf() -> Formula:
        return random_formula(rng, max_degree, names, falsum)

    target = rng.randint(1, max_lines)
    while len(lines) < target:
        if lines and rng.random() < mp_bias:
            options = [
                (m, k)
                for k, major in enumerate(lines)
                if isinstance(major.formula, Implies)
                for m, minor in enumerate(lines)
                if minor.formula == major.formula.antecedent
            ]
            if options:
                m, k = rng.choice(options)
                lines.append(ProofLine(lines[k].formula.consequent, MP(m, k)))
                continue
        roll = rng.random()
        if hyps and roll < 0.3:
            k = rng.randrange(len(hyps))
            lines.append(ProofLine(hyps[k], Hyp(k)))
            continue
        kinds = [Ax1, Ax2, DNeg if system is SystemId.PC else Peirce]
        kind = rng.choice(kinds)
        if kind is Ax1:
            j = Ax1(rf(), rf())
        elif kind is Ax2:
            j = Ax2(rf(), rf(), rf())
        elif kind is DNeg:
            j = DNeg(rf())
        else:
            j = Peirce(rf(), rf())
        lines.append(ProofLine(axiom_instance(j), j))
    return Proof(system, hyps, tuple(lines))


def dedupe(p: Proof) -> Proof:
    """Drop repeated formulas, keeping first occurrences (the result still checks).

    The last line's formula is kept last, so the conclusion is preserved.
    """
    first: dict = {}
    keep: list[int] = []
    new_index: dict = {}
    for i, line in enumerate(p.lines):
        if line.formula in first:
            new_index[i] = new_index[first[line.formula]]
            continue
        first[line.formula] = i
        new_index[i] = len(keep)
        keep.append(i)
    lines = []
    for i in keep:
        line = p.lines[i]
        j = line.justification
        if isinstance(j, MP):
            j = MP(new_index[j.minor], new_index[j.major])
        lines.append(ProofLine(line.formula, j))
    # the conclusion may have appeared earlier; truncate so it ends the proof
    last = new_index[len(p.lines) - 1]
    return Proof(p.system, p.hypotheses, tuple(lines[: last + 1]))
