"""Derived rules shared by PC and IPC, each producing an explicit proof.

Everything here uses only ax1, ax2, hypotheses and MP, except ``efq`` and
``peirce_in_pc`` which need dneg and are PC-only.
"""

from __future__ import annotations

from .formula import F, Formula, Implies, in_L, to_text
from .kernel import (
    MP,
    DNeg,
    Hyp,
    Peirce,
    Proof,
    ProofBuilder,
    ProofError,
    SystemId,
    check,
    concat,
)

__all__ = [
    "identity",
    "deduction",
    "discharge_all",
    "hs",
    "hs_closed",
    "compose",
    "efq",
    "efq_imp",
    "peirce_in_pc",
]


def _require_checked(p: Proof, who: str) -> None:
    v = check(p)
    if not v:
        raise ProofError(f"{who}: input proof does not check ({v})")


def emit_identity(b: ProofBuilder, a: Formula) -> int:
    """Five lines ending in ``a -> a``; returns the last index."""
    i1 = b.ax1(a, Implies(a, a))
    i2 = b.ax2(a, Implies(a, a), a)
    i3 = b.mp(i1, i2)
    i4 = b.ax1(a, a)
    return b.mp(i4, i3)


def identity(a: Formula, system: SystemId = SystemId.IPC) -> Proof:
    """The standard five-line proof of ``a -> a``."""
    b = ProofBuilder(system)
    return b.build(emit_identity(b, a))


def deduction(p: Proof, *, sparse: bool = False, verify: bool = True) -> Proof:
    """Discharge the last hypothesis ``A`` of ``p``: ``G, A |- B`` becomes ``G |- A -> B``.

    The default is the textbook three-case translation: every line ``Z``
    becomes a derivation of ``A -> Z``.  With ``sparse=True`` only lines that
    actually depend on ``A`` are translated; the rest are copied and lifted
    with ax1 on demand, which keeps repeated discharges from tripling closed
    sub-proofs.  Both variants emit at most ``3n + 2`` lines.
    """
    if verify:
        _require_checked(p, "deduction")
    if not p.hypotheses:
        raise ProofError("deduction: no hypothesis to discharge")
    a_idx = len(p.hypotheses) - 1
    a = p.hypotheses[a_idx]
    b = ProofBuilder(p.system, p.hypotheses[:-1])
    # imp[i]: output index proving A -> Z_i; plain[i]: output index proving Z_i
    imp: list[int | None] = [None] * len(p.lines)
    plain: list[int | None] = [None] * len(p.lines)
    depends = [True] * len(p.lines)
    identity_at: int | None = None

    def lift(i: int) -> int:
        if imp[i] is None:
            z = p.lines[i].formula
            ax = b.ax1(z, a)
            imp[i] = b.mp(plain[i], ax)
        return imp[i]

    for i, line in enumerate(p.lines):
        z, j = line.formula, line.justification
        if isinstance(j, Hyp) and j.index == a_idx:
            if identity_at is None:
                identity_at = emit_identity(b, a)
            imp[i] = identity_at
        elif isinstance(j, MP):
            m, k = j.minor, j.major
            if sparse and not (depends[m] or depends[k]):
                depends[i] = False
                plain[i] = b._emit(z, MP(plain[m], plain[k]))
                continue
            zm = p.lines[m].formula
            im = imp[m] if imp[m] is not None else lift(m)
            ik = imp[k] if imp[k] is not None else lift(k)
            ax = b.ax2(a, zm, z)
            step = b.mp(ik, ax)
            imp[i] = b.mp(im, step)
        else:
            plain[i] = b._emit(z, j)
            if sparse:
                depends[i] = False
            else:
                lift(i)
    last = len(p.lines) - 1
    return b.build(imp[last] if imp[last] is not None else lift(last))


def discharge_all(p: Proof, *, sparse: bool = False) -> Proof:
    """Discharge every hypothesis, last first, leaving a closed proof."""
    _require_checked(p, "discharge_all")
    while p.hypotheses:
        p = deduction(p, sparse=sparse, verify=False)
    return p


def _check_system_formulas(system: SystemId, *fs: Formula) -> None:
    if system is SystemId.IPC:
        for f in fs:
            if not in_L(f):
                raise ProofError(f"{to_text(f)} is not an IPC formula")


def emit_hs(b: ProofBuilder, ab: int, bc: int) -> int:
    """From lines ``a -> b`` and ``b -> c`` derive ``a -> c`` (five new lines)."""
    f_ab, f_bc = b.formula(ab), b.formula(bc)
    a, bb = f_ab.antecedent, f_ab.consequent
    c = f_bc.consequent
    i1 = b.ax1(f_bc, a)
    i2 = b.mp(bc, i1)
    i3 = b.ax2(a, bb, c)
    i4 = b.mp(i2, i3)
    return b.mp(ab, i4)


def hs(a: Formula, b: Formula, c: Formula, system: SystemId = SystemId.IPC) -> Proof:
    """Hypothetical syllogism: ``a -> b, b -> c |- a -> c``."""
    _check_system_formulas(system, a, b, c)
    pb = ProofBuilder(system, [Implies(a, b), Implies(b, c)])
    bc = pb.hyp(1)
    ab = pb.hyp(0)
    return pb.build(emit_hs(pb, ab, bc))


def hs_closed(a: Formula, b: Formula, c: Formula, system: SystemId = SystemId.IPC,
              *, order: str = "ab") -> Proof:
    """Closed form of ``hs``.

    ``order="ab"`` proves ``(a -> b) -> (b -> c) -> a -> c``;
    ``order="bc"`` proves ``(b -> c) -> (a -> b) -> a -> c``.
    """
    _check_system_formulas(system, a, b, c)
    first, second = Implies(a, b), Implies(b, c)
    if order == "bc":
        first, second = second, first
    elif order != "ab":
        raise ValueError("order must be 'ab' or 'bc'")
    pb = ProofBuilder(system, [first, second])
    ab = pb.hyp_of(Implies(a, b))
    bc = pb.hyp_of(Implies(b, c))
    return discharge_all(pb.build(emit_hs(pb, ab, bc)))


def compose(first: Proof, second: Proof) -> Proof:
    """From closed ``|- u -> v`` and ``|- v -> w`` build ``|- u -> w``."""
    if first.hypotheses or second.hypotheses:
        raise ProofError("compose: both proofs must be hypothesis-free")
    b = ProofBuilder(first.system)
    uv = b.embed(first)
    vw = b.embed(second)
    return b.build(emit_hs(b, uv, vw))


# ---------------------------------------------------------------- PC only


def efq(b: Formula) -> Proof:
    """``F |- b``: ax1 gives ``(b -> F) -> F``, then dneg."""
    pb = ProofBuilder(SystemId.PC, [F])
    h = pb.hyp(0)
    i = pb.mp(h, pb.ax1(F, Implies(b, F)))
    return pb.build(pb.mp(i, pb.dneg(b)))


def efq_imp(a: Formula, b: Formula) -> Proof:
    """``a -> F |- a -> b``."""
    pb = ProofBuilder(SystemId.PC, [Implies(a, F), a])
    f = pb.mp(pb.hyp(1), pb.hyp(0))
    pb.embed(efq(b), [f])
    return deduction(pb.build(len(pb) - 1))


def peirce_in_pc(a: Formula, b: Formula) -> Proof:
    """A PC proof of ``((a -> b) -> a) -> a`` that never cites Peirce's law."""
    ab_a = Implies(Implies(a, b), a)
    not_a = Implies(a, F)
    # (a -> b) -> a, a -> F |- F
    start = ProofBuilder(SystemId.PC, [ab_a, not_a])
    start.hyp(1)
    lifted = concat(start.build(), efq_imp(a, b))
    pb = ProofBuilder(SystemId.PC, [ab_a, not_a])
    pb.lines.extend(lifted.lines)
    got_a = pb.mp(len(pb) - 1, pb.hyp(0))
    pb.mp(got_a, pb.hyp(1))
    # (a -> b) -> a |- (a -> F) -> F, then dneg gives a
    nn = deduction(pb.build(len(pb) - 1))
    tail = ProofBuilder(SystemId.PC, [ab_a])
    tail.lines.extend(nn.lines)
    tail.mp(len(tail) - 1, tail.dneg(a))
    return discharge_all(tail.build())
