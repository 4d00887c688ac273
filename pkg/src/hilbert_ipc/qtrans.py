"""Relative double negation over a fixed implicational formula Q.

With ``Q`` fixed, ``Q(Z)`` is ``Z -> Q`` and ``QQ(Z)`` is ``(Z -> Q) -> Q``.
``phi`` sends falsity to ``Q``, a variable ``p`` to ``QQ(p)``, and
distributes over implication, so every classical formula lands in IPC.
The builders below produce IPC proofs of the basic facts about ``QQ`` and
``phi``; each one follows a DT/MP/HS recipe rather than a hand-written list.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .derive import deduction as _deduction
from .derive import emit_hs, emit_identity, hs
from .formula import Falsum, Formula, Implies, Var, in_L, subformulas, to_text
from .kernel import Hyp, Proof, ProofBuilder, ProofError, ProofLine, SystemId

__all__ = [
    "QContext",
    "q_wrap",
    "qq",
    "phi",
    "qq_intro",
    "qq_elim",
    "qq_distrib",
    "qq_collect",
    "q_of_phi",
    "phi_equiv_qq",
    "phi_to_qq_closed",
]

IPC = SystemId.IPC


def deduction(p: Proof) -> Proof:
    # closed sub-proofs are copied, not re-derived under the discharged hypothesis
    return _deduction(p, sparse=True, verify=False)


@dataclass(frozen=True)
class QContext:
    q: Formula
    _phi: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not in_L(self.q):
            raise ValueError(f"Q must be an IPC formula, got {to_text(self.q)}")


def _require_L(*fs: Formula) -> None:
    for f in fs:
        if not in_L(f):
            raise ProofError(f"{to_text(f)} contains the falsity constant")


def q_wrap(ctx: QContext, z: Formula) -> Implies:
    return Implies(z, ctx.q)


def qq(ctx: QContext, z: Formula) -> Implies:
    return Implies(Implies(z, ctx.q), ctx.q)


def phi(ctx: QContext, z: Formula) -> Formula:
    memo = ctx._phi
    hit = memo.get(z)
    if hit is not None:
        return hit
    for g in subformulas(z):
        if g in memo:
            continue
        if isinstance(g, Falsum):
            memo[g] = ctx.q
        elif isinstance(g, Var):
            memo[g] = qq(ctx, g)
        else:
            memo[g] = Implies(memo[g.antecedent], memo[g.consequent])
    return memo[z]


def qq_intro(ctx: QContext, z: Formula) -> Proof:
    """``z |- QQ z``."""
    _require_L(z)
    b = ProofBuilder(IPC, [z, q_wrap(ctx, z)])
    b.mp(b.hyp(0), b.hyp(1))
    return deduction(b.build())


def qq_elim(ctx: QContext, z: Formula, p: Proof) -> Proof:
    """Given ``p : Q |- z`` build ``QQ z |- z``; one Peirce instance closes it."""
    _require_L(z)
    if p.system is not IPC or p.hypotheses != (ctx.q,) or p.conclusion != z:
        raise ProofError(f"qq_elim needs an IPC proof of {to_text(ctx.q)} |- {to_text(z)}")
    q_imp_z = deduction(p)
    b = ProofBuilder(IPC, [qq(ctx, z), q_wrap(ctx, z)])
    got_q = b.mp(b.hyp(1), b.hyp(0))
    b.mp(got_q, b.embed(q_imp_z))
    # QQ z |- (z -> Q) -> z, then peirce
    lifted = deduction(b.build(len(b) - 1))
    out = ProofBuilder(IPC, lifted.hypotheses)
    out.lines.extend(lifted.lines)
    return out.build(out.mp(len(out) - 1, out.peirce(z, ctx.q)))


def qq_distrib(ctx: QContext, x: Formula, y: Formula) -> Proof:
    """``QQ(x -> y) |- QQ x -> QQ y``, without Peirce."""
    _require_L(x, y)
    xy = Implies(x, y)
    qqx, qy = qq(ctx, x), q_wrap(ctx, y)
    # QQx, Qy, x -> y |- Q
    b = ProofBuilder(IPC, [qqx, qy, xy])
    qx = b.embed(hs(x, y, ctx.q), [b.hyp(2), b.hyp(1)])
    b.mp(qx, b.hyp(0))
    q_xy = deduction(b.build(len(b) - 1))  # QQx, Qy |- Q(x -> y)
    b = ProofBuilder(IPC, [qq(ctx, xy), qqx, qy])
    b.mp(b.embed(q_xy), b.hyp(0))
    return deduction(deduction(b.build(len(b) - 1)))


def qq_collect(ctx: QContext, x: Formula, y: Formula) -> Proof:
    """``QQ x -> QQ y |- QQ(x -> y)``; needs Peirce."""
    _require_L(x, y)
    q = ctx.q
    xy = Implies(x, y)
    q_xy = q_wrap(ctx, xy)
    # Q(x -> y), Qx, Q -> y |- Q
    b = ProofBuilder(IPC, [q_xy, q_wrap(ctx, x), Implies(q, y)])
    got_xy = b.embed(hs(x, q, y), [b.hyp(1), b.hyp(2)])
    b.mp(got_xy, b.hyp(0))
    part = deduction(b.build(len(b) - 1))  # Q(x -> y), Qx |- (Q -> y) -> Q
    b = ProofBuilder(IPC, part.hypotheses)
    b.lines.extend(part.lines)
    b.mp(len(b) - 1, b.peirce(q, y))
    to_qqx = deduction(b.build(len(b) - 1))  # Q(x -> y) |- QQx
    # Q(x -> y), y |- Q
    b = ProofBuilder(IPC, [q_xy, y])
    got_xy = b.mp(b.hyp(1), b.ax1(y, x))
    b.mp(got_xy, b.hyp(0))
    to_qy = deduction(b.build(len(b) - 1))  # Q(x -> y) |- Qy
    b = ProofBuilder(IPC, [Implies(qq(ctx, x), qq(ctx, y)), q_xy])
    got_qqy = b.mp(b.embed(to_qqx, [None]), b.hyp(0))
    b.mp(b.embed(to_qy, [None]), got_qqy)
    return deduction(b.build(len(b) - 1))


def q_of_phi(ctx: QContext, z: Formula) -> Proof:
    """``Q |- phi(z)`` for any classical ``z``, by ax1 along the consequent spine."""
    spine = []
    head = z
    while isinstance(head, Implies):
        spine.append(head.antecedent)
        head = head.consequent
    b = ProofBuilder(IPC, [ctx.q])
    cur = b.hyp(0)
    if isinstance(head, Var):
        cur = b.mp(cur, b.ax1(ctx.q, q_wrap(ctx, head)))
    for x in reversed(spine):
        cur = b.mp(cur, b.ax1(b.formula(cur), phi(ctx, x)))
    return b.build(cur)


def _hs_keep_first(b: ProofBuilder, kept: int, discharged: Formula, mode: str) -> int:
    """Turn a closed line into the pre- or post-composition map it induces.

    ``kept`` proves ``s -> t``.  With mode ``"pre"`` return a line proving
    ``(t -> u) -> (s -> u)`` where ``discharged`` is ``t -> u``; with
    ``"post"`` return ``(r -> s) -> (r -> t)`` where ``discharged`` is
    ``r -> s``.
    """
    sub = ProofBuilder(b.system, [b.formula(kept), discharged])
    if mode == "pre":
        ab, bc = sub.hyp(0), sub.hyp(1)
    else:
        bc, ab = sub.hyp(0), sub.hyp(1)
    p = deduction(sub.build(emit_hs(sub, ab, bc)))
    return b.embed(p, [kept])


def _emit_closed_equivalences(ctx: QContext, z: Formula, b: ProofBuilder) -> dict:
    """For each subformula ``w`` of ``z`` emit ``phi w -> QQ w`` and ``QQ w -> phi w``.

    Returns ``{w: (fwd_line, back_line)}``.  Children are handled first; each
    level adds a constant number of lines, so the total is linear in ``z``.
    """
    lemmas: dict = {}
    for w in subformulas(z):
        if isinstance(w, Var):
            i = emit_identity(b, qq(ctx, w))
            lemmas[w] = (i, i)
            continue
        x, y = w.antecedent, w.consequent
        fx, bx = lemmas[x]
        fy, by = lemmas[y]
        px, py = phi(ctx, x), phi(ctx, y)
        qqx, qqy = qq(ctx, x), qq(ctx, y)
        # phi(x) -> phi(y)  ==>  QQx -> QQy  ==>  QQ(x -> y)
        u = _hs_keep_first(b, bx, Implies(px, py), "pre")
        v = _hs_keep_first(b, fy, Implies(qqx, py), "post")
        uv = emit_hs(b, u, v)
        fwd = emit_hs(b, uv, b.embed(deduction(qq_collect(ctx, x, y))))
        # QQ(x -> y)  ==>  QQx -> QQy  ==>  phi(x) -> phi(y)
        s = _hs_keep_first(b, fx, Implies(qqx, qqy), "pre")
        t = _hs_keep_first(b, by, Implies(px, qqy), "post")
        st = emit_hs(b, s, t)
        back = emit_hs(b, b.embed(deduction(qq_distrib(ctx, x, y))), st)
        lemmas[w] = (fwd, back)
    return lemmas


def phi_to_qq_closed(ctx: QContext, z: Formula) -> Proof:
    """``|- phi(z) -> QQ z`` as a closed proof."""
    _require_L(z)
    b = ProofBuilder(IPC)
    lemmas = _emit_closed_equivalences(ctx, z, b)
    return b.build(lemmas[z][0])


def phi_equiv_qq(ctx: QContext, z: Formula) -> tuple[Proof, Proof]:
    """``(phi z |- QQ z, QQ z |- phi z)`` for ``z`` in IPC."""
    _require_L(z)
    pz, qqz = phi(ctx, z), qq(ctx, z)
    if isinstance(z, Var):
        one = Proof(IPC, (pz,), (ProofLine(pz, Hyp(0)),))
        return one, one
    closed = ProofBuilder(IPC)
    lemmas = _emit_closed_equivalences(ctx, z, closed)
    fwd_at, back_at = lemmas[z]
    out = []
    for hyp, at in ((pz, fwd_at), (qqz, back_at)):
        b = ProofBuilder(IPC, [hyp])
        b.lines.extend(closed.lines)
        out.append(b.build(b.mp(b.hyp(0), at)))
    return out[0], out[1]

