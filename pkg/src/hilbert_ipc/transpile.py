"""Proof compilers between PC and IPC.

``ipc_to_pc`` replaces every Peirce axiom line by its PC derivation.
``pc_to_ipc`` maps a closed PC proof line by line through ``phi`` (with
``Q`` set to the conclusion), replaces double-negation axioms by IPC
derivations, and finishes with ``phi(z) -> QQ z`` and one Peirce instance.
"""

from __future__ import annotations

from .derive import deduction, peirce_in_pc
from .formula import Formula, Implies, in_L, to_text
from .kernel import (
    MP,
    Ax1,
    Ax2,
    DNeg,
    Hyp,
    Peirce,
    Proof,
    ProofBuilder,
    ProofError,
    SystemId,
    check,
)
from .qtrans import QContext, phi, phi_to_qq_closed, q_of_phi, qq_elim

__all__ = ["ipc_to_pc", "pc_to_ipc", "dneg_in_ipc", "deduce_k_to_l"]


def _require(p: Proof, system: SystemId, who: str) -> None:
    if p.system is not system:
        raise ProofError(f"{who}: expected a {system} proof, got {p.system}")
    v = check(p)
    if not v:
        raise ProofError(f"{who}: input proof does not check ({v})")


def ipc_to_pc(p: Proof) -> Proof:
    _require(p, SystemId.IPC, "ipc_to_pc")
    b = ProofBuilder(SystemId.PC, p.hypotheses)
    index: list[int] = []
    cache: dict = {}
    for line in p.lines:
        j = line.justification
        if isinstance(j, Peirce):
            key = (j.a, j.b)
            if key not in cache:
                cache[key] = peirce_in_pc(j.a, j.b)
            index.append(b.embed(cache[key]))
        elif isinstance(j, MP):
            index.append(b._emit(line.formula, MP(index[j.minor], index[j.major])))
        else:
            index.append(b._emit(line.formula, j))
    return b.build(index[-1])


def dneg_in_ipc(ctx: QContext, w: Formula) -> Proof:
    """Closed IPC proof of ``QQ phi(w) -> phi(w)``, the image of ``dneg(w)``."""
    pw = phi(ctx, w)
    return deduction(qq_elim(ctx, pw, q_of_phi(ctx, w)), sparse=True)


def pc_to_ipc(p: Proof, z: Formula) -> Proof:
    """Compile a closed PC proof of the implicational formula ``z`` into IPC."""
    _require(p, SystemId.PC, "pc_to_ipc")
    if p.hypotheses:
        raise ProofError("pc_to_ipc: the PC proof must have no hypotheses")
    if p.conclusion != z:
        raise ProofError(f"pc_to_ipc: proof concludes {to_text(p.conclusion)}, not {to_text(z)}")
    if not in_L(z):
        raise ProofError(f"pc_to_ipc: conclusion not in L: {to_text(z)}")
    ctx = QContext(z)
    b = ProofBuilder(SystemId.IPC)
    index: list[int] = []
    dneg_proofs: dict = {}
    for line in p.lines:
        j = line.justification
        if isinstance(j, Ax1):
            index.append(b.ax1(phi(ctx, j.a), phi(ctx, j.b)))
        elif isinstance(j, Ax2):
            index.append(b.ax2(phi(ctx, j.a), phi(ctx, j.b), phi(ctx, j.c)))
        elif isinstance(j, DNeg):
            if j.a not in dneg_proofs:
                dneg_proofs[j.a] = dneg_in_ipc(ctx, j.a)
            index.append(b.embed(dneg_proofs[j.a]))
        elif isinstance(j, MP):
            index.append(b.mp(index[j.minor], index[j.major]))
        else:  # pragma: no cover - check() admits nothing else here
            raise ProofError(f"pc_to_ipc: unexpected justification {j!r}")
    got_phi = index[-1]
    qqz = b.mp(got_phi, b.embed(phi_to_qq_closed(ctx, z)))
    # QQ z with Q = z is (z -> z) -> z; Peirce(z, z) finishes
    return b.build(b.mp(qqz, b.peirce(z, z)))


def deduce_k_to_l(x: Formula, y: Formula, p: Proof) -> Proof:
    """Turn a PC deduction ``x |- y`` into an IPC deduction ``x |- y``."""
    if not (in_L(x) and in_L(y)):
        raise ProofError("deduce_k_to_l: both formulas must be free of the falsity constant")
    _require(p, SystemId.PC, "deduce_k_to_l")
    if p.hypotheses != (x,) or p.conclusion != y:
        raise ProofError(f"deduce_k_to_l: expected a proof of {to_text(x)} |- {to_text(y)}")
    xy = Implies(x, y)
    closed = pc_to_ipc(deduction(p), xy)
    b = ProofBuilder(SystemId.IPC, [x])
    imp = b.embed(closed)
    return b.build(b.mp(b.hyp(0), imp))
