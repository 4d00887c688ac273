import random

import pytest

from hilbert_ipc.corpus import random_formula, random_proof
from hilbert_ipc.derive import deduction, identity, peirce_in_pc
from hilbert_ipc.formula import F, Implies, Var, parse
from hilbert_ipc.kernel import (
    Hyp,
    Peirce,
    Proof,
    ProofBuilder,
    ProofError,
    ProofLine,
    SystemId,
    check,
    format_proof,
    justification_kinds,
)
from hilbert_ipc.prover import is_tautology, prove_ipc, prove_pc
from hilbert_ipc.qtrans import QContext, phi, qq
from hilbert_ipc.transpile import deduce_k_to_l, dneg_in_ipc, ipc_to_pc, pc_to_ipc

PC, IPC = SystemId.PC, SystemId.IPC
p, q = Var("p"), Var("q")
PEIRCE = parse("((p -> q) -> p) -> p")


def no_falsum(pr):
    return not any(line.formula.has_falsum for line in pr.lines)


def test_ipc_to_pc_peirce_one_liner():
    one = Proof(IPC, (), (ProofLine(PEIRCE, Peirce(p, q)),))
    out = ipc_to_pc(one)
    assert check(out) and out.system is PC
    assert out.conclusion == PEIRCE
    assert "Peirce" not in justification_kinds(out)
    assert out.lines == peirce_in_pc(p, q).lines


def test_ipc_to_pc_without_peirce_is_identical():
    rng = random.Random(11)
    for _ in range(20):
        pr = random_proof(rng, IPC, n_hyps=1, max_lines=12)
        if "Peirce" in justification_kinds(pr):
            continue
        out = ipc_to_pc(pr)
        assert out.lines == pr.lines and out.hypotheses == pr.hypotheses
        assert out.system is PC


def test_ipc_to_pc_keeps_hypotheses():
    rng = random.Random(12)
    for _ in range(20):
        pr = random_proof(rng, IPC, n_hyps=2, max_lines=20)
        out = ipc_to_pc(pr)
        assert check(out)
        assert out.sequent.hypotheses == pr.hypotheses
        assert out.conclusion == pr.conclusion


def test_ipc_to_pc_rejects_bad_input():
    with pytest.raises(ProofError):
        ipc_to_pc(identity(p, PC))
    with pytest.raises(ProofError):
        ipc_to_pc(Proof(IPC, (), (ProofLine(p, Hyp(0)),)))


def test_pc_to_ipc_identity():
    pr = identity(p, PC)
    out = pc_to_ipc(pr, parse("p -> p"))
    assert check(out) and out.system is IPC
    assert out.hypotheses == () and out.conclusion == parse("p -> p")
    assert no_falsum(out)


def test_pc_to_ipc_signature_peirce():
    classical = peirce_in_pc(p, q)
    assert justification_kinds(classical)["DNeg"] > 0
    out = pc_to_ipc(classical, PEIRCE)
    assert check(out)
    assert out.conclusion == PEIRCE and out.hypotheses == ()
    assert no_falsum(out)


def test_pc_to_ipc_preconditions():
    with pytest.raises(ProofError):
        pc_to_ipc(Proof(PC, (p,), (ProofLine(p, Hyp(0)),)), p)
    nn = prove_pc(parse("(p -> F) -> p -> q"))
    with pytest.raises(ProofError):
        pc_to_ipc(nn, nn.conclusion)
    with pytest.raises(ProofError):
        pc_to_ipc(identity(p, PC), parse("q -> q"))


@pytest.mark.parametrize("w", ["p", "F", "p -> F", "(p -> q) -> F"])
def test_dneg_image(w):
    w = parse(w)
    ctx = QContext(parse("q -> q"))
    out = dneg_in_ipc(ctx, w)
    assert check(out) and out.hypotheses == ()
    assert out.conclusion == Implies(qq(ctx, phi(ctx, w)), phi(ctx, w))


def test_pc_to_ipc_deterministic():
    a = pc_to_ipc(peirce_in_pc(p, q), PEIRCE)
    b = pc_to_ipc(peirce_in_pc(p, q), PEIRCE)
    assert format_proof(a) == format_proof(b)


def test_round_trip_ipc_pc_ipc():
    rng = random.Random(13)
    done = 0
    while done < 5:
        z = random_formula(rng, 5, names=("p", "q", "r"))
        if is_tautology(z) is not True:
            continue
        done += 1
        ipc = prove_ipc(z)
        again = pc_to_ipc(ipc_to_pc(ipc), z)
        assert check(again) and again.conclusion == z


def test_deduce_k_to_l_trivial():
    pr = Proof(PC, (p,), (ProofLine(p, Hyp(0)),))
    out = deduce_k_to_l(p, p, pr)
    assert check(out)
    assert out.sequent.hypotheses == (p,) and out.conclusion == p


def _peirce_deduction():
    # (p -> q) -> p |- p, the intermediate sequent of the classical Peirce derivation
    closed = peirce_in_pc(p, q)
    b = ProofBuilder(PC, [parse("(p -> q) -> p")])
    b.mp(b.hyp(0), b.embed(closed))
    return b.build()


def test_deduce_k_to_l_peirce_sequent():
    pr = _peirce_deduction()
    assert check(pr)
    x = parse("(p -> q) -> p")
    out = deduce_k_to_l(x, p, pr)
    assert check(out) and out.system is IPC
    assert out.hypotheses == (x,) and out.conclusion == p


def test_deduce_k_to_l_preconditions():
    fx = parse("p -> F")
    with pytest.raises(ProofError):
        deduce_k_to_l(fx, fx, Proof(PC, (fx,), (ProofLine(fx, Hyp(0)),)))
    with pytest.raises(ProofError):
        deduce_k_to_l(q, p, Proof(PC, (p,), (ProofLine(p, Hyp(0)),)))
