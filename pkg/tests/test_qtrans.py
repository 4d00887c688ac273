import random

import pytest
from hypothesis import given

from hilbert_ipc.corpus import random_formula
from hilbert_ipc.derive import deduction
from hilbert_ipc.formula import F, Falsum, Implies, Var, imp_chain, in_L, neg, parse, subformulas
from hilbert_ipc.kernel import (
    DNeg,
    Hyp,
    Proof,
    ProofBuilder,
    ProofError,
    ProofLine,
    SystemId,
    axiom_instance,
    check,
    concat,
    format_proof,
    justification_kinds,
)
from hilbert_ipc.prover import is_tautology
from hilbert_ipc.qtrans import (
    QContext,
    phi,
    phi_equiv_qq,
    phi_to_qq_closed,
    q_of_phi,
    q_wrap,
    qq,
    qq_collect,
    qq_distrib,
    qq_elim,
    qq_intro,
)

from conftest import k_formulas, l_formulas, small_l

IPC = SystemId.IPC
p, q, r = Var("p"), Var("q"), Var("r")
R = QContext(r)


def sequent(pr):
    return pr.hypotheses, pr.conclusion


def peirces(pr):
    return justification_kinds(pr)["Peirce"]


def test_qcontext_requires_L():
    with pytest.raises(ValueError):
        QContext(F)


def test_q_wrap_examples():
    assert q_wrap(R, p) == parse("p -> r")
    assert q_wrap(R, parse("p -> r")) == parse("(p -> r) -> r")
    assert q_wrap(QContext(p), p) == parse("p -> p")


@pytest.mark.parametrize(
    "z, expected",
    [("F", "r"), ("p", "(p -> r) -> r"), ("p -> F", "((p -> r) -> r) -> r")],
)
def test_phi_examples(z, expected):
    assert phi(R, parse(z)) == parse(expected)


@given(k_formulas, k_formulas)
def test_phi_homomorphism(x, y):
    assert phi(R, Implies(x, y)) == Implies(phi(R, x), phi(R, y))


@given(k_formulas, small_l)
def test_phi_partial_negation_and_falsum_free(z, qf):
    ctx = QContext(qf)
    assert phi(ctx, neg(z)) == q_wrap(ctx, phi(ctx, z))
    assert in_L(phi(ctx, z))


def test_phi_injective_on_fresh_variables():
    ctx = QContext(parse("t -> t"))
    rng = random.Random(7)
    seen = {}
    for _ in range(3000):
        z = random_formula(rng, 5, names=("p", "q", "s"))
        image = phi(ctx, z)
        assert seen.setdefault(image, z) == z


def test_naive_phi_fails_q_of_phi():
    # with p kept as p, Q |- phi(z) would require Q -> phi(z) to be a tautology
    def naive(z):
        if isinstance(z, Falsum):
            return r
        if isinstance(z, Var):
            return z
        return Implies(naive(z.antecedent), naive(z.consequent))

    rng = random.Random(3)
    found = None
    for _ in range(200):
        z = random_formula(rng, 3, names=("p", "q"), falsum=True)
        if is_tautology(Implies(r, naive(z))) is not True:
            found = z
            break
    assert found is not None
    # the real phi never has this problem
    assert is_tautology(Implies(r, phi(R, found))) is True
    assert check(q_of_phi(R, found))


@pytest.mark.parametrize("ctx, z", [(R, p), (QContext(p), p), (R, parse("p -> q"))])
def test_qq_intro(ctx, z):
    out = qq_intro(ctx, z)
    assert check(out)
    assert sequent(out) == ((z,), qq(ctx, z))


def test_qq_intro_rejects_falsum():
    with pytest.raises(ProofError):
        qq_intro(R, parse("p -> F"))


@given(small_l, l_formulas)
def test_qq_intro_property(qf, z):
    assert check(qq_intro(QContext(qf), z))


def test_qq_elim_degenerate():
    ctx = QContext(p)
    out = qq_elim(ctx, p, Proof(IPC, (p,), (ProofLine(p, Hyp(0)),)))
    assert check(out)
    assert sequent(out) == ((parse("(p -> p) -> p"),), p)
    assert peirces(out) >= 1


def test_qq_elim_r_imp_r():
    rr = parse("r -> r")
    b = ProofBuilder(IPC, [r])
    b.mp(b.hyp(0), b.ax1(r, r))
    out = qq_elim(R, rr, b.build())
    assert check(out)
    assert sequent(out) == ((parse("((r -> r) -> r) -> r"),), rr)
    assert peirces(out) == 1


def test_qq_elim_precondition():
    with pytest.raises(ProofError):
        qq_elim(R, p, Proof(IPC, (p,), (ProofLine(p, Hyp(0)),)))


def test_qq_distrib_example():
    out = qq_distrib(R, p, q)
    assert check(out)
    assert sequent(out) == (
        (parse("((p -> q) -> r) -> r"),),
        parse("((p -> r) -> r) -> (q -> r) -> r"),
    )
    assert peirces(out) == 0


def test_qq_collect_example():
    out = qq_collect(R, p, q)
    assert check(out)
    assert sequent(out) == (
        (parse("((p -> r) -> r) -> (q -> r) -> r"),),
        parse("((p -> q) -> r) -> r"),
    )
    assert peirces(out) >= 1


def test_qq_degenerate_instances():
    ctx = QContext(p)
    assert check(qq_distrib(ctx, p, p))
    assert check(qq_collect(ctx, p, p))


def test_qq_distrib_deterministic():
    a, b = qq_distrib(R, p, q), qq_distrib(R, p, q)
    assert len(a) == len(b) and format_proof(a) == format_proof(b)


@given(small_l, small_l, small_l)
def test_distrib_collect_equivalence(qf, x, y):
    ctx = QContext(qf)
    d, c = qq_distrib(ctx, x, y), qq_collect(ctx, x, y)
    assert check(d) and check(c) and peirces(d) == 0 and peirces(c) >= 1
    # chain them both ways: each composite is an identity-shaped sequent
    there = concat(d, c)
    back = concat(c, d)
    assert check(there) and sequent(there) == (d.hypotheses, c.conclusion)
    assert check(back) and sequent(back) == (c.hypotheses, d.conclusion)


@pytest.mark.parametrize(
    "z, length",
    [("F", 1), ("p", 3), ("p -> q", 5)],
)
def test_q_of_phi_examples(z, length):
    z = parse(z)
    out = q_of_phi(R, z)
    assert check(out)
    assert sequent(out) == ((r,), phi(R, z))
    assert len(out) == length


@given(small_l, k_formulas)
def test_q_of_phi_property(qf, z):
    ctx = QContext(qf)
    out = q_of_phi(ctx, z)
    assert check(out) and sequent(out) == ((qf,), phi(ctx, z))


def test_phi_equiv_qq_variable_is_syntactic():
    fwd, back = phi_equiv_qq(R, p)
    line = parse("(p -> r) -> r")
    assert fwd == back == Proof(IPC, (line,), (ProofLine(line, Hyp(0)),))


def test_phi_equiv_qq_implication():
    fwd, back = phi_equiv_qq(R, parse("p -> q"))
    assert check(fwd) and check(back)
    assert sequent(fwd) == ((parse("((p -> r) -> r) -> (q -> r) -> r"),), parse("((p -> q) -> r) -> r"))
    assert sequent(back) == ((fwd.conclusion,), fwd.hypotheses[0])


@given(small_l, l_formulas)
def test_phi_equiv_qq_property(qf, z):
    ctx = QContext(qf)
    fwd, back = phi_equiv_qq(ctx, z)
    assert check(fwd) and check(back)
    assert sequent(fwd) == ((phi(ctx, z),), qq(ctx, z))
    assert sequent(back) == ((qq(ctx, z),), phi(ctx, z))


def test_phi_to_qq_closed():
    z = parse("(p -> q) -> p")
    out = phi_to_qq_closed(R, z)
    assert check(out) and out.hypotheses == ()
    assert out.conclusion == Implies(phi(R, z), qq(R, z))


def test_dneg_image_is_provable():
    w = parse("p -> F")
    out = deduction(qq_elim(R, phi(R, w), q_of_phi(R, w)))
    assert check(out)
    assert out.conclusion == phi(R, axiom_instance(DNeg(w)))


@pytest.mark.slow
def test_degree_one_thousand():
    spine = imp_chain([p, q] * 500, r)
    assert spine.degree == 1000
    ctx = QContext(parse("s -> s"))
    out = q_of_phi(ctx, spine)
    assert check(out)
    left = p
    for i in range(1000):
        left = Implies(left, q if i % 2 else p)
    assert phi(ctx, left).degree == 1000 + 2 * 1001 * 2
    fwd, back = phi_equiv_qq(ctx, spine)
    assert check(fwd) and check(back)
    assert fwd.conclusion == qq(ctx, spine)
