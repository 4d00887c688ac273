import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hilbert_ipc.formula import F, Implies, Var

settings.register_profile(
    "default", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

NAMES = ["p", "q", "r", "s", "x_1", "ab9"]


def formulas(names=NAMES, falsum=True, max_leaves=12):
    atoms = st.sampled_from([Var(n) for n in names])
    if falsum:
        atoms = atoms | st.just(F)
    return st.recursive(
        atoms, lambda sub: st.builds(Implies, sub, sub), max_leaves=max_leaves
    )


l_formulas = formulas(falsum=False)
k_formulas = formulas(falsum=True)
small_l = formulas(names=["p", "q", "r"], falsum=False, max_leaves=5)


@pytest.fixture
def rng():
    return random.Random(20261014)
