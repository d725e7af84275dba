from __future__ import annotations

import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import corpus
from skewpbw import (
    BaseRing,
    BaseRingSpec,
    PreconditionError,
    Presentation,
    associated_quasicommutative,
    classify,
    grading_dims,
    homogeneity_check,
    radical_commutation_check,
    radical_quotient,
    validate_presentation,
)
from skewpbw.gradings import augmentation, base_induced, grading_by_name, standard
from skewpbw.skewcore import random_element


def test_associated_quasicommutative_examples():
    W = corpus("weyl")
    G = associated_quasicommutative(W)
    assert classify(G).semi_commutative
    assert G.x(1) * G.x(0) == G.x(0) * G.x(1)
    Q = corpus("qplane")
    assert associated_quasicommutative(Q) == Q
    D = corpus("diffusion")
    GD = associated_quasicommutative(D)
    assert validate_presentation(GD).ok
    assert GD.x(1) * GD.x(0) == GD.x(0) * GD.x(1)
    assert GD.ring == D.ring


@pytest.mark.parametrize("name", ["weyl", "weyl_ore", "diffusion", "ore", "qplane", "dualnum"])
def test_associated_quasicommutative_idempotent_and_valid(name):
    G = associated_quasicommutative(corpus(name))
    assert validate_presentation(G).ok
    assert classify(G).quasi_commutative
    assert associated_quasicommutative(G) == G


@pytest.mark.parametrize("name", ["weyl", "diffusion", "ore", "qplane_twisted"])
def test_filtration_is_multiplicative(name):
    P = corpus(name)

    @given(st.integers(0, 2**32 - 1), st.integers(0, 3), st.integers(0, 3))
    def check(seed, m, k):
        rng = random.Random(seed)
        a = random_element(P, rng, max_degree=m)
        b = random_element(P, rng, max_degree=k)
        assert all(sum(alpha) <= m + k for alpha in (a * b).terms)

    check()


def test_dims_examples():
    Q = corpus("qplane")
    assert grading_dims(Q, standard(Q), 4).series() == [1, 2, 3, 4, 5]
    D = corpus("diffusion")
    dims = grading_dims(D, base_induced(D), (2, 2))
    assert dims.to_json() == [[j, k, (j + 1) * (k + 1)] for j in range(3) for k in range(3)]
    P = corpus("dualnum")
    assert grading_dims(P, augmentation(P), 5).series() == [2] * 6


@pytest.mark.parametrize("n_name,n", [("qplane", 2), ("poly3", 3), ("qplane_f7", 2)])
def test_standard_dims_binomial(n_name, n):
    P = corpus(n_name)
    assert grading_dims(P, standard(P), 6).series() == [comb(p + n - 1, n - 1) for p in range(7)]


@pytest.mark.parametrize("name", ["diffusion", "qplane_y", "qplane_dual"])
def test_base_induced_dims_factor(name):
    P = corpus(name)
    dims = grading_dims(P, base_induced(P), (3, 3))
    for j, k, d in dims.to_json():
        base = len(P.ring.monomials(j))
        assert d == base * len(oracles.monomials(P.n, k))


def test_invalid_gradings():
    W = corpus("weyl_ore")
    with pytest.raises(PreconditionError):
        grading_dims(W, base_induced(W), (2, 2))
    with pytest.raises(PreconditionError):
        grading_dims(corpus("weyl"), standard(corpus("weyl")), 3)
    with pytest.raises(ValueError):
        grading_by_name(corpus("qplane"), "nonsense")


def test_homogeneity_examples():
    Q = corpus("qplane")
    rep = homogeneity_check(Q, standard(Q))
    assert rep.homogeneous and rep.compatible["V"] == ["x1", "x2"]
    assert len(rep.compatible["I"]) == 1
    W = corpus("weyl")
    rep = homogeneity_check(W, standard(W))
    assert not rep.homogeneous and rep.compatible is None
    D = corpus("diffusion")
    rep = homogeneity_check(D, base_induced(D))
    # x_j D_i sits in base degree 1, x-degree 1 while D_2 D_1 sits in (0, 2)
    assert not rep.homogeneous and rep.total_homogeneous
    degrees = {tuple(t["degree"]) for entry in rep.ledger for t in entry["terms"]}
    assert degrees == {(0, 2), (1, 1)}


def test_radical_quotient_examples():
    A = corpus("dualnum")
    Abar = radical_quotient(A)
    assert Abar.ring.m == 0 and Abar.n == 1
    Q = corpus("qplane")
    assert radical_quotient(Q) == Q
    Qd = radical_quotient(corpus("qplane_dual"))
    assert Qd.x(1) * Qd.x(0) == 2 * Qd.x(0) * Qd.x(1)
    ring = BaseRing(BaseRingSpec(("y",), ideal=((2,),)))
    bad = Presentation(ring, ["x1", "x2"], relations={(0, 1): (ring.gen(0),)})
    with pytest.raises(PreconditionError):
        radical_quotient(bad)
    with pytest.raises(PreconditionError):
        radical_quotient(corpus("diffusion"))


@pytest.mark.parametrize("name", ["dualnum", "qplane_dual", "qplane_twisted", "qplane", "qplane_f7"])
def test_radical_commutation(name):
    rep = radical_commutation_check(corpus(name))
    assert rep.ok


def test_radical_commutation_preconditions():
    with pytest.raises(PreconditionError):
        radical_commutation_check(corpus("weyl"))
