from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import corpus
from skewpbw import (
    BaseRing,
    BaseRingSpec,
    FieldSpec,
    Presentation,
    RingMismatchError,
    associated_quasicommutative,
    filtration_degree,
    normal_form,
    principal_symbol,
    validate_presentation,
)
from skewpbw.fileformat import eval_element
from skewpbw.skewcore import format_element, random_element

ARITH = ["qplane", "qplane_f7", "weyl", "weyl_ore", "diffusion", "dualnum", "poly3", "qplane_twisted", "ore"]
seeds = st.integers(0, 2**32 - 1)


def nf(P, text):
    return format_element(eval_element(P, text))


def test_normal_form_examples():
    assert nf(corpus("qplane"), "x2*x1") == "(2)·x1^1·x2^1"
    assert nf(corpus("weyl"), "x2*x1*x1") == "(1)·x1^2·x2^1 + (2)·x1^1"
    D = corpus("diffusion")
    assert eval_element(D, "D2*D1") == eval_element(D, "D1*D2 - x2*D1 + x1*D2")
    assert eval_element(D, "(x1*D1)*D2") == eval_element(D, "x1*D1*D2")


def test_addition_and_products():
    Q = corpus("qplane")
    x1, x2 = Q.x(0), Q.x(1)
    assert x1 + Q.zero == x1
    assert format_element(x1 + x1) == "(2)·x1^1"
    assert x1 + (-1) * x1 == Q.zero
    assert x1 * x2 == Q.monomial((1, 1))
    assert x2 * x1 == Q.monomial((1, 1), 2)
    W = corpus("weyl")
    assert W.x(1) * W.x(0) - W.x(0) * W.x(1) == W.one


def test_sigma_and_delta_rewrites():
    P = corpus("ore")  # x y = 2 y x + 1
    x, y = P.x(0), P.y(0)
    assert x * y == P.base(2 * P.ring.gen(0)) * x + P.one
    T = corpus("qplane_twisted")
    assert T.x(0) * T.y(0) == 2 * T.y(0) * T.x(0)


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_weyl_products_match_closed_formula(a1, a2, b1, b2):
    W = corpus("weyl")
    prod = W.monomial((a1, a2)) * W.monomial((b1, b2))
    expected = oracles.weyl_product((a1, a2), (b1, b2))
    assert {al: prod.coefficient(al).constant_term for al in prod.terms} == expected


@pytest.mark.parametrize("name,q,p", [("qplane", 2, None), ("qplane_f7", 2, 7)])
def test_qplane_products_match_closed_formula(name, q, p):
    P = corpus(name)

    @given(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.tuples(st.integers(0, 4), st.integers(0, 4)))
    def check(a, b):
        c, m = oracles.qplane_product(q, a, b)
        c = c % p if p else c
        assert P.monomial(a) * P.monomial(b) == P.monomial(m, c)

    check()


@pytest.mark.parametrize("name", ARITH)
def test_associativity_random_triples(name):
    P = corpus(name)

    @given(seeds)
    def check(seed):
        rng = random.Random(seed)
        a, b, c = (random_element(P, rng, max_degree=4) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    check()


@pytest.mark.parametrize("name", ARITH)
def test_normal_form_idempotent_and_left_free(name):
    P = corpus(name)

    @given(seeds)
    def check(seed):
        rng = random.Random(seed)
        a = random_element(P, rng)
        assert P.element(a.terms) == a
        # sum r_alpha x^alpha = 0 iff every r_alpha = 0
        total = P.zero
        for alpha, r in a.terms.items():
            total = total + P.base(r) * P.monomial(alpha)
        assert total == a
        assert (total == P.zero) == (not a.terms)

    check()


@pytest.mark.parametrize("name", ARITH)
def test_filtration_subadditive(name):
    P = corpus(name)

    @given(seeds)
    def check(seed):
        rng = random.Random(seed)
        a, b = random_element(P, rng), random_element(P, rng)
        if a and b:
            assert filtration_degree(a * b) <= filtration_degree(a) + filtration_degree(b)

    check()


@pytest.mark.parametrize("name", ["qplane", "qplane_f7", "poly3", "qplane_y"])
def test_filtration_additive_for_quasicommutative_domains(name):
    P = corpus(name)

    @given(seeds)
    def check(seed):
        rng = random.Random(seed)
        a, b = random_element(P, rng), random_element(P, rng)
        if a and b:
            assert filtration_degree(a * b) == filtration_degree(a) + filtration_degree(b)

    check()


@pytest.mark.parametrize("name", ["weyl", "diffusion", "weyl_ore", "ore"])
def test_symbol_multiplicativity(name):
    P = corpus(name)
    Q = associated_quasicommutative(P)

    @given(seeds)
    def check(seed):
        rng = random.Random(seed)
        a, b = random_element(P, rng), random_element(P, rng)
        if not a or not b:
            return
        ab = a * b
        if filtration_degree(ab) == filtration_degree(a) + filtration_degree(b):
            assert principal_symbol(ab, Q) == principal_symbol(a, Q) * principal_symbol(b, Q)

    check()


def test_filtration_and_symbol_examples():
    Q = corpus("qplane")
    assert filtration_degree(Q.zero) == -1
    assert filtration_degree(Q.scalar(5)) == 0
    a = Q.monomial((2, 1)) + Q.x(0)
    assert filtration_degree(a) == 3
    assert principal_symbol(a) == Q.monomial((2, 1))
    assert principal_symbol(Q.scalar(5)) == Q.scalar(5)
    W = corpus("weyl")
    G = associated_quasicommutative(W)
    assert principal_symbol(W.x(1) * W.x(0)) == G.monomial((1, 1))
    with pytest.raises(ValueError):
        principal_symbol(W.zero)


def test_validation_examples():
    for name in ("qplane", "weyl", "diffusion", "dualnum", "weyl_ore", "ore"):
        assert validate_presentation(corpus(name)).ok, name
    rep = validate_presentation(corpus("zero_c"))
    assert not rep.ok and "zero" in rep.errors[0]
    rep = validate_presentation(corpus("broken"))
    assert not rep.ok
    assert rep.witness["overlap"] == "x3*x2*x1"
    assert rep.witness["left"] != rep.witness["right"]


def test_one_variable_presentation_skips_pair_checks():
    ring = BaseRing(BaseRingSpec(("y",)))
    P = Presentation(ring, ["x"], sigma={0: [2 * ring.gen(0)]})
    assert P.relations == {}
    assert validate_presentation(P).ok


def test_non_injective_sigma_is_rejected():
    ring = BaseRing(BaseRingSpec(("y",)))
    P = Presentation(ring, ["x"], sigma={0: [ring.zero]})
    rep = validate_presentation(P)
    assert not rep.ok


def test_mismatched_presentations():
    a = corpus("qplane").x(0)
    b = corpus("weyl").x(0)
    with pytest.raises(RingMismatchError):
        a * b


def test_prime_field_arithmetic():
    P = corpus("qplane_f7")
    x1, x2 = P.x(0), P.x(1)
    # 2^3 = 8 = 1 mod 7
    assert x2**3 * x1 == x1 * x2**3
    assert P.field == FieldSpec.prime(7)


def test_raw_expression_normal_form():
    from skewpbw.skewcore import Add, Mul, Num, Pow, Sym

    W = corpus("weyl")
    e = Add((Mul((Sym("x2"), Sym("x1"))), Num(-1)))
    assert normal_form(W, e) == W.monomial((1, 1))
    assert normal_form(W, Pow(Sym("x2"), 2)) == W.monomial((0, 2))


def test_zero_divisors_drop_the_top_degree():
    # over Q[y]/(y^2) the product of two y-led top terms vanishes
    P = corpus("qplane_twisted")
    a = P.y(0) * P.x(0)
    assert filtration_degree(a * a) == -1
