from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import corpus
from skewpbw import (
    BaseRing,
    BaseRingSpec,
    FieldSpec,
    InconclusiveError,
    PreconditionError,
    Presentation,
    abar_equivalence_check,
    base_extend,
    base_koszul_resolution,
    build_window,
    grading_dims,
    koszul_certificate,
    minimal_resolution,
    tensor_resolution_check,
)
from skewpbw.gradings import augmentation, base_induced, standard
from skewpbw.koszul import composition_failures, euler_failures, minimality_failures


def plane(q, field):
    ring = BaseRing(BaseRingSpec((), field=field))
    return Presentation(ring, ["x1", "x2"], relations={(0, 1): (q,)})


def betti_table(cert):
    return {s.i: {deg[0]: cnt for deg, cnt in s.generators} for s in cert.steps if s.generators}


# windows -----------------------------------------------------------------------


def test_window_examples():
    Q = corpus("qplane")
    W = build_window(Q, standard(Q), "A0", (3, 0))
    assert [W.dim((d, 0)) for d in range(4)] == [1, 0, 0, 0]
    P = corpus("dualnum")
    W = build_window(P, augmentation(P), "A0", (3, 0))
    assert [W.dim((d, 0)) for d in range(4)] == [2, 0, 0, 0]
    D = corpus("diffusion")
    W = build_window(D, base_induced(D), "R", (3, 2))
    for (j, k), dim in W.dims().items():
        assert dim == (j + 1 if k == 0 else 0)


@pytest.mark.parametrize("name,kind,target", [
    ("qplane", "standard", "A0"),
    ("poly3", "standard", "A0"),
    ("dualnum", "augmentation", "A0"),
    ("dualnum", "augmentation", "R"),
    ("qplane_y", "augmentation", "R"),
    ("diffusion", "base-induced", "R"),
    ("qplane_dual", "augmentation", "A0"),
])
def test_window_actions_satisfy_relations(name, kind, target):
    from skewpbw.gradings import grading_by_name

    P = corpus(name)
    W = build_window(P, grading_by_name(P, kind), target, (3, 2))
    assert W.check_relations() == []
    assert json.loads(json.dumps(W.to_dict()))["label"] == target


def test_window_rejects_invalid_targets():
    W = corpus("weyl")
    with pytest.raises(PreconditionError):
        build_window(W, standard(W), "A0", 2)
    T = corpus("qplane_twisted")
    with pytest.raises(PreconditionError):
        build_window(T, augmentation(T), "R", 2)


def test_algebra_is_not_generated_by_degree_zero():
    # as a graded module A is bigger than R * A_0: A_1 is nonzero, the degree-0 quotient has nothing there
    for name in ("qplane", "poly3", "dualnum"):
        P = corpus(name)
        g = standard(P) if P.ring.m == 0 else augmentation(P)
        A0 = build_window(P, g, "A0", (2, 0))
        assert grading_dims(P, g, 2).series()[1] > 0
        assert A0.dim((1, 0)) == 0


# resolutions -------------------------------------------------------------------


def test_resolution_examples():
    P = corpus("qplane")
    res = minimal_resolution(P, build_window(P, standard(P), "A0", (6, 0)), 4, 6)
    assert res.betti() == [1, 2, 1]
    P = corpus("dualnum")
    res = minimal_resolution(P, build_window(P, augmentation(P), "R", (6, 0)), 4, 6)
    assert res.betti() == [1, 1]
    assert [s.gen_degrees for s in res.steps] == [[(0, 0)], [(1, 0)]]


@pytest.mark.parametrize("name,mode", [
    ("qplane", "classical"),
    ("qplane_f7", "classical"),
    ("poly3", "classical"),
    ("weighted", "classical"),
    ("dualnum", "generalized"),
    ("qplane_dual", "generalized"),
    ("dualnum", "r_augmented"),
    ("qplane_y", "r_augmented"),
])
def test_resolution_invariants(name, mode):
    cert = koszul_certificate(corpus(name), mode, 3, 7)
    res = cert.resolution
    assert composition_failures(res) == []
    assert minimality_failures(res) == []
    assert euler_failures(res) == []


@given(st.sampled_from([1, 2, -1]), st.sampled_from([None, 7]))
def test_qplane_family_matches_q_oracle(q, p):
    field = FieldSpec.rationals() if p is None else FieldSpec.prime(p)
    cert = koszul_certificate(plane(q, field), "classical", 4, 7)
    assert cert.certified
    assert betti_table(cert) == oracles.qplane_koszul_betti(q, 7, p)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_polynomial_rings_match_koszul_complex(n):
    ring = BaseRing(BaseRingSpec(()))
    P = Presentation(ring, [f"x{i}" for i in range(1, n + 1)])
    cert = koszul_certificate(P, "classical", n + 1, n + 4)
    assert cert.certified
    assert betti_table(cert) == oracles.commutative_koszul_betti(n, n + 4)


def test_certificate_examples():
    assert koszul_certificate(corpus("qplane"), "classical", 4, 6).certified
    assert koszul_certificate(corpus("dualnum"), "generalized", 4, 6).certified
    cert = koszul_certificate(corpus("weighted"), "classical", 2, 5)
    assert cert.verdict == "refuted"
    assert cert.witness["step"] == 1 and cert.witness["degree"] == 2
    assert not cert.certified


def test_certificate_json_shape():
    cert = koszul_certificate(corpus("qplane"), "classical", 4, 8)
    doc = json.loads(json.dumps(cert.to_dict()))
    assert set(doc) == {"mode", "bounds", "steps", "verdict", "witness", "notes"}
    assert doc["steps"][1]["generators"] == [{"degree": 1, "count": 2}]


def test_inconclusive_bounds():
    with pytest.raises(InconclusiveError):
        koszul_certificate(corpus("qplane"), "classical", 4, 5)


def test_mode_preconditions():
    with pytest.raises(PreconditionError):
        koszul_certificate(corpus("weyl"), "classical", 2, 6)
    with pytest.raises(PreconditionError):
        koszul_certificate(corpus("qplane_twisted"), "r_augmented", 2, 6)
    with pytest.raises(PreconditionError):
        koszul_certificate(corpus("diffusion"), "generalized", 2, 6)
    with pytest.raises(ValueError):
        koszul_certificate(corpus("qplane"), "bogus", 2, 6)


def test_r_augmented_over_infinite_base_is_noted():
    cert = koszul_certificate(corpus("qplane_y"), "r_augmented", 3, 7)
    assert cert.certified
    assert any("not finite-dimensional" in n for n in cert.notes)


def test_right_module_side():
    cert = koszul_certificate(corpus("qplane"), "classical", 4, 8, side="right")
    assert cert.certified and cert.betti() == [1, 2, 1]


# base resolutions and the tensored check ------------------------------------------


def test_base_resolutions():
    res = base_koszul_resolution(BaseRingSpec(("a", "b")))
    assert res.kind == "koszul-complex" and res.ranks == [1, 2, 1] and res.exact_to >= 0
    res = base_koszul_resolution(BaseRingSpec(("y",), ideal=((2,),)), length=4)
    assert res.kind == "periodic" and res.ranks == [1] * 5
    y = res.ring.gen(0)
    assert all(rows == [{0: y}] for rows in res.differentials)
    res = base_koszul_resolution(BaseRingSpec(()))
    assert res.ranks == [1]
    with pytest.raises(PreconditionError):
        base_koszul_resolution(BaseRingSpec(("y",), ideal=((3,),)))


def test_tensor_examples():
    rep = tensor_resolution_check(corpus("diffusion"), 2, (4, 3))
    assert rep.verified and rep.ranks == [1, 2, 1]
    B = base_extend(corpus("qplane"), BaseRingSpec(("y",)))
    rep = tensor_resolution_check(B, 1, (3, 3))
    assert rep.verified and rep.ranks == [1, 1]
    assert tensor_resolution_check(corpus("dualnum"), 2, (3, 3)).verified
    with pytest.raises(PreconditionError):
        tensor_resolution_check(corpus("weyl_ore"), 2, (3, 3))


def test_abar_examples():
    rep = abar_equivalence_check(corpus("dualnum"), 4, 8)
    assert rep.agree and rep.generalized.certified and rep.quotient.certified
    rep = abar_equivalence_check(corpus("qplane"), 4, 8)
    assert rep.agree and rep.generalized.certified
    rep = abar_equivalence_check(corpus("qplane_dual"), 3, 5)
    assert rep.agree and rep.generalized.certified and rep.quotient.certified
    with pytest.raises(PreconditionError):
        abar_equivalence_check(corpus("diffusion"), 2, 6)
