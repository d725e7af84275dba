"""Sub-class detection for presentations, the constant-term map, and base extension."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .basering import BaseElement, BaseRing, BaseRingSpec
from .errors import PreconditionError, RingMismatchError
from .skewcore import Presentation, Relation, SkewElement


@dataclass(frozen=True)
class ClassificationReport:
    constant: bool
    pre_commutative: bool
    quasi_commutative: bool
    endomorphism_type: bool
    derivation_type: bool
    semi_commutative: bool
    bijective: str  # yes | no | unknown
    r_augmented: bool
    augmented_over_K: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _bijective(P: Presentation) -> str:
    status = "yes"
    for s in P.sigma:
        inj = s.injectivity()
        if inj == "no":
            return "no"
        if inj == "unverified":
            status = "unknown"
    for rel in P.relations.values():
        if not P.ring.is_unit(rel.c):
            return "no"
    return status


def classify(P: Presentation) -> ClassificationReport:
    hit = P._derived.get("classify")
    if hit is not None:
        return hit
    derivation_type = all(s.is_identity for s in P.sigma)
    endomorphism_type = all(d.is_zero for d in P.delta)
    constant = derivation_type and endomorphism_type
    pre = all(not rel.d0 for rel in P.relations.values())
    no_lin = all(not any(rel.dlin) for rel in P.relations.values())
    quasi = endomorphism_type and pre and no_lin
    rep = ClassificationReport(
        constant=constant,
        pre_commutative=pre,
        quasi_commutative=quasi,
        endomorphism_type=endomorphism_type,
        derivation_type=derivation_type,
        semi_commutative=quasi and constant,
        bijective=_bijective(P),
        r_augmented=pre and constant,
        # R is connected graded (positive base degrees), so R -> K is a ring map
        augmented_over_K=pre and endomorphism_type,
    )
    P._derived["classify"] = rep
    return rep


def constant_term(P: Presentation, a: SkewElement) -> tuple[BaseElement, bool]:
    """The coefficient of x^0, and whether a -> a_0 is a ring homomorphism."""
    if a.P != P:
        raise RingMismatchError("element of another presentation")
    rep = classify(P)
    return a.constant_term(), rep.pre_commutative and rep.endomorphism_type


def augmentation_split(P: Presentation, a: SkewElement) -> tuple[SkewElement, SkewElement]:
    """a = a0 + a_plus with a0 in R and a_plus in the ideal generated by the x's."""
    zero = P.zero_monomial()
    a0 = SkewElement(P, {zero: a.raw[zero]} if zero in a.raw else {})
    rest = SkewElement(P, {al: c for al, c in a.raw.items() if al != zero})
    return a0, rest


def inflate_module(P: Presentation, W):
    """Turn a graded R-module window into an A-module window with every x acting as 0."""
    from .window import GradedWindow

    rep = classify(P)
    if not (rep.pre_commutative and rep.endomorphism_type):
        raise PreconditionError(
            "R-modules inflate to A-modules only for pre-commutative extensions of endomorphism type"
        )
    if set(W.actions) - set(P.ring.names):
        raise ValueError("the input window must carry base-ring actions only")
    actions = {nm: dict(W.actions.get(nm, {})) for nm in P.ring.names}
    for i, nm in enumerate(P.xnames):
        shift = W.grading.xshift(i)
        actions[nm] = {
            deg: [{} for _ in basis]
            for deg, basis in W.basis.items()
            if W.shifted(deg, shift) in W.basis
        }
    return GradedWindow(P, W.grading, dict(W.basis), actions, W.bounds, label=W.label)


def base_extend(P: Presentation, B: BaseRingSpec) -> Presentation:
    """Extend scalars of an extension over K to the commutative ring B (B central)."""
    if P.ring.m != 0:
        raise PreconditionError("base extension starts from an extension over the field itself")
    if B.field != P.field:
        raise RingMismatchError(f"field mismatch: {P.field} vs {B.field}")
    ring = BaseRing(B)

    def lift(r: BaseElement) -> BaseElement:
        return ring.scalar(r.constant_term)

    rels = {
        key: Relation(lift(rel.c), lift(rel.d0), tuple(lift(v) for v in rel.dlin))
        for key, rel in P.relations.items()
    }
    return Presentation(ring, P.xnames, relations=rels, xdegrees=P.xdegrees)
