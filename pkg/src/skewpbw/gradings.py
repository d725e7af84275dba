"""Gradings of a presentation: weights, component bases and dimensions,
the associated quasi-commutative extension, and the radical quotient.

Every grading here is a pair of nonnegative integer weights per generator,
(main, aux).  Singly graded structures simply have aux = 0 everywhere, so
component keys are always pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .basering import BaseRing, BaseRingSpec
from .classify import classify
from .errors import PreconditionError
from .linalg import rank, same_row_space
from .skewcore import Presentation, Relation, SkewElement


@dataclass(frozen=True)
class GradingSpec:
    """Weights (main, aux) for each skew variable and each base variable.

    kind is one of
      standard      x_i in degree deg(x_i), y_j in degree deg(y_j)
      augmentation  x_i in degree deg(x_i), y_j in degree 0 (bigraded by
                    base degree when R is not finite-dimensional)
      base-induced  bigraded (base degree, x-degree)
      custom        anything else
    """

    kind: str
    xweights: tuple
    bweights: tuple

    @property
    def bigraded(self) -> bool:
        return any(w[1] for w in self.xweights + self.bweights)

    def xshift(self, i: int) -> tuple:
        return self.xweights[i]

    def yshift(self, j: int) -> tuple:
        return self.bweights[j]

    def xdeg(self, alpha) -> tuple:
        return (
            sum(a * w[0] for a, w in zip(alpha, self.xweights)),
            sum(a * w[1] for a, w in zip(alpha, self.xweights)),
        )

    def bdeg(self, e) -> tuple:
        return (
            sum(a * w[0] for a, w in zip(e, self.bweights)),
            sum(a * w[1] for a, w in zip(e, self.bweights)),
        )

    def degree(self, alpha, e) -> tuple:
        a, b = self.xdeg(alpha), self.bdeg(e)
        return (a[0] + b[0], a[1] + b[1])

    def to_dict(self) -> dict:
        return {"kind": self.kind, "x": [list(w) for w in self.xweights], "base": [list(w) for w in self.bweights]}


def standard(P: Presentation) -> GradingSpec:
    return GradingSpec("standard", tuple((d, 0) for d in P.xdegrees), tuple((d, 0) for d in P.ring.degrees))


def augmentation(P: Presentation) -> GradingSpec:
    if P.ring.finite_dimensional:
        bw = tuple((0, 0) for _ in P.ring.degrees)
    else:
        bw = tuple((0, d) for d in P.ring.degrees)
    return GradingSpec("augmentation", tuple((d, 0) for d in P.xdegrees), bw)


def base_induced(P: Presentation) -> GradingSpec:
    return GradingSpec("base-induced", tuple((0, 1) for _ in P.xdegrees), tuple((d, 0) for d in P.ring.degrees))


def grading_by_name(P: Presentation, name: str) -> GradingSpec:
    table = {"standard": standard, "augmentation": augmentation, "base-induced": base_induced}
    if name not in table:
        raise ValueError(f"unknown grading {name!r}; expected one of {', '.join(table)}")
    return table[name](P)


# component bases -----------------------------------------------------------


def _pure_power_caps(ring: BaseRing) -> list:
    caps = [None] * ring.m
    for g in ring.ideal:
        support = [j for j, a in enumerate(g) if a]
        if len(support) == 1:
            j = support[0]
            caps[j] = g[j] - 1 if caps[j] is None else min(caps[j], g[j] - 1)
    return caps


def _bounded_vectors(weights, target, caps, exact=True):
    """All exponent vectors v with sum v_k * weights[k] == target (componentwise).

    With exact=False the weighted sum only has to stay <= target.
    """
    n = len(weights)
    out = []

    def rec(k, rest, prefix):
        if k == n:
            if rest == (0, 0) or not exact:
                out.append(tuple(prefix))
            return
        w = weights[k]
        lims = [rest[c] // w[c] for c in (0, 1) if w[c]]
        if caps[k] is not None:
            lims.append(caps[k])
        if not lims:
            raise PreconditionError("graded components are not finite-dimensional for this grading")
        for a in range(min(lims) + 1):
            prefix.append(a)
            rec(k + 1, (rest[0] - a * w[0], rest[1] - a * w[1]), prefix)
            prefix.pop()

    if target[0] >= 0 and target[1] >= 0:
        rec(0, tuple(target), [])
    return out


def base_basis(ring: BaseRing, g: GradingSpec, deg) -> list:
    """Normal base monomials of degree deg under the base weights of g."""
    key = ("graded", g.bweights, tuple(deg))
    hit = ring._mono_cache.get(key)
    if hit is None:
        vecs = _bounded_vectors(g.bweights, tuple(deg), _pure_power_caps(ring))
        hit = ring._mono_cache[key] = tuple(sorted((e for e in vecs if not ring.in_ideal(e)), reverse=True))
    return hit


def skew_monomials(P: Presentation, k: int, weights=None) -> list:
    """Exponent vectors alpha with weighted x-degree k (weights default to the x-degrees)."""
    weights = tuple(P.xdegrees if weights is None else weights)
    vecs = _bounded_vectors(tuple((w, 0) for w in weights), (k, 0), [None] * P.n)
    return sorted(vecs, reverse=True)


def component_basis(P: Presentation, g: GradingSpec, deg) -> list:
    """Basis (alpha, e) of the component A_deg; the element is y^e x^alpha."""
    cache = P._derived.setdefault(("basis", g), {})
    deg = tuple(deg)
    hit = cache.get(deg)
    if hit is not None:
        return hit
    out = []
    for alpha in _bounded_vectors(g.xweights, deg, [None] * P.n, exact=False):
        xd = g.xdeg(alpha)
        for e in base_basis(P.ring, g, (deg[0] - xd[0], deg[1] - xd[1])):
            out.append((alpha, e))
    out.sort(key=lambda t: (sum(t[0]), t[0], t[1]), reverse=True)
    cache[deg] = out
    return out


@dataclass
class BigradedDims:
    dims: dict  # (main, aux) -> dimension
    grading: GradingSpec

    def to_json(self) -> list:
        return [[a, b, d] for (a, b), d in sorted(self.dims.items())]

    def series(self) -> list:
        """Main-degree dimensions (summed over aux) in increasing degree."""
        top = max((a for a, _ in self.dims), default=-1)
        return [sum(d for (a, _), d in self.dims.items() if a == k) for k in range(top + 1)]

    def __getitem__(self, key):
        return self.dims[tuple(key)]


def grading_valid(P: Presentation, g: GradingSpec) -> tuple[bool, str]:
    if g.kind == "base-induced":
        if not classify(P).constant:
            return False, "the base-induced grading needs a constant extension"
        return True, ""
    rep = homogeneity_check(P, g)
    if not rep.homogeneous:
        return False, rep.failures[0]
    return True, ""


def grading_dims(P: Presentation, g: GradingSpec, bounds) -> BigradedDims:
    """Dimensions of components with main degree <= bounds[0] and aux <= bounds[1]."""
    ok, why = grading_valid(P, g)
    if not ok:
        raise PreconditionError(why)
    if isinstance(bounds, int):
        bounds = (bounds, 0)
    top, aux = bounds[0], bounds[1] if g.bigraded else 0
    dims = {}
    for a in range(top + 1):
        for b in range(aux + 1):
            dims[(a, b)] = len(component_basis(P, g, (a, b)))
    return BigradedDims(dims, g)


# homogeneity -----------------------------------------------------------------


@dataclass
class HomogeneityReport:
    homogeneous: bool
    total_homogeneous: bool
    failures: list = field(default_factory=list)
    ledger: list = field(default_factory=list)
    compatible: dict | None = None

    def to_dict(self) -> dict:
        return {
            "homogeneous": self.homogeneous,
            "total_homogeneous": self.total_homogeneous,
            "failures": list(self.failures),
            "ledger": list(self.ledger),
            "compatible": self.compatible,
        }


def homogeneity_check(P: Presentation, g: GradingSpec) -> HomogeneityReport:
    """Audit the degree of every term of every defining relation under g."""
    ring = P.ring
    xw = g.xweights
    ledger, failures = [], []
    total_ok = True

    def add(i, j):
        return (i[0] + j[0], i[1] + j[1])

    def audit(name, lhs, terms):
        nonlocal total_ok
        entry = {"relation": name, "lhs_degree": list(lhs), "terms": []}
        for label, deg in terms:
            entry["terms"].append({"term": label, "degree": list(deg)})
            if deg != lhs:
                failures.append(f"{name}: term {label} has degree {deg}, expected {lhs}")
            if sum(deg) != sum(lhs):
                total_ok = False
        ledger.append(entry)

    for i in range(P.n):
        for j in range(ring.m):
            lhs = add(xw[i], g.yshift(j))
            terms = []
            s = P.sigma[i].images[j]
            for e in s.terms:
                terms.append((f"sigma: {ring.format_monomial(e) or '1'}*{P.xnames[i]}", add(g.bdeg(e), xw[i])))
            for e in P.delta[i].images[j].terms:
                terms.append((f"delta: {ring.format_monomial(e) or '1'}", g.bdeg(e)))
            audit(f"{P.xnames[i]}*{ring.names[j]}", lhs, terms)
    for (i, j), rel in P.relations.items():
        lhs = add(xw[i], xw[j])
        terms = []
        for e in rel.c.terms:
            terms.append((f"c: {ring.format_monomial(e) or '1'}*{P.xnames[i]}*{P.xnames[j]}", add(g.bdeg(e), lhs)))
        for e in rel.d0.terms:
            terms.append((f"d0: {ring.format_monomial(e) or '1'}", g.bdeg(e)))
        for k, r in enumerate(rel.dlin):
            for e in r.terms:
                terms.append((f"dlin: {ring.format_monomial(e) or '1'}*{P.xnames[k]}", add(g.bdeg(e), xw[k])))
        audit(f"{P.xnames[j]}*{P.xnames[i]}", lhs, terms)

    rep = HomogeneityReport(not failures, total_ok, failures, ledger)
    cl = classify(P)
    if rep.homogeneous and cl.quasi_commutative and cl.r_augmented and g.kind in ("standard", "augmentation"):
        rep.compatible = {
            "V": list(P.xnames),
            "I": [
                f"{P.xnames[j]}*{P.xnames[i]} - ({rel.c})*{P.xnames[i]}*{P.xnames[j]}"
                for (i, j), rel in sorted(P.relations.items())
            ],
        }
    return rep


# derived presentations ----------------------------------------------------------


def associated_quasicommutative(P: Presentation) -> Presentation:
    """Same sigma and constants, no derivations and no lower-order defects."""
    hit = P._derived.get("assoc_qc")
    if hit is not None:
        return hit
    zero = P.ring.zero
    rels = {key: Relation(rel.c, zero, (zero,) * P.n) for key, rel in P.relations.items()}
    Q = Presentation(P.ring, P.xnames, sigma=P.sigma, relations=rels, xdegrees=P.xdegrees)
    if Q == P:
        Q = P
    P._derived["assoc_qc"] = Q
    return Q


def _require_local_base(P: Presentation):
    if P.ring.m and not P.ring.report.local:
        raise PreconditionError("the base ring must be finite-dimensional and local")


def radical_quotient(P: Presentation) -> Presentation:
    """A modulo the ideal generated by the base variables, presented over K."""
    if not classify(P).quasi_commutative:
        raise PreconditionError("the radical quotient is built for quasi-commutative extensions")
    _require_local_base(P)
    K = BaseRing(BaseRingSpec((), (), (), P.field))
    rels = {}
    for (i, j), rel in P.relations.items():
        c = rel.c.constant_term
        if not c:
            raise PreconditionError(
                f"c[{P.xnames[i]},{P.xnames[j]}] vanishes modulo the radical; the quotient is not a skew PBW extension"
            )
        rels[(i, j)] = Relation(K.scalar(c), K.zero, (K.zero,) * P.n)
    return Presentation(K, P.xnames, relations=rels, xdegrees=P.xdegrees)


def _vec(a: SkewElement) -> dict:
    return {(alpha, e): c for alpha, poly in a.raw.items() for e, c in poly.items()}


@dataclass
class CommutationReport:
    ok: bool
    checks: list

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": self.checks}


def radical_commutation_check(P: Presentation, samples: int = 5, seed: int = 0) -> CommutationReport:
    """Compare the subspaces A_1 r and r A_1 for radical elements r.

    A_1 is the x-degree-one part of A (base in degree 0).  The elements r
    tried are the radical basis monomials plus a few seeded random radical
    combinations.
    """
    cl = classify(P)
    if not cl.quasi_commutative or cl.bijective != "yes":
        raise PreconditionError("needs a quasi-commutative bijective extension")
    _require_local_base(P)
    ring = P.ring
    g = GradingSpec("augmentation", tuple((1, 0) for _ in range(P.n)), tuple((0, 0) for _ in range(ring.m)))
    A1 = [P.element({alpha: ring.element({e: 1})}) for alpha, e in component_basis(P, g, (1, 0))]
    rad = [e for e in (ring.all_monomials() if ring.m else []) if any(e)]
    cands = [ring.element({e: 1}) for e in rad]
    rng = random.Random(seed)
    for _ in range(samples if rad else 0):
        cands.append(ring.element({e: rng.randint(-3, 3) for e in rad}))
    checks = []
    ok = True
    for r in cands:
        if not r:
            continue
        rr = P.base(r)
        left = [_vec(b * rr) for b in A1]
        right = [_vec(rr * b) for b in A1]
        eq = same_row_space(left, right, P.field)
        ok = ok and eq
        checks.append({"r": str(r), "dim_A1r": rank(left, P.field), "dim_rA1": rank(right, P.field), "equal": eq})
    return CommutationReport(ok, checks)
