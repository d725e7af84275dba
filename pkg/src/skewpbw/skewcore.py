"""Presentations of skew PBW extensions and arithmetic by rewriting.

A presentation encodes

    x_i r     = sigma_i(r) x_i + delta_i(r)
    x_j x_i   = c_ij x_i x_j + d0_ij + sum_k dlin_ij[k] x_k      (i < j)

and elements are kept in the normal form  sum_alpha r_alpha x^alpha  with
all base coefficients on the left and variables sorted x_1 < ... < x_n.
The raw internal form of an element is ``{alpha: {exponent: scalar}}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .basering import BaseElement, BaseRing, DerMap, EndoMap, validate_base_spec
from .errors import MapError, RingMismatchError, ValidationError

Monomial = tuple  # exponent vector alpha of a standard monomial x^alpha


def _unit(n: int, i: int) -> Monomial:
    e = [0] * n
    e[i] = 1
    return tuple(e)


def _add_vec(a, b):
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class Relation:
    """Right-hand side of x_j x_i = c x_i x_j + d0 + sum_k dlin[k] x_k."""

    c: BaseElement
    d0: BaseElement
    dlin: tuple

    @property
    def has_defect(self) -> bool:
        return bool(self.d0) or any(self.dlin)


class Presentation:
    """Defining data of A = sigma(R)<x_1, ..., x_n>.

    Missing sigma/delta entries default to the identity / zero map and
    missing pair relations to x_j x_i = x_i x_j.  Products are memoized on
    the instance; the defining data itself is never mutated.
    """

    def __init__(
        self,
        ring: BaseRing,
        xnames,
        sigma=None,
        delta=None,
        relations: Mapping | None = None,
        xdegrees=None,
    ):
        self.ring = ring
        self.xnames = tuple(xnames)
        n = self.n = len(self.xnames)
        if n < 1:
            raise ValueError("a skew PBW extension needs at least one variable")
        if len(set(self.xnames)) != n:
            raise ValueError("duplicate skew variable names")
        clash = set(self.xnames) & set(ring.names)
        if clash:
            raise ValueError(f"names used for both base and skew variables: {sorted(clash)}")
        self.xdegrees = tuple(xdegrees) if xdegrees is not None else (1,) * n
        if len(self.xdegrees) != n or any(not isinstance(w, int) or w < 1 for w in self.xdegrees):
            raise ValueError("skew variable degrees must be n positive integers")

        sigma = dict(enumerate(sigma)) if isinstance(sigma, (list, tuple)) else dict(sigma or {})
        delta = dict(enumerate(delta)) if isinstance(delta, (list, tuple)) else dict(delta or {})
        self.sigma = tuple(self._as_map(EndoMap, sigma.get(i)) for i in range(n))
        self.delta = tuple(self._as_map(DerMap, delta.get(i)) for i in range(n))

        rels = {}
        given = dict(relations or {})
        for (i, j), rel in given.items():
            if not (0 <= i < j < n):
                raise ValueError(f"relation index ({i}, {j}) must satisfy 0 <= i < j < n")
        for i, j in combinations(range(n), 2):
            rel = given.get((i, j))
            rels[(i, j)] = self._as_relation(rel)
        self.relations = rels
        self._mb: dict = {}
        self._mm: dict = {}
        self._mv: dict = {}
        self._derived: dict = {}

    def _as_map(self, cls, spec):
        if spec is None:
            return cls(self.ring)
        if isinstance(spec, cls):
            if spec.ring != self.ring:
                raise RingMismatchError("map over a different base ring")
            return spec
        return cls(self.ring, [self._coerce(v) for v in spec])

    def _coerce(self, v) -> BaseElement:
        if isinstance(v, BaseElement):
            if v.ring != self.ring:
                raise RingMismatchError("coefficient over a different base ring")
            return v
        if isinstance(v, Mapping):
            return self.ring.element(v)
        return self.ring.scalar(v)

    def _as_relation(self, rel) -> Relation:
        zero = self.ring.zero
        if rel is None:
            return Relation(self.ring.one, zero, (zero,) * self.n)
        if isinstance(rel, Relation):
            c, d0, dlin = rel.c, rel.d0, rel.dlin
        elif isinstance(rel, Mapping):
            c = rel.get("c", 1)
            d0 = rel.get("d0", 0)
            dlin = rel.get("dlin", {})
        else:
            c, d0, dlin = (tuple(rel) + (0, {}))[:3]
        if isinstance(dlin, Mapping):
            dlin = [dlin.get(k, 0) for k in range(self.n)]
        dlin = tuple(self._coerce(v) for v in dlin)
        if len(dlin) != self.n:
            raise ValueError("dlin needs one entry per skew variable")
        return Relation(self._coerce(c), self._coerce(d0), dlin)

    # identity ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.xnames == other.xnames
            and self.xdegrees == other.xdegrees
            and self.sigma == other.sigma
            and self.delta == other.delta
            and self.relations == other.relations
        )

    def __hash__(self):
        return id(self)

    def __repr__(self):
        return f"Presentation({self.ring.describe()}<{', '.join(self.xnames)}>)"

    @property
    def field(self):
        return self.ring.field

    @property
    def is_constant(self) -> bool:
        return all(s.is_identity for s in self.sigma) and all(d.is_zero for d in self.delta)

    # element constructors -----------------------------------------------

    def zero_monomial(self) -> Monomial:
        return (0,) * self.n

    def element(self, terms: Mapping | None = None) -> SkewElement:
        raw = {}
        for alpha, coef in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != self.n or any(a < 0 for a in alpha):
                raise ValueError(f"bad monomial {alpha}")
            r = self._coerce(coef)
            if r:
                prev = raw.get(alpha)
                raw[alpha] = r.terms if prev is None else self.ring._add(prev, r.terms)
        return SkewElement(self, {a: t for a, t in raw.items() if t})

    def _wrap(self, raw: dict) -> SkewElement:
        return SkewElement(self, raw)

    def scalar(self, c) -> SkewElement:
        return self.element({self.zero_monomial(): c})

    def base(self, r: BaseElement) -> SkewElement:
        return self.element({self.zero_monomial(): r})

    @property
    def zero(self) -> SkewElement:
        return SkewElement(self, {})

    @property
    def one(self) -> SkewElement:
        return self.scalar(1)

    def x(self, i: int) -> SkewElement:
        return SkewElement(self, {_unit(self.n, i): {self.ring.unit: self.field.one}})

    def y(self, j: int) -> SkewElement:
        return self.base(self.ring.gen(j))

    def monomial(self, alpha, coef=1) -> SkewElement:
        return self.element({tuple(alpha): coef})

    def gens(self) -> dict:
        """Name -> element for every base and skew generator."""
        out = {nm: self.y(j) for j, nm in enumerate(self.ring.names)}
        out.update({nm: self.x(i) for i, nm in enumerate(self.xnames)})
        return out

    def relation_element(self, i: int, j: int) -> SkewElement:
        """Normal form of x_j x_i (i < j) as prescribed by the relation."""
        return SkewElement(self, self._rel_raw(i, j))

    def _rel_raw(self, i, j):
        rel = self.relations[(i, j)]
        out = {}
        if rel.c:
            out[_add_vec(_unit(self.n, i), _unit(self.n, j))] = rel.c.terms
        if rel.d0:
            out[self.zero_monomial()] = rel.d0.terms
        for k, r in enumerate(rel.dlin):
            if r:
                out[_unit(self.n, k)] = r.terms
        return out

    # rewriting kernels ---------------------------------------------------

    def _mono_base(self, alpha: Monomial, e) -> dict:
        """x^alpha * y^e in raw normal form."""
        key = (alpha, e)
        hit = self._mb.get(key)
        if hit is not None:
            return hit
        ring = self.ring
        if not any(alpha) or not any(e):
            out = {alpha: {e: ring.field.one}}
        else:
            k = max(i for i, a in enumerate(alpha) if a)
            rest = list(alpha)
            rest[k] -= 1
            rest = tuple(rest)
            sig, der = self.sigma[k], self.delta[k]
            acc: dict = {}
            s = sig.image_raw(e)
            if s:
                for gamma, t in self._mono_base_poly(rest, s).items():
                    _acc(acc, _add_vec(gamma, _unit(self.n, k)), t)
            if not der.is_zero:
                d = der.image_raw(sig, e)
                if d:
                    for gamma, t in self._mono_base_poly(rest, d).items():
                        _acc(acc, gamma, t)
            out = self._norm(acc)
        self._mb[key] = out
        return out

    def _mono_base_poly(self, alpha: Monomial, r: dict) -> dict:
        """x^alpha * r for a raw base polynomial r."""
        if not any(alpha) or self._is_const():
            return {alpha: r} if r else {}
        acc: dict = {}
        for e, c in r.items():
            for gamma, t in self._mono_base(alpha, e).items():
                _acc(acc, gamma, t, c)
        return self._norm(acc)

    def _is_const(self) -> bool:
        flag = self._derived.get("const")
        if flag is None:
            flag = self._derived["const"] = self.is_constant
        return flag

    def _mono_var(self, gamma: Monomial, j: int) -> dict:
        """x^gamma * x_j."""
        key = (gamma, j)
        hit = self._mv.get(key)
        if hit is not None:
            return hit
        one = {self.ring.unit: self.field.one}
        nz = [i for i, a in enumerate(gamma) if a]
        if not nz or nz[-1] <= j:
            out = {_add_vec(gamma, _unit(self.n, j)): one}
        else:
            k = nz[-1]
            rest = list(gamma)
            rest[k] -= 1
            # x^gamma x_j = x^rest (x_k x_j), and x_k x_j is rewritten by the (j, k) relation
            out = self._mul_raw({tuple(rest): one}, self._rel_raw(j, k))
        self._mv[key] = out
        return out

    def _mono_mono(self, gamma: Monomial, beta: Monomial) -> dict:
        """x^gamma * x^beta."""
        key = (gamma, beta)
        hit = self._mm.get(key)
        if hit is not None:
            return hit
        one = {self.ring.unit: self.field.one}
        nzb = [i for i, a in enumerate(beta) if a]
        nzg = [i for i, a in enumerate(gamma) if a]
        if not nzb or not nzg or nzg[-1] <= nzb[0]:
            out = {_add_vec(gamma, beta): one}
        else:
            first = nzb[0]
            rest = list(beta)
            rest[first] -= 1
            rest = tuple(rest)
            acc: dict = {}
            ring = self.ring
            for delta, coef in self._mono_var(gamma, first).items():
                for eps, u in self._mono_mono(delta, rest).items():
                    tgt = acc.setdefault(eps, {})
                    ring._addmul_into(tgt, coef, u)
            out = self._norm(acc)
        self._mm[key] = out
        return out

    def _mul_raw(self, a: dict, b: dict) -> dict:
        ring = self.ring
        acc: dict = {}
        for alpha, ra in a.items():
            for beta, rb in b.items():
                for gamma, s in self._mono_base_poly(alpha, rb).items():
                    coef = ring._mul(ra, s)
                    if not coef:
                        continue
                    for delta, u in self._mono_mono(gamma, beta).items():
                        tgt = acc.setdefault(delta, {})
                        ring._addmul_into(tgt, coef, u)
        return self._norm(acc)

    def _norm(self, acc: dict) -> dict:
        out = {}
        for alpha, poly in acc.items():
            poly = self.ring._normalize(poly)
            if poly:
                out[alpha] = poly
        return out

    # validation ----------------------------------------------------------

    def validated(self, seed: int | None = 0) -> Presentation:
        """Return self after a successful validate_presentation, else raise."""
        if "validated" not in self._derived:
            report = validate_presentation(self, seed=seed)
            if not report.ok:
                raise ValidationError(report.errors[0], report)
            self._derived["validated"] = report
        return self

    def xname(self, i):
        return self.xnames[i]


def _acc(acc: dict, alpha, poly: dict, scale=1):
    tgt = acc.setdefault(alpha, {})
    for e, c in poly.items():
        tgt[e] = tgt.get(e, 0) + scale * c


class SkewElement:
    """Element of A in normal form: {alpha: base coefficient}.  Immutable by convention."""

    __slots__ = ("P", "raw", "_hash")

    def __init__(self, P: Presentation, raw: dict):
        self.P = P
        self.raw = raw
        self._hash = None

    @property
    def terms(self) -> dict:
        return {alpha: BaseElement(self.P.ring, poly) for alpha, poly in self.raw.items()}

    def coefficient(self, alpha) -> BaseElement:
        return BaseElement(self.P.ring, self.raw.get(tuple(alpha), {}))

    def _check(self, other):
        if isinstance(other, SkewElement):
            if other.P is not self.P and other.P != self.P:
                raise RingMismatchError("elements of different presentations")
            return other
        if isinstance(other, BaseElement):
            return self.P.base(other)
        if isinstance(other, (int, Fraction)):
            return self.P.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    def __rmul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return multiply(other, self)

    def __pow__(self, k: int):
        out = self.P.one
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> SkewElement:
        f = self.P.field
        c = f(c)
        return SkewElement(self.P, self.P._norm({a: {e: v * c for e, v in p.items()} for a, p in self.raw.items()}))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, BaseElement)):
            other = self._check(other)
        if not isinstance(other, SkewElement):
            return NotImplemented
        return self.P == other.P and self.raw == other.raw

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((a, frozenset(p.items())) for a, p in self.raw.items()))
        return self._hash

    def __bool__(self):
        return bool(self.raw)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"SkewElement({self})"

    @property
    def degree(self) -> int:
        return filtration_degree(self)

    def constant_term(self) -> BaseElement:
        return BaseElement(self.P.ring, self.raw.get(self.P.zero_monomial(), {}))


def format_element(a: SkewElement, sep: str = "·") -> str:
    """Canonical printing: graded-lex descending in alpha, coefficients parenthesized."""
    P = a.P
    if not a.raw:
        return "0"
    keys = sorted(a.raw, key=lambda al: (sum(al), al), reverse=True)
    parts = []
    for alpha in keys:
        coef = "(" + P.ring.format_raw(a.raw[alpha]) + ")"
        monos = [f"{P.xnames[i]}^{k}" for i, k in enumerate(alpha) if k]
        parts.append(sep.join([coef] + monos))
    return " + ".join(parts)


# RawExpr ---------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Add:
    terms: tuple


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Mul:
    factors: tuple  # ordered: noncommutative product


@dataclass(frozen=True)
class Div:
    num: object
    den: object  # must evaluate to a nonzero scalar


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


RawExpr = (Num, Sym, Add, Neg, Mul, Div, Pow)


def evaluate(expr, *, num, sym, add, neg, mul, div, pow_):
    """Fold an expression tree with the given constructors."""

    def go(e):
        if isinstance(e, Num):
            return num(e.value)
        if isinstance(e, Sym):
            return sym(e.name)
        if isinstance(e, Add):
            vals = [go(t) for t in e.terms]
            out = vals[0]
            for v in vals[1:]:
                out = add(out, v)
            return out
        if isinstance(e, Neg):
            return neg(go(e.arg))
        if isinstance(e, Mul):
            vals = [go(t) for t in e.factors]
            out = vals[0]
            for v in vals[1:]:
                out = mul(out, v)
            return out
        if isinstance(e, Div):
            return div(go(e.num), go(e.den))
        if isinstance(e, Pow):
            return pow_(go(e.base), e.exp)
        raise TypeError(f"not an expression node: {e!r}")

    return go(expr)


def normal_form(P: Presentation, e) -> SkewElement:
    """Rewrite an expression tree (or element) into the standard-monomial normal form."""
    if isinstance(e, SkewElement):
        return e
    gens = P.gens()
    f = P.field

    def sym(name):
        if name not in gens:
            raise KeyError(f"unknown identifier {name!r}")
        return gens[name]

    def div(a, b):
        if not (set(b.raw) <= {P.zero_monomial()}) or not b.raw or not BaseElement(P.ring, b.raw[P.zero_monomial()]).is_scalar:
            raise ValueError("division only by nonzero scalars")
        return a.scale(f.inv(b.raw[P.zero_monomial()][P.ring.unit]))

    return evaluate(
        e,
        num=lambda q: P.scalar(q),
        sym=sym,
        add=lambda a, b: a + b,
        neg=lambda a: -a,
        mul=lambda a, b: a * b,
        div=div,
        pow_=lambda a, k: a**k,
    )


def add(a: SkewElement, b: SkewElement) -> SkewElement:
    if a.P is not b.P and a.P != b.P:
        raise RingMismatchError("mismatched presentations")
    ring = a.P.ring
    out = dict(a.raw)
    for alpha, poly in b.raw.items():
        if alpha in out:
            s = ring._add(out[alpha], poly)
            if s:
                out[alpha] = s
            else:
                del out[alpha]
        else:
            out[alpha] = poly
    return SkewElement(a.P, out)


def multiply(a: SkewElement, b: SkewElement) -> SkewElement:
    if a.P is not b.P and a.P != b.P:
        raise RingMismatchError("mismatched presentations")
    return SkewElement(a.P, a.P._mul_raw(a.raw, b.raw))


def filtration_degree(a: SkewElement) -> int:
    """-1 for zero, otherwise the largest total degree |alpha| among the terms."""
    if not a.raw:
        return -1
    return max(sum(alpha) for alpha in a.raw)


def top_part(a: SkewElement) -> dict:
    d = filtration_degree(a)
    return {alpha: p for alpha, p in a.raw.items() if sum(alpha) == d}


def principal_symbol(a: SkewElement, target: Presentation | None = None) -> SkewElement:
    """Top-degree part of a, read as an element of the associated quasi-commutative ring."""
    if not a.raw:
        raise ValueError("the zero element has no principal symbol")
    if target is None:
        from .gradings import associated_quasicommutative

        target = associated_quasicommutative(a.P)
    if target.n != a.P.n or target.ring != a.P.ring:
        raise RingMismatchError("symbol target has a different shape")
    return SkewElement(target, top_part(a))


# validation ----------------------------------------------------------------


@dataclass
class ValidationReport:
    ok: bool
    errors: list = field(default_factory=list)
    witness: dict | None = None
    sigma_injective: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    base: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "errors": list(self.errors),
            "witness": self.witness,
            "sigma_injective": list(self.sigma_injective),
            "warnings": list(self.warnings),
            "base": dict(self.base),
        }


def validate_presentation(P: Presentation, seed: int | None = 0, spot_checks: int = 25) -> ValidationReport:
    """Check the defining data and the overlap ambiguities of P.

    Overlaps checked: x_k x_j x_i for k > j > i, and x_j x_i y for every pair
    j > i and base generator y; each is reduced along both possible first
    rewrites.  A randomized associativity spot check on monomials of degree
    <= 4 follows.
    """
    rep = ValidationReport(ok=True)
    rep.base = validate_base_spec(P.ring.spec).to_dict()
    rep.warnings.extend(rep.base["warnings"])
    ring = P.ring
    names = P.xnames

    for (i, j), rel in P.relations.items():
        if not rel.c:
            rep.errors.append(f"constant c[{names[i]},{names[j]}] is zero")
    for i in range(P.n):
        try:
            P.sigma[i].check()
            P.delta[i].check(P.sigma[i])
        except MapError as exc:
            rep.errors.append(f"{names[i]}: {exc}")
        status = P.sigma[i].injectivity()
        rep.sigma_injective.append(status)
        if status == "no":
            rep.errors.append(f"sigma for {names[i]} is not injective")
        elif status == "unverified":
            rep.warnings.append(f"injectivity of sigma for {names[i]} unverified")
    if rep.errors:
        rep.ok = False
        return rep

    for i, j, k in combinations(range(P.n), 3):
        left = multiply(P.relation_element(j, k), P.x(i))
        right = multiply(P.x(k), P.relation_element(i, j))
        if left != right:
            rep.ok = False
            word = f"{names[k]}*{names[j]}*{names[i]}"
            rep.errors.append(f"overlap {word} does not resolve")
            rep.witness = {"overlap": word, "left": str(left), "right": str(right)}
            return rep
    for i, j in combinations(range(P.n), 2):
        for t in range(ring.m):
            yv = P.y(t)
            left = multiply(P.relation_element(i, j), yv)
            right = multiply(P.x(j), multiply(P.x(i), yv))
            if left != right:
                rep.ok = False
                word = f"{names[j]}*{names[i]}*{ring.names[t]}"
                rep.errors.append(f"overlap {word} does not resolve")
                rep.witness = {"overlap": word, "left": str(left), "right": str(right)}
                return rep

    if seed is not None and spot_checks:
        rng = random.Random(seed)
        for _ in range(spot_checks):
            a, b, c = (random_monomial_element(P, rng, 4) for _ in range(3))
            if multiply(multiply(a, b), c) != multiply(a, multiply(b, c)):
                rep.ok = False
                rep.errors.append("associativity spot check failed")
                rep.witness = {"overlap": f"({a})({b})({c})", "left": "", "right": ""}
                return rep
    return rep


def random_monomial_element(P: Presentation, rng: random.Random, max_degree: int) -> SkewElement:
    d = rng.randint(0, max_degree)
    alpha = [0] * P.n
    for _ in range(d):
        alpha[rng.randrange(P.n)] += 1
    e = [0] * P.ring.m
    for _ in range(rng.randint(0, 1) if P.ring.m else 0):
        e[rng.randrange(P.ring.m)] += 1
    coef = P.ring.element({tuple(e): rng.choice([1, -1, 2, 3])})
    return P.element({tuple(alpha): coef}) if coef else P.element({tuple(alpha): 1})


def random_element(P: Presentation, rng: random.Random, max_degree: int = 4, max_terms: int = 3, base_degree: int = 1) -> SkewElement:
    """Sparse random element with x-degree <= max_degree and small base coefficients."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        alpha = [0] * P.n
        for _ in range(d):
            alpha[rng.randrange(P.n)] += 1
        coef = {}
        for _ in range(rng.randint(1, 2)):
            e = [0] * P.ring.m
            if P.ring.m:
                for _ in range(rng.randint(0, base_degree)):
                    e[rng.randrange(P.ring.m)] += 1
            coef[tuple(e)] = rng.randint(-3, 3)
        terms.setdefault(tuple(alpha), {})
        for e, c in coef.items():
            terms[tuple(alpha)][e] = terms[tuple(alpha)].get(e, 0) + c
    return P.element({a: P.ring.element(c) for a, c in terms.items()})


def opposite(P: Presentation) -> Presentation:
    """Presentation of the opposite ring, for constant extensions with unit constants.

    In A^op the rule x_j x_i = c x_i x_j + d0 + sum dlin_k x_k becomes
    x_j * x_i = c^{-1} (x_i * x_j - d0 - sum dlin_k x_k).
    """
    from .errors import PreconditionError

    if not P.is_constant:
        raise PreconditionError("opposite presentation is only built for constant extensions")
    rels = {}
    for (i, j), rel in P.relations.items():
        if not P.ring.is_unit(rel.c):
            raise PreconditionError(f"c[{P.xnames[i]},{P.xnames[j]}] is not a unit")
        ci = P.ring.inverse(rel.c)
        rels[(i, j)] = Relation(ci, -(ci * rel.d0), tuple(-(ci * r) for r in rel.dlin))
    return Presentation(P.ring, P.xnames, relations=rels, xdegrees=P.xdegrees)
