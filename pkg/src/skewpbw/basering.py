"""Exact scalars and the commutative base ring R = K[y_1..y_m]/M.

M is a monomial ideal, so normal forms are obtained by dropping every
term divisible by an ideal generator.  Elements are sparse mappings from
exponent vectors to nonzero scalars.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .errors import BaseSpecError, MapError, RingMismatchError

Exponent = tuple  # tuple[int, ...]

MAX_EXPONENT = 2**31 - 1
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: the rationals or a prime field F_p.

    Rational scalars are ``Fraction`` instances, prime-field scalars are
    ``int`` residues in ``[0, p)``.
    """

    kind: str = "rationals"
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == "rationals":
            if self.modulus is not None:
                raise BaseSpecError("the rational field takes no modulus")
        elif self.kind == "prime-field":
            if not isinstance(self.modulus, int) or not _is_prime(self.modulus):
                raise BaseSpecError(f"modulus {self.modulus!r} is not a prime")
        else:
            raise BaseSpecError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls("rationals")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls("prime-field", p)

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime-field"

    @property
    def zero(self):
        return 0 if self.is_prime else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_prime else Fraction(1)

    def __call__(self, x):
        """Coerce an int, Fraction or numeric string into a canonical scalar."""
        q = Fraction(x)
        if not self.is_prime:
            return q
        p = self.modulus
        if q.denominator % p == 0:
            raise ZeroDivisionError(f"{x} has no image in F_{p}")
        return q.numerator * pow(q.denominator, -1, p) % p

    def norm(self, x):
        return x % self.modulus if self.is_prime else x

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.is_prime:
            return pow(a, -1, self.modulus)
        return 1 / a

    def div(self, a, b):
        return self.norm(a * self.inv(b))

    def format(self, a) -> str:
        return str(a)

    def __str__(self):
        return "rationals" if not self.is_prime else f"prime {self.modulus}"


def _divides(g: Exponent, e: Exponent) -> bool:
    return all(a <= b for a, b in zip(g, e))


def _wdeg(e: Exponent, weights) -> int:
    return sum(a * w for a, w in zip(e, weights))


@dataclass(frozen=True)
class BaseRingSpec:
    """Raw description of K[y_1..y_m]/M; see :func:`validate_base_spec`."""

    names: tuple = ()
    degrees: tuple | None = None
    ideal: tuple = ()
    field: FieldSpec = field(default_factory=FieldSpec)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        degs = tuple(self.degrees) if self.degrees is not None else (1,) * len(self.names)
        object.__setattr__(self, "degrees", degs)
        object.__setattr__(self, "ideal", tuple(tuple(int(a) for a in g) for g in self.ideal))

    @property
    def m(self) -> int:
        return len(self.names)


@dataclass(frozen=True)
class BaseSpecReport:
    spec: BaseRingSpec  # with a minimal ideal generating set
    finite_dimensional: bool
    local: bool
    radical: tuple  # names generating the radical, when local
    warnings: tuple = ()

    def to_dict(self) -> dict:
        return {
            "valid": True,
            "finite_dimensional": self.finite_dimensional,
            "local": self.local,
            "radical": list(self.radical),
            "warnings": list(self.warnings),
        }


def validate_base_spec(spec: BaseRingSpec) -> BaseSpecReport:
    """Check a base-ring spec and return a report with the ideal minimized.

    Raises BaseSpecError on hard errors; redundant ideal generators only
    produce a warning.
    """
    names, degs, m = spec.names, spec.degrees, spec.m
    for nm in names:
        if not isinstance(nm, str) or not _IDENT.match(nm):
            raise BaseSpecError(f"invalid variable name {nm!r}")
    if len(set(names)) != m:
        dup = sorted({nm for nm in names if names.count(nm) > 1})
        raise BaseSpecError(f"duplicate base variable names: {', '.join(dup)}")
    if len(degs) != m or any(not isinstance(d, int) or d < 1 for d in degs):
        raise BaseSpecError("base degrees must be m positive integers")
    gens = []
    for g in spec.ideal:
        if len(g) != m or any(a < 0 or a > MAX_EXPONENT for a in g):
            raise BaseSpecError(f"bad ideal generator {g}")
        if _wdeg(g, degs) < 2:
            raise BaseSpecError(f"ideal generator {g} has weighted degree < 2")
        gens.append(g)
    notes = []
    minimal = []
    for i, g in enumerate(gens):
        redundant = any(
            _divides(h, g) and (h != g or j < i) for j, h in enumerate(gens) if j != i
        )
        if redundant:
            notes.append(f"redundant ideal generator {g} removed")
        else:
            minimal.append(g)
    for note in notes:
        warnings.warn(note, stacklevel=2)
    minimal = tuple(sorted(minimal))
    pure = set()
    for g in minimal:
        support = [j for j, a in enumerate(g) if a]
        if len(support) == 1:
            pure.add(support[0])
    finite = len(pure) == m
    new_spec = BaseRingSpec(names, degs, minimal, spec.field)
    return BaseSpecReport(new_spec, finite, finite, tuple(names) if finite else (), tuple(notes))


class BaseRing:
    """Arithmetic in K[y_1..y_m]/M.

    The raw representation used internally is a plain ``dict`` from
    exponent tuples to nonzero scalars; :class:`BaseElement` wraps it.
    """

    def __init__(self, spec: BaseRingSpec):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            report = validate_base_spec(spec)
        self.report = report
        self.spec = report.spec
        self.field = spec.field
        self.names = spec.names
        self.degrees = spec.degrees
        self.m = spec.m
        self.ideal = report.spec.ideal
        self.unit = (0,) * self.m
        self._mono_cache: dict[int, list] = {}

    def __eq__(self, other):
        return isinstance(other, BaseRing) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"BaseRing({self.describe()})"

    def describe(self) -> str:
        if not self.m:
            return "K"
        base = f"K[{', '.join(self.names)}]"
        if self.ideal:
            base += "/(" + ", ".join(self.format_raw({g: self.field.one}) for g in self.ideal) + ")"
        return base

    @property
    def finite_dimensional(self) -> bool:
        return self.report.finite_dimensional

    # raw helpers -----------------------------------------------------

    def in_ideal(self, e: Exponent) -> bool:
        for g in self.ideal:
            if _divides(g, e):
                return True
        return False

    def _normalize(self, d: dict) -> dict:
        if self.field.is_prime:
            p = self.field.modulus
            return {k: v % p for k, v in d.items() if v % p}
        return {k: v for k, v in d.items() if v}

    def _addmul_into(self, acc: dict, a: dict, b: dict, scale=1):
        """acc += scale * a * b, without normalizing."""
        ideal = self.ideal
        for ea, ca in a.items():
            ca = ca * scale
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                if ideal and self.in_ideal(e):
                    continue
                acc[e] = acc.get(e, 0) + ca * cb

    def _mul(self, a: dict, b: dict) -> dict:
        if not a or not b:
            return {}
        if len(a) == 1 and self.unit in a:
            c = a[self.unit]
            return self._normalize({e: c * v for e, v in b.items()})
        if len(b) == 1 and self.unit in b:
            c = b[self.unit]
            return self._normalize({e: c * v for e, v in a.items()})
        acc: dict = {}
        self._addmul_into(acc, a, b)
        return self._normalize(acc)

    def _add(self, a: dict, b: dict, sb=1) -> dict:
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + sb * c
        return self._normalize(out)

    def _pow(self, a: dict, k: int) -> dict:
        out = {self.unit: self.field.one}
        for _ in range(k):
            out = self._mul(out, a)
        return out

    # constructors ------------------------------------------------------

    def element(self, terms: Mapping | None = None) -> BaseElement:
        """Build an element from a mapping exponent -> scalar-like, normalizing it."""
        d = {}
        for e, c in (terms or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != self.m or any(a < 0 for a in e):
                raise ValueError(f"bad exponent {e} for a ring with {self.m} variables")
            if any(a > MAX_EXPONENT for a in e):
                raise OverflowError(f"exponent {e} exceeds the machine-width bound")
            if self.in_ideal(e):
                continue
            d[e] = d.get(e, 0) + self.field(c)
        return BaseElement(self, self._normalize(d))

    def _wrap(self, raw: dict) -> BaseElement:
        return BaseElement(self, raw)

    def scalar(self, c) -> BaseElement:
        return self.element({self.unit: c})

    @property
    def zero(self) -> BaseElement:
        return BaseElement(self, {})

    @property
    def one(self) -> BaseElement:
        return self.scalar(1)

    def gen(self, j: int) -> BaseElement:
        e = [0] * self.m
        e[j] = 1
        return self.element({tuple(e): 1})

    def gens(self) -> list[BaseElement]:
        return [self.gen(j) for j in range(self.m)]

    def index(self, name: str) -> int:
        return self.names.index(name)

    # graded structure --------------------------------------------------

    def degree_of(self, e: Exponent, weights=None) -> int:
        return _wdeg(e, self.degrees if weights is None else weights)

    def monomials(self, d: int, weights=None) -> list:
        """Normal monomials of weighted degree exactly ``d`` (positive weights)."""
        weights = tuple(self.degrees if weights is None else weights)
        key = (d, weights)
        if key in self._mono_cache:
            return self._mono_cache[key]
        out = []

        def rec(j, rest, prefix):
            if j == self.m:
                if rest == 0:
                    e = tuple(prefix)
                    if not self.in_ideal(e):
                        out.append(e)
                return
            w = weights[j]
            for a in range(rest // w + 1):
                prefix.append(a)
                rec(j + 1, rest - a * w, prefix)
                prefix.pop()

        if d >= 0:
            rec(0, d, [])
        out.sort(reverse=True)
        self._mono_cache[key] = out
        return out

    def all_monomials(self) -> list:
        """Every normal monomial; only for finite-dimensional rings."""
        if not self.finite_dimensional:
            raise ValueError("ring is not finite-dimensional")
        out, d = [], 0
        top = sum(max((g[j] for g in self.ideal if g[j]), default=1) for j in range(self.m))
        while d <= top:
            out.extend(self.monomials(d, (1,) * self.m))
            d += 1
        return out

    def hilbert(self, d: int) -> int:
        return len(self.monomials(d))

    def is_unit(self, a: BaseElement) -> bool:
        """Units of K[y]/M are nonzero constants plus nilpotents."""
        if a.terms.get(self.unit, 0) == 0:
            return False
        for e in a.terms:
            if e == self.unit:
                continue
            support = {j for j, x in enumerate(e) if x}
            if not any({j for j, x in enumerate(g) if x} <= support for g in self.ideal):
                return False
        return True

    def inverse(self, a: BaseElement) -> BaseElement:
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{a} is not a unit")
        c0 = a.terms[self.unit]
        ic = self.field.inv(c0)
        nil = {e: -c * ic for e, c in a.terms.items() if e != self.unit}
        nil = self._normalize(nil)
        out = {self.unit: self.field.one}
        power = {self.unit: self.field.one}
        while True:
            power = self._mul(power, nil)
            if not power:
                break
            out = self._add(out, power)
        return BaseElement(self, self._normalize({e: c * ic for e, c in out.items()}))

    # printing ------------------------------------------------------------

    def format_monomial(self, e: Exponent, sep="*") -> str:
        parts = []
        for nm, a in zip(self.names, e):
            if a == 1:
                parts.append(nm)
            elif a > 1:
                parts.append(f"{nm}^{a}")
        return sep.join(parts)

    def format_raw(self, raw: dict) -> str:
        if not raw:
            return "0"
        keys = sorted(raw, key=lambda e: (sum(e), e), reverse=True)
        pieces = []
        for e in keys:
            c = raw[e]
            mono = self.format_monomial(e)
            neg = not self.field.is_prime and c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append((neg, body))
        s = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            s += (" - " if neg else " + ") + body
        return s


class BaseElement:
    """An element of R in normal form.  Treat as immutable."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: BaseRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    def _check(self, other) -> BaseElement:
        if isinstance(other, BaseElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError("elements of different base rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return BaseElement(self.ring, self.ring._add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return BaseElement(self.ring, self.ring._add(self.terms, other.terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return BaseElement(self.ring, self.ring._normalize({e: -c for e, c in self.terms.items()}))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return BaseElement(self.ring, self.ring._mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return BaseElement(self.ring, self.ring._pow(self.terms, k))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.scalar(other)
        if not isinstance(other, BaseElement):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return self.ring.format_raw(self.terms)

    def __repr__(self):
        return f"BaseElement({self})"

    @property
    def is_scalar(self) -> bool:
        return all(e == self.ring.unit for e in self.terms)

    @property
    def constant_term(self):
        return self.terms.get(self.ring.unit, self.ring.field.zero)

    def homogeneous_degree(self, weights=None):
        """Weighted degree if homogeneous, ``None`` otherwise (and for zero)."""
        degs = {self.ring.degree_of(e, weights) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous_of(self, d: int, weights=None) -> bool:
        return all(self.ring.degree_of(e, weights) == d for e in self.terms)


def base_mul(a: BaseElement, b: BaseElement) -> BaseElement:
    if a.ring != b.ring:
        raise RingMismatchError("mismatched base rings")
    return a * b


def _as_images(ring: BaseRing, images) -> tuple:
    images = tuple(ring.element(im) if isinstance(im, Mapping) else im for im in images)
    if len(images) != ring.m:
        raise ValueError(f"expected {ring.m} images, got {len(images)}")
    for im in images:
        if not isinstance(im, BaseElement) or im.ring != ring:
            raise RingMismatchError("image lives in a different ring")
    return images


class EndoMap:
    """A K-algebra endomorphism of R given by the images of the y_j."""

    def __init__(self, ring: BaseRing, images: Iterable | None = None):
        self.ring = ring
        self.images = _as_images(ring, ring.gens() if images is None else images)
        self._cache: dict = {}

    @classmethod
    def identity(cls, ring: BaseRing) -> EndoMap:
        return cls(ring)

    def __eq__(self, other):
        return isinstance(other, EndoMap) and self.ring == other.ring and self.images == other.images

    def __hash__(self):
        return id(self)

    @property
    def is_identity(self) -> bool:
        return all(im == g for im, g in zip(self.images, self.ring.gens()))

    def image_raw(self, e: Exponent) -> dict:
        hit = self._cache.get(e)
        if hit is not None:
            return hit
        r = self.ring
        if not any(e):
            out = {r.unit: r.field.one}
        else:
            j = next(i for i, a in enumerate(e) if a)
            rest = list(e)
            rest[j] -= 1
            out = r._mul(self.images[j].terms, self.image_raw(tuple(rest)))
        self._cache[e] = out
        return out

    def apply_raw(self, raw: dict) -> dict:
        if self.is_identity_fast():
            return raw
        acc: dict = {}
        for e, c in raw.items():
            for f, d in self.image_raw(e).items():
                acc[f] = acc.get(f, 0) + c * d
        return self.ring._normalize(acc)

    def is_identity_fast(self) -> bool:
        flag = self._cache.get("__id__")
        if flag is None:
            flag = self.is_identity
            self._cache["__id__"] = flag
        return flag

    def __call__(self, a: BaseElement) -> BaseElement:
        return apply_endo(self, a)

    def check(self):
        """Raise MapError unless every ideal generator maps to zero."""
        for g in self.ring.ideal:
            if self.image_raw(g):
                raise MapError(
                    f"endomorphism does not preserve the ideal: image of "
                    f"{self.ring.format_monomial(g)} is {self.ring.format_raw(self.image_raw(g))}"
                )

    def linear_matrix(self):
        """Coefficient matrix when every image is a homogeneous linear form."""
        m = self.ring.m
        rows = []
        for im in self.images:
            row = [self.ring.field.zero] * m
            for e, c in im.terms.items():
                if sum(e) != 1:
                    return None
                row[e.index(1)] = c
            rows.append(row)
        return rows

    def injectivity(self) -> str:
        """'yes', 'no' or 'unverified'.

        Linear images: decided by rank (an automorphism of K[y] preserving a
        monomial ideal induces a bijection on the quotient).  Otherwise the
        images of normal monomials of degree <= 3 are tested for
        independence, which can only ever refute injectivity.
        """
        from .linalg import rank

        if self.ring.m == 0 or self.is_identity:
            return "yes"
        f = self.ring.field
        mat = self.linear_matrix()
        if mat is not None:
            vecs = [{j: c for j, c in enumerate(row) if c} for row in mat]
            return "yes" if rank(vecs, f) == self.ring.m else "no"
        sample = []
        for d in range(4):
            sample.extend(self.ring.monomials(d, (1,) * self.ring.m))
        images = [self.image_raw(e) for e in sample]
        return "unverified" if rank(images, f) == len(sample) else "no"

    def __repr__(self):
        return "EndoMap(" + ", ".join(f"{n}->{im}" for n, im in zip(self.ring.names, self.images)) + ")"


class DerMap:
    """A sigma-derivation of R given by the images of the y_j."""

    def __init__(self, ring: BaseRing, images: Iterable | None = None):
        self.ring = ring
        self.images = _as_images(ring, [ring.zero] * ring.m if images is None else images)
        self._cache: dict = {}

    @classmethod
    def zero(cls, ring: BaseRing) -> DerMap:
        return cls(ring)

    def __eq__(self, other):
        return isinstance(other, DerMap) and self.ring == other.ring and self.images == other.images

    def __hash__(self):
        return id(self)

    @property
    def is_zero(self) -> bool:
        return not any(self.images)

    def image_raw(self, sigma: EndoMap, e: Exponent) -> dict:
        # delta(y_j * y^rest) = sigma(y_j) delta(y^rest) + delta(y_j) y^rest, j the first variable
        memo = self._cache.setdefault(sigma, {})
        hit = memo.get(e)
        if hit is not None:
            return hit
        r = self.ring
        if not any(e) or self.is_zero:
            out = {}
        else:
            j = next(i for i, a in enumerate(e) if a)
            rest = list(e)
            rest[j] -= 1
            rest = tuple(rest)
            acc: dict = {}
            r._addmul_into(acc, sigma.images[j].terms, self.image_raw(sigma, rest))
            if not r.in_ideal(rest):
                r._addmul_into(acc, self.images[j].terms, {rest: r.field.one})
            out = r._normalize(acc)
        memo[e] = out
        return out

    def apply_raw(self, sigma: EndoMap, raw: dict) -> dict:
        if self.is_zero:
            return {}
        acc: dict = {}
        for e, c in raw.items():
            for f, d in self.image_raw(sigma, e).items():
                acc[f] = acc.get(f, 0) + c * d
        return self.ring._normalize(acc)

    def check(self, sigma: EndoMap):
        """Raise MapError unless the sigma-Leibniz extension is well defined on R."""
        r = self.ring
        if self.is_zero:
            return
        s, d, y = sigma.images, self.images, r.gens()
        for j, k in combinations(range(r.m), 2):
            lhs = s[j] * d[k] + d[j] * y[k]
            rhs = s[k] * d[j] + d[k] * y[j]
            if lhs != rhs:
                raise MapError(
                    f"sigma-derivation is inconsistent on {r.names[j]}*{r.names[k]}: "
                    f"{lhs} != {rhs}"
                )
        for g in r.ideal:
            img = self.image_raw(sigma, g)
            if img:
                raise MapError(
                    f"sigma-derivation does not preserve the ideal: image of "
                    f"{r.format_monomial(g)} is {r.format_raw(img)}"
                )

    def __repr__(self):
        return "DerMap(" + ", ".join(f"{n}->{im}" for n, im in zip(self.ring.names, self.images)) + ")"


def apply_endo(sigma: EndoMap, a: BaseElement) -> BaseElement:
    if a.ring != sigma.ring:
        raise RingMismatchError("endomorphism and element over different rings")
    return BaseElement(a.ring, sigma.apply_raw(a.terms))


def apply_der(sigma: EndoMap, delta: DerMap, a: BaseElement) -> BaseElement:
    if a.ring != delta.ring or sigma.ring != delta.ring:
        raise RingMismatchError("derivation and element over different rings")
    return BaseElement(a.ring, delta.apply_raw(sigma, a.terms))
