"""Exact sparse linear algebra over Q and F_p.

Vectors are dicts ``key -> scalar`` with totally ordered keys.  Over Q the
elimination is fraction-free: rows are scaled to primitive integer vectors
and combined by cross-multiplication, so no rational arithmetic happens
inside the elimination loop.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .basering import FieldSpec


def _to_int_row(v: dict) -> dict:
    den = 1
    for c in v.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    return {k: int(c * den) for k, c in v.items() if c}


def _primitive(row: dict, tag: dict | None = None):
    g = 0
    for c in row.values():
        g = gcd(g, c)
    if tag:
        for c in tag.values():
            g = gcd(g, c)
    if g > 1:
        row = {k: c // g for k, c in row.items()}
        if tag is not None:
            tag = {k: c // g for k, c in tag.items()}
    return row, tag


class Echelon:
    """Incrementally built semi-echelon basis of a subspace.

    Every stored row has a distinct pivot, which is also its smallest key.
    Rows may carry a *tag* (a second sparse vector transformed alongside),
    which is how kernels are extracted.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.rows: dict = {}  # pivot -> (row, tag)

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _prepare(self, v: dict, tag: dict | None):
        if self.field.is_prime:
            p = self.field.modulus
            v = {k: c % p for k, c in v.items() if c % p}
            if tag is not None:
                tag = {k: c % p for k, c in tag.items() if c % p}
            return v, tag
        if tag is None:
            return _to_int_row(v), None
        den = 1
        for c in list(v.values()) + list(tag.values()):
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        return (
            {k: int(c * den) for k, c in v.items() if c},
            {k: int(c * den) for k, c in tag.items() if c},
        )

    def _reduce(self, v: dict, tag: dict | None):
        rows = self.rows
        if self.field.is_prime:
            p = self.field.modulus
            while True:
                piv = min((k for k in v if k in rows), default=None)
                if piv is None:
                    return v, tag
                row, rtag = rows[piv]
                f = v[piv]
                for k, c in row.items():
                    nc = (v.get(k, 0) - f * c) % p
                    if nc:
                        v[k] = nc
                    else:
                        v.pop(k, None)
                if tag is not None:
                    for k, c in rtag.items():
                        nc = (tag.get(k, 0) - f * c) % p
                        if nc:
                            tag[k] = nc
                        else:
                            tag.pop(k, None)
        while True:
            piv = min((k for k in v if k in rows), default=None)
            if piv is None:
                return v, tag
            row, rtag = rows[piv]
            a, b = row[piv], v[piv]
            g = gcd(a, b)
            a, b = a // g, b // g
            nv = {k: a * c for k, c in v.items()}
            for k, c in row.items():
                nc = nv.get(k, 0) - b * c
                if nc:
                    nv[k] = nc
                else:
                    nv.pop(k, None)
            if tag is not None:
                nt = {k: a * c for k, c in tag.items()}
                for k, c in rtag.items():
                    nc = nt.get(k, 0) - b * c
                    if nc:
                        nt[k] = nc
                    else:
                        nt.pop(k, None)
                tag = nt
            v, tag = _primitive(nv, tag)

    def reduce(self, v: dict) -> dict:
        """Remainder of v modulo the span (up to a nonzero scalar over Q)."""
        w, _ = self._reduce(*self._prepare(v, None))
        return w

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def add(self, v: dict, tag: dict | None = None):
        """Insert v; return None if it was independent, else the reduced tag."""
        w, t = self._reduce(*self._prepare(v, tag if tag is not None else None))
        if not w:
            return t if t is not None else {}
        piv = min(w)
        if self.field.is_prime:
            p = self.field.modulus
            inv = pow(w[piv], -1, p)
            w = {k: c * inv % p for k, c in w.items()}
            if t is not None:
                t = {k: c * inv % p for k, c in t.items()}
        else:
            w, t = _primitive(w, t)
            if w[piv] < 0:
                w = {k: -c for k, c in w.items()}
                if t is not None:
                    t = {k: -c for k, c in t.items()}
        self.rows[piv] = (w, t)
        return None

    def rref(self) -> list[dict]:
        """Reduced row-echelon basis (pivot entries 1), ordered by pivot."""
        f = self.field
        pivots = sorted(self.rows)
        rows = {p: {k: f(c) if not f.is_prime else c for k, c in self.rows[p][0].items()} for p in pivots}
        for p in pivots:
            inv = f.inv(rows[p][p])
            rows[p] = {k: f.norm(c * inv) for k, c in rows[p].items()}
        for p in reversed(pivots):
            rp = rows[p]
            for q in pivots:
                if q >= p:
                    break
                rq = rows[q]
                c = rq.get(p)
                if c:
                    for k, v in rp.items():
                        nc = f.norm(rq.get(k, 0) - c * v)
                        if nc:
                            rq[k] = nc
                        else:
                            rq.pop(k, None)
        return [rows[p] for p in pivots]


def rank(vectors, field: FieldSpec) -> int:
    ech = Echelon(field)
    for v in vectors:
        ech.add(v)
    return ech.rank


def kernel(images: list[dict], field: FieldSpec) -> list[dict]:
    """Basis of {c : sum_i c_i images[i] = 0}, as dicts index -> scalar, in RREF.

    Kernel vectors are returned in reduced row-echelon form with respect to
    the index order, so the output is canonical.
    """
    ech = Echelon(field)
    raw = []
    for i, v in enumerate(images):
        t = ech.add(v, {i: field.one})
        if t is not None:
            raw.append(t)
    if not raw:
        return []
    kech = Echelon(field)
    for t in raw:
        kech.add({k: field(c) if not field.is_prime else c for k, c in t.items()})
    return kech.rref()


def rref(vectors, field: FieldSpec) -> list[dict]:
    ech = Echelon(field)
    for v in vectors:
        ech.add(v)
    return ech.rref()


def same_row_space(a, b, field: FieldSpec) -> bool:
    ra = rank(a, field)
    rb = rank(b, field)
    return ra == rb == rank(list(a) + list(b), field)


def complement(span_vectors, candidates, field: FieldSpec) -> list[int]:
    """Indices of candidates that extend span(span_vectors) independently, greedily."""
    ech = Echelon(field)
    for v in span_vectors:
        ech.add(v)
    chosen = []
    for i, v in enumerate(candidates):
        if ech.add(v) is None:
            chosen.append(i)
    return chosen
