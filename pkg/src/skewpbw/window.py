"""Finite snapshots of graded left A-modules.

A window stores, for every degree key (main, aux) inside the bounds, a list
of basis labels, and for every algebra generator (skew and base variables,
by name) the matrix of its action: ``actions[name][deg][k]`` is the image
of basis vector k of degree deg, as a sparse dict over the basis of degree
deg + shift(name).  Actions whose target lies outside the bounds are absent.
"""

from __future__ import annotations

from .classify import classify
from .errors import PreconditionError
from .gradings import GradingSpec, base_basis, component_basis, grading_valid
from .skewcore import Presentation


def _shift(deg, sh):
    return (deg[0] + sh[0], deg[1] + sh[1])


class GradedWindow:
    def __init__(self, P: Presentation, grading: GradingSpec, basis: dict, actions: dict, bounds, label=""):
        self.P = P
        self.grading = grading
        self.basis = basis
        self.actions = actions
        self.bounds = tuple(bounds)
        self.label = label

    @staticmethod
    def shifted(deg, shift):
        return _shift(deg, shift)

    def degrees(self) -> list:
        return sorted(self.basis)

    def dim(self, deg) -> int:
        return len(self.basis.get(tuple(deg), ()))

    def dims(self) -> dict:
        return {d: len(b) for d, b in sorted(self.basis.items())}

    def shift_of(self, name: str) -> tuple:
        P = self.P
        if name in P.xnames:
            return self.grading.xshift(P.xnames.index(name))
        return self.grading.yshift(P.ring.names.index(name))

    def act(self, name: str, deg, vec: dict) -> dict | None:
        """Image of a vector of degree deg under a generator; None if outside the window."""
        table = self.actions.get(name, {}).get(tuple(deg))
        if table is None:
            return None
        f = self.P.field
        out: dict = {}
        for k, c in vec.items():
            for t, v in table[k].items():
                out[t] = out.get(t, 0) + c * v
        return {t: f.norm(v) for t, v in out.items() if f.norm(v)}

    def act_word(self, word, deg, vec: dict) -> dict | None:
        """Apply the generators of word right to left (left module convention)."""
        for name in reversed(word):
            vec = self.act(name, deg, vec)
            if vec is None:
                return None
            deg = _shift(deg, self.shift_of(name))
            if not vec:
                return {}
        return vec

    def act_element(self, raw: dict, deg, vec: dict, target) -> dict | None:
        """Action of an A-element (raw normal form) landing in degree target."""
        P = self.P
        out: dict = {}
        for alpha, poly in raw.items():
            xword = [P.xnames[i] for i, a in enumerate(alpha) for _ in range(a)]
            for e, c in poly.items():
                yword = [P.ring.names[j] for j, a in enumerate(e) for _ in range(a)]
                word = yword + xword
                d = deg
                for nm in word:
                    d = _shift(d, self.shift_of(nm))
                if d != tuple(target):
                    continue
                img = self.act_word(word, deg, vec)
                if img is None:
                    return None
                for t, v in img.items():
                    out[t] = out.get(t, 0) + c * v
        f = self.P.field
        return {t: f.norm(v) for t, v in out.items() if f.norm(v)}

    def check_relations(self) -> list:
        """Verify the defining relations on every basis vector where both sides fit.

        Returns a list of failure descriptions (empty when consistent).
        """
        P = self.P
        ring = P.ring
        fails = []

        def both(lhs_word, rhs_raw, deg, k):
            vec = {k: P.field.one}
            lhs = self.act_word(lhs_word, deg, vec)
            if lhs is None:
                return
            target = deg
            for nm in lhs_word:
                target = _shift(target, self.shift_of(nm))
            rhs = self.act_element(rhs_raw, deg, vec, target)
            if rhs is None:
                return
            if lhs != rhs:
                fails.append(f"{'*'.join(lhs_word)} on basis {self.basis[deg][k]} in degree {deg}")

        for deg, basis in self.basis.items():
            for k in range(len(basis)):
                for i in range(P.n):
                    for j in range(ring.m):
                        rhs = (P.x(i) * P.y(j)).raw
                        both([P.xnames[i], ring.names[j]], rhs, deg, k)
                    for j in range(i + 1, P.n):
                        both([P.xnames[j], P.xnames[i]], P.relation_element(i, j).raw, deg, k)
        return fails

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "grading": self.grading.kind,
            "dims": [[a, b, len(v)] for (a, b), v in sorted(self.basis.items())],
        }


def _degrees_in(bounds, bigraded):
    top = bounds[0]
    aux = bounds[1] if bigraded and len(bounds) > 1 else 0
    return [(a, b) for a in range(top + 1) for b in range(aux + 1)]


def build_window(P: Presentation, g: GradingSpec, target: str = "A0", bounds=(4, 0)) -> GradedWindow:
    """Window of A_0 = A/J (target "A0") or of R = A/A_+ (target "R").

    J is the part of A of positive main degree.  For target "R" the extension
    must be R-augmented; R sits in x-degree 0 with the x's acting as zero.
    """
    if isinstance(bounds, int):
        bounds = (bounds, 0)
    ok, why = grading_valid(P, g)
    if not ok:
        raise PreconditionError(why)
    ring = P.ring
    degs = _degrees_in(bounds, g.bigraded)
    basis: dict = {}
    actions: dict = {nm: {} for nm in list(P.xnames) + list(ring.names)}

    if target == "R":
        if not classify(P).r_augmented:
            raise PreconditionError("R is an A-module quotient only for R-augmented extensions")
        for d in degs:
            basis[d] = list(base_basis(ring, g, d))
        index = {d: {e: k for k, e in enumerate(b)} for d, b in basis.items()}
        for d, b in basis.items():
            for j, nm in enumerate(ring.names):
                td = _shift(d, g.yshift(j))
                if td not in basis:
                    continue
                rows = []
                for e in b:
                    f = list(e)
                    f[j] += 1
                    f = tuple(f)
                    rows.append({} if ring.in_ideal(f) else {index[td][f]: P.field.one})
                actions[nm][d] = rows
            for i, nm in enumerate(P.xnames):
                if _shift(d, g.xshift(i)) in basis:
                    actions[nm][d] = [{} for _ in b]
        return GradedWindow(P, g, basis, actions, bounds, label="R")

    if target != "A0":
        raise ValueError(f"unknown target {target!r}")
    for d in degs:
        basis[d] = list(component_basis(P, g, d)) if d[0] == 0 else []
    index = {d: {lab: k for k, lab in enumerate(b)} for d, b in basis.items()}
    gens = [(nm, P.x(i), g.xshift(i)) for i, nm in enumerate(P.xnames)]
    gens += [(nm, P.y(j), g.yshift(j)) for j, nm in enumerate(ring.names)]
    for d, b in basis.items():
        for nm, el, sh in gens:
            td = _shift(d, sh)
            if td not in basis:
                continue
            rows = []
            for alpha, e in b:
                if td[0] != 0:
                    rows.append({})
                    continue
                prod = P._mul_raw(el.raw, {alpha: {e: P.field.one}})
                vec = {}
                for beta, poly in prod.items():
                    for f, c in poly.items():
                        vec[index[td][(beta, f)]] = c
                rows.append(vec)
            actions[nm][d] = rows
    return GradedWindow(P, g, basis, actions, bounds, label="A0")
