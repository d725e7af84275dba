"""Minimal graded free resolutions by degreewise linear algebra, and
Koszulity certificates built on them.

A resolution of a module window M is computed one homological step at a
time.  At each step the current submodule N (M itself, then the kernels)
is known degree by degree as a list of vectors in an ambient space; its
minimal generators in degree d are a complement of m*N inside N(d), where
m is the ideal generated by all algebra generators.  Each generator becomes
a basis element of the next free module, whose map to the ambient space is
evaluated on a K-basis per degree and whose kernel is the next N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .basering import BaseRing, BaseRingSpec
from .classify import classify
from .errors import InconclusiveError, PreconditionError
from .gradings import (
    GradingSpec,
    augmentation,
    component_basis,
    grading_valid,
    radical_quotient,
    skew_monomials,
    standard,
)
from .linalg import complement, kernel, rank
from .skewcore import Presentation, SkewElement, opposite
from .window import GradedWindow, build_window

MODES = ("classical", "generalized", "r_augmented")


def _shift(deg, sh):
    return (deg[0] + sh[0], deg[1] + sh[1])


def _gens(P: Presentation, g: GradingSpec):
    out = [(nm, i, None, g.xshift(i)) for i, nm in enumerate(P.xnames)]
    out += [(nm, None, j, g.yshift(j)) for j, nm in enumerate(P.ring.names)]
    return out


def _unit(k, i):
    e = [0] * k
    e[i] = 1
    return tuple(e)


class _WindowSpace:
    """The module window itself as an ambient space; keys are basis indices."""

    def __init__(self, W: GradedWindow):
        self.W = W
        self.P = W.P

    def basis(self, d):
        return list(range(self.W.dim(d)))

    def act_mono(self, alpha, e, deg, vec):
        P = self.P
        word = [P.ring.names[j] for j, a in enumerate(e) for _ in range(a)]
        word += [P.xnames[i] for i, a in enumerate(alpha) for _ in range(a)]
        out = self.W.act_word(word, deg, vec)
        if out is None:
            raise InconclusiveError(f"action leaves the module window from degree {deg}")
        return out


class _FreeSpace:
    """Graded free module sum_s A(-deg_s); keys are (s, alpha, e) for y^e x^alpha e_s."""

    def __init__(self, P: Presentation, g: GradingSpec, degs):
        self.P = P
        self.g = g
        self.degs = list(degs)
        self._basis: dict = {}

    def basis(self, d):
        hit = self._basis.get(d)
        if hit is None:
            hit = []
            for s, ds in enumerate(self.degs):
                rel = (d[0] - ds[0], d[1] - ds[1])
                if rel[0] < 0 or rel[1] < 0:
                    continue
                hit.extend((s, alpha, e) for alpha, e in component_basis(self.P, self.g, rel))
            self._basis[d] = hit
        return hit

    def act_mono(self, alpha, e, deg, vec):
        P = self.P
        f = P.field
        left = {alpha: {e: f.one}}
        out: dict = {}
        for (t, beta, fe), c in vec.items():
            prod = P._mul_raw(left, {beta: {fe: f.one}})
            for gamma, poly in prod.items():
                for h, v in poly.items():
                    key = (t, gamma, h)
                    out[key] = out.get(key, 0) + c * v
        return {k: f.norm(v) for k, v in out.items() if f.norm(v)}

    def row(self, vec) -> dict:
        """A vector read as a row of SkewElements, one per generator."""
        P = self.P
        rows: dict = {}
        for (t, beta, e), c in vec.items():
            rows.setdefault(t, {}).setdefault(beta, {})[e] = c
        return {t: SkewElement(P, raw) for t, raw in sorted(rows.items())}


@dataclass
class ResolutionStep:
    i: int
    gen_degrees: list  # internal degree (main, aux) of each generator
    differential: list  # per generator: {t: SkewElement} (step >= 1) or a window vector (step 0)
    dims: dict = field(default_factory=dict)  # degree -> dim of the free module

    @property
    def generators(self) -> list:
        counts: dict = {}
        for d in self.gen_degrees:
            counts[d] = counts.get(d, 0) + 1
        return sorted(counts.items())

    @property
    def rank(self) -> int:
        return len(self.gen_degrees)

    def to_dict(self, bigraded=False) -> dict:
        gens = [
            {"degree": list(d) if bigraded else d[0], "count": c} for d, c in self.generators
        ]
        return {"i": self.i, "generators": gens}


@dataclass
class Resolution:
    window: GradedWindow
    steps: list
    kernel_dims: dict  # degree -> dim of the last computed kernel
    complete: bool  # kernel vanished inside the window
    degrees: list

    def betti(self) -> list:
        return [s.rank for s in self.steps]


def _relation_degree(P: Presentation, g: GradingSpec) -> int:
    xw = [w[0] for w in g.xweights]
    if P.n == 1:
        return 2 * xw[0]
    return max(xw[i] + xw[j] for i, j in combinations(range(P.n), 2))


def _minimal_generators(P, g, space, N, degs):
    gens = []
    shifts = _gens(P, g)
    for d in degs:
        here = N.get(d)
        if not here:
            continue
        span = []
        for nm, i, j, sh in shifts:
            src = (d[0] - sh[0], d[1] - sh[1])
            if src not in N:
                continue
            alpha = _unit(P.n, i) if i is not None else (0,) * P.n
            e = _unit(P.ring.m, j) if j is not None else (0,) * P.ring.m
            for v in N[src]:
                img = space.act_mono(alpha, e, src, v)
                if img:
                    span.append(img)
        for k in complement(span, here, P.field):
            gens.append((d, here[k]))
    return gens


def minimal_resolution(P: Presentation, W: GradedWindow, H: int, D: int | None = None, strict: bool = True) -> Resolution:
    """Minimal graded free resolution of the window W through step H.

    Only degrees with main part <= D (and aux inside the window) are
    computed.  With strict=True, D < H + (relation degree) raises
    InconclusiveError instead of returning a truncated answer.
    """
    g = W.grading
    if D is None:
        D = W.bounds[0]
    if D > W.bounds[0]:
        raise InconclusiveError(f"window only reaches degree {W.bounds[0]}, {D} requested")
    if strict and D < H + _relation_degree(P, g):
        raise InconclusiveError(
            f"inconclusive at degree {D}: bounds must reach at least H + {_relation_degree(P, g)}"
        )
    f = P.field
    degs = sorted(d for d in W.basis if d[0] <= D)
    space = _WindowSpace(W)
    N = {d: [{k: f.one} for k in range(W.dim(d))] for d in degs}
    steps = []
    complete = False
    for i in range(H + 1):
        gens = _minimal_generators(P, g, space, N, degs)
        free = _FreeSpace(P, g, [d for d, _ in gens])
        images = [v for _, v in gens]
        newN, dims = {}, {}
        for d in degs:
            basis = free.basis(d)
            dims[d] = len(basis)
            imgs = []
            for s, alpha, e in basis:
                imgs.append(space.act_mono(alpha, e, gens[s][0], images[s]))
            ker = kernel(imgs, f)
            newN[d] = [{basis[k]: c for k, c in v.items()} for v in ker]
        if i == 0:
            diff = images
        else:
            diff = [space.row(v) for v in images]
        steps.append(ResolutionStep(i, [d for d, _ in gens], diff, dims))
        space, N = free, newN
        if not any(N.values()):
            complete = True
            break
    kdims = {d: len(v) for d, v in N.items()}
    return Resolution(W, steps, kdims, complete, degs)


# checks on resolutions -----------------------------------------------------------


def composition_failures(res: Resolution) -> list:
    """d o d = 0 across consecutive steps, recomputed by ring multiplication."""
    fails = []
    steps = res.steps
    W = res.window
    P = W.P
    if len(steps) > 1:
        eps = steps[0].differential
        degs0 = steps[0].gen_degrees
        for s, row in enumerate(steps[1].differential):
            target = steps[1].gen_degrees[s]
            acc: dict = {}
            for t, a in row.items():
                img = W.act_element(a.raw, degs0[t], eps[t], target)
                if img is None:
                    continue
                for k, v in img.items():
                    acc[k] = acc.get(k, 0) + v
            if any(P.field.norm(v) for v in acc.values()):
                fails.append((1, s))
    for i in range(2, len(steps)):
        upper, lower = steps[i].differential, steps[i - 1].differential
        for s, row in enumerate(upper):
            acc: dict = {}
            for t, a in row.items():
                for u, b in lower[t].items():
                    acc[u] = acc.get(u, P.zero) + a * b
            if any(acc.values()):
                fails.append((i, s))
    return fails


def minimality_failures(res: Resolution) -> list:
    """Differential entries with a unit constant part (not inside m*F)."""
    fails = []
    for step in res.steps[1:]:
        for s, row in enumerate(step.differential):
            for t, a in row.items():
                c0 = a.constant_term()
                if c0.constant_term:
                    fails.append((step.i, s, t))
    return fails


def euler_failures(res: Resolution) -> list:
    """Alternating sum of free-module dimensions against dim M, degree by degree."""
    fails = []
    W = res.window
    last = len(res.steps) - 1
    for d in res.degrees:
        total = sum((-1) ** s.i * s.dims.get(d, 0) for s in res.steps)
        total += (-1) ** (last + 1) * res.kernel_dims.get(d, 0)
        if total != W.dim(d):
            fails.append(d)
    return fails


# certificates ------------------------------------------------------------------


@dataclass
class KoszulCertificate:
    mode: str
    bounds: tuple
    steps: list
    verdict: str  # certified-to-bounds | refuted
    witness: dict | None = None
    notes: list = field(default_factory=list)
    bigraded: bool = False
    resolution: Resolution | None = None

    @property
    def certified(self) -> bool:
        return self.verdict == "certified-to-bounds"

    def betti(self) -> list:
        return [sum(c for _, c in s.generators) for s in self.steps]

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "bounds": list(self.bounds),
            "steps": [s.to_dict(self.bigraded) for s in self.steps],
            "verdict": self.verdict,
            "witness": self.witness,
            "notes": list(self.notes),
        }


def _setup(P: Presentation, mode: str):
    cl = classify(P)
    notes = []
    if mode == "classical":
        g, target = standard(P), "A0"
    elif mode == "generalized":
        if P.ring.m and not P.ring.report.local:
            raise PreconditionError("generalized mode needs a finite-dimensional local base ring")
        g, target = augmentation(P), "A0"
    elif mode == "r_augmented":
        if not cl.r_augmented:
            raise PreconditionError("r_augmented mode needs a pre-commutative constant extension")
        g, target = augmentation(P), "R"
        if not P.ring.finite_dimensional:
            notes.append(
                "generator bimodule is finitely generated over R but not finite-dimensional over K; "
                "base degrees are tracked as a second grading"
            )
    else:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    ok, why = grading_valid(P, g)
    if not ok:
        raise PreconditionError(f"no valid {g.kind} grading: {why}")
    return g, target, notes


def koszul_certificate(
    P: Presentation,
    mode: str = "classical",
    H: int = 4,
    D: int | None = None,
    J: int | None = None,
    side: str = "left",
) -> KoszulCertificate:
    """Resolve the mode's degree-zero module and check step i is generated in degree i.

    side="right" works with the opposite presentation (constant extensions).
    """
    if side == "right":
        P = opposite(P)
    elif side != "left":
        raise ValueError("side is 'left' or 'right'")
    if D is None:
        D = H + 4
    g, target, notes = _setup(P, mode)
    rd = _relation_degree(P, g)
    if D < H + rd:
        raise InconclusiveError(f"inconclusive at degree {D}: need D >= H + {rd}")
    J = D if J is None else J
    W = build_window(P, g, target, (D, J))
    res = minimal_resolution(P, W, H, D)
    witness = None
    for step in res.steps:
        for d in step.gen_degrees:
            if d[0] != step.i:
                witness = {"step": step.i, "degree": d[0], "expected": step.i}
                if g.bigraded:
                    witness["bidegree"] = list(d)
                break
        if witness:
            break
    bounds = (H, D, J) if g.bigraded else (H, D)
    if not res.complete:
        notes.append(f"resolution continues past step {H}")
    return KoszulCertificate(
        mode,
        bounds,
        res.steps,
        "refuted" if witness else "certified-to-bounds",
        witness,
        notes,
        g.bigraded,
        res,
    )


# the base ring's own resolution ------------------------------------------------------


@dataclass
class BaseResolution:
    ring: BaseRing
    ranks: list
    differentials: list  # differentials[i] maps step i+1 to step i: rows {t: BaseElement}
    kind: str
    exact_to: int = -1  # base degree through which exactness was verified

    def to_dict(self) -> dict:
        return {"kind": self.kind, "ranks": list(self.ranks), "exact_to": self.exact_to}


def base_koszul_resolution(spec: BaseRingSpec, length: int = 4, check_degree: int = 6) -> BaseResolution:
    """Linear resolution of K over R for R = K[y_1..y_m] or K[y]/(y^2)."""
    ring = BaseRing(spec)
    m = ring.m
    if any(d != 1 for d in ring.degrees):
        raise PreconditionError("base resolutions are built for degree-one generators only")
    if not ring.ideal:
        subsets = [list(combinations(range(m), i)) for i in range(m + 1)]
        ranks = [len(s) for s in subsets]
        diffs = []
        for i in range(1, m + 1):
            index = {S: k for k, S in enumerate(subsets[i - 1])}
            rows = []
            for S in subsets[i]:
                row = {}
                for pos, j in enumerate(S):
                    rest = S[:pos] + S[pos + 1 :]
                    row[index[rest]] = ring.gen(j) * (-1) ** pos
                rows.append(row)
            diffs.append(rows)
        kind = "koszul-complex"
    elif m == 1 and ring.ideal == ((2,),):
        ranks = [1] * (length + 1)
        diffs = [[{0: ring.gen(0)}] for _ in range(length)]
        kind = "periodic"
    else:
        raise PreconditionError(f"no built-in linear resolution for {ring.describe()}")
    res = BaseResolution(ring, ranks, diffs, kind)
    _verify_base_exactness(res, check_degree)
    return res


def _base_matrix(ring, rows, src_rank, src_shift, d, tgt_shift):
    """Matrix of a differential in base degree d: basis (s, e) with |e| = d - shift."""
    w = (1,) * ring.m
    src = [(s, e) for s in range(src_rank) for e in ring.monomials(d - src_shift, w)] if d >= src_shift else []
    imgs = []
    for s, e in src:
        v = {}
        for t, r in rows[s].items():
            for f, c in ring._mul(r.terms, {e: ring.field.one}).items():
                v[(t, f)] = v.get((t, f), 0) + c
        imgs.append({k: c for k, c in v.items() if ring.field.norm(c)})
    return src, imgs


def _verify_base_exactness(res: BaseResolution, top: int):
    ring = res.ring
    f = ring.field
    w = (1,) * ring.m
    L = len(res.differentials)
    for d in range(top + 1):
        # r[i] = rank of d_i : P^i -> P^{i-1} in base degree d; r[L+1] = 0
        r = [0] * (L + 2)
        for i in range(1, L + 1):
            _, imgs = _base_matrix(ring, res.differentials[i - 1], res.ranks[i], i, d, i - 1)
            r[i] = rank(imgs, f)
        for i in range(L + 1):
            if i == L and res.kind == "periodic":
                continue  # the map out of the last kept step is not part of the data
            dim = res.ranks[i] * len(ring.monomials(d - i, w)) if d >= i else 0
            homology = dim - r[i] - r[i + 1]
            expected = 1 if (i == 0 and d == 0) else 0
            if homology != expected:
                raise PreconditionError(f"base resolution fails exactness at step {i}, degree {d}")
    res.exact_to = top


# the tensored complex P^i (x)_R A -----------------------------------------------------


@dataclass
class TensorReport:
    verified: bool
    ranks: list
    components: int
    failures: list = field(default_factory=list)
    steps: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "verified": self.verified,
            "ranks": list(self.ranks),
            "components_checked": self.components,
            "failures": list(self.failures),
            "steps": list(self.steps),
        }


def tensor_resolution_check(P: Presentation, H: int, bounds=(4, 3)) -> TensorReport:
    """Tensor the base resolution of K with A over R and audit it bidegree by bidegree.

    Components are indexed by (base degree j, x-degree k) with j <= J and
    k <= X.  Checked: exactness at steps 1..H, degree-zero homology equal to
    K (x)_R A, and generation of step i by its base-degree-i part.
    """
    if not classify(P).constant:
        raise PreconditionError("the tensored-resolution check needs a constant extension")
    J, X = bounds
    base = base_koszul_resolution(P.ring.spec, length=H + 1, check_degree=J)
    ring = P.ring
    f = P.field
    w1 = (1,) * ring.m
    xg = GradingSpec("x-degree", tuple((d, 0) for d in P.xdegrees), tuple((0, 0) for _ in range(ring.m)))
    top = min(H, len(base.ranks) - 1)
    gen_grading = GradingSpec("bi", xg.xweights, tuple((0, 1) for _ in range(ring.m)))

    def chain_basis(i, j, k):
        if i >= len(base.ranks) or j < i:
            return []
        return [
            (s, alpha, e)
            for s in range(base.ranks[i])
            for alpha in _alphas(P, xg, k)
            for e in ring.monomials(j - i, w1)
        ]

    def diff_images(i, j, k):
        # d_i (x) 1 on P^i (x) A: e_s (x) a  ->  sum_t e_t (x) r_st a
        rows = base.differentials[i - 1]
        imgs = []
        for s, alpha, e in chain_basis(i, j, k):
            a = P.element({alpha: ring.element({e: 1})})
            v = {}
            for t, r in rows[s].items():
                prod = P.base(r) * a
                for beta, poly in prod.raw.items():
                    for h, c in poly.items():
                        v[(t, beta, h)] = v.get((t, beta, h), 0) + c
            imgs.append({key: c for key, c in v.items() if f.norm(c)})
        return imgs

    failures = []
    comps = 0
    step_info = [{"i": i, "rank": base.ranks[i], "generated_in_base_degree": i, "exact": True} for i in range(top + 1)]
    for j in range(J + 1):
        for k in range(X + 1):
            comps += 1
            # a missing differential (end of a finite resolution) has rank 0
            rk = {
                i: rank(diff_images(i, j, k), f)
                for i in range(1, min(top + 1, len(base.differentials)) + 1)
            }
            for i in range(top + 1):
                dim = len(chain_basis(i, j, k))
                in_rank = rk.get(i + 1, 0)
                if i == 0:
                    h0 = dim - in_rank
                    want = len(_alphas(P, xg, k)) if j == 0 else 0
                    if h0 != want:
                        failures.append(f"degree-zero homology {h0} != {want} at (j={j}, k={k})")
                        step_info[0]["exact"] = False
                    continue
                if dim - rk[i] - in_rank != 0:
                    failures.append(f"homology at step {i}, component (j={j}, k={k})")
                    step_info[i]["exact"] = False
            # generation: e_s (x) 1 times A spans every component of step i
            for i in range(top + 1):
                basis = chain_basis(i, j, k)
                if not basis:
                    continue
                span = []
                for s in range(base.ranks[i]):
                    for alpha, e in component_basis(P, gen_grading, (k, j - i)):
                        b = P.element({alpha: ring.element({e: 1})})
                        prod = P.one * b  # (e_s (x) 1) . b = e_s (x) b
                        span.append({(s, beta, h): c for beta, poly in prod.raw.items() for h, c in poly.items()})
                if rank(span, f) != len(basis):
                    failures.append(f"step {i} not generated in base degree {i} at (j={j}, k={k})")
                    step_info[i]["generated_in_base_degree"] = None
    return TensorReport(not failures, base.ranks[: top + 1], comps, failures, step_info)


def _alphas(P, g, k):
    return skew_monomials(P, k)


# the radical quotient comparison -----------------------------------------------------


@dataclass
class AbarReport:
    generalized: KoszulCertificate
    quotient: KoszulCertificate
    agree: bool

    def to_dict(self) -> dict:
        return {
            "generalized": self.generalized.to_dict(),
            "quotient_classical": self.quotient.to_dict(),
            "agree": self.agree,
        }


def abar_equivalence_check(P: Presentation, H: int = 4, D: int | None = None) -> AbarReport:
    cl = classify(P)
    if not cl.quasi_commutative or cl.bijective != "yes":
        raise PreconditionError("needs a quasi-commutative bijective extension")
    if P.ring.m and not P.ring.report.local:
        raise PreconditionError("needs a finite-dimensional local base ring")
    gen = koszul_certificate(P, "generalized", H, D)
    cla = koszul_certificate(radical_quotient(P), "classical", H, D)
    return AbarReport(gen, cla, gen.verdict == cla.verdict)
