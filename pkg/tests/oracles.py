"""Reference computations written independently of the package internals.

Ranks go through sympy's DomainMatrix; products of monomials come from
closed formulas instead of rewriting.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix


def _domain(p):
    return QQ if p is None else GF(p)


def matrix_rank(columns: list[dict], keys: list, p=None) -> int:
    """Rank of the matrix whose columns are sparse dicts over keys."""
    if not columns or not keys:
        return 0
    dom = _domain(p)
    pos = {k: t for t, k in enumerate(keys)}
    rows = [[dom(0)] * len(columns) for _ in keys]
    for j, col in enumerate(columns):
        for k, v in col.items():
            v = Fraction(v)
            rows[pos[k]][j] = dom(v.numerator) / dom(v.denominator)
    return DomainMatrix(rows, (len(keys), len(columns)), dom).rank()


def monomials(n: int, d: int) -> list:
    if d < 0:
        return []
    if n == 0:
        return [()] if d == 0 else []
    return [(a,) + rest for a in range(d, -1, -1) for rest in monomials(n - 1, d - a)]


def commutative_koszul_betti(n: int, D: int, p=None) -> dict:
    """Betti data {step: {internal degree: count}} of K over K[x_1..x_n].

    Builds the exterior Koszul complex, verifies its exactness in every
    internal degree <= D, and reads off the generator degrees.
    """
    subsets = [list(combinations(range(n), i)) for i in range(n + 1)]

    def basis(i, d):
        return [(S, m) for S in subsets[i] for m in monomials(n, d - i)]

    def diff(i, d):
        cols = []
        for S, m in basis(i, d):
            col = {}
            for pos, s in enumerate(S):
                rest = S[:pos] + S[pos + 1 :]
                mm = list(m)
                mm[s] += 1
                key = (rest, tuple(mm))
                col[key] = col.get(key, 0) + (-1) ** pos
            cols.append(col)
        return cols

    for d in range(D + 1):
        ranks = [0] * (n + 2)
        for i in range(1, n + 1):
            ranks[i] = matrix_rank(diff(i, d), basis(i - 1, d), p)
        for i in range(n + 1):
            h = len(basis(i, d)) - ranks[i] - ranks[i + 1]
            if h != (1 if (i, d) == (0, 0) else 0):
                raise AssertionError(f"oracle complex not exact at step {i}, degree {d}")
    return {i: {i: comb(n, i)} for i in range(n + 1)}


def qplane_product(q, a: tuple, b: tuple) -> tuple:
    """(x1^a1 x2^a2)(x1^b1 x2^b2) = q^(a2 b1) x1^(a1+b1) x2^(a2+b2) when x2 x1 = q x1 x2."""
    return q ** (a[1] * b[0]), (a[0] + b[0], a[1] + b[1])


def qplane_koszul_betti(q: int, D: int, p=None) -> dict:
    """Betti data of K over the plane x2 x1 = q x1 x2 via the explicit complex

    0 -> A e12 -> A e1 + A e2 -> A -> K,  e12 -> x2 e1 - q x1 e2,  e_i -> x_i,
    checked exact in every degree <= D.
    """

    def mul(coef, a, b):
        s, m = qplane_product(q, a, b)
        return coef * s, m

    def basis(i, d):
        gens = [[()], [(1,), (2,)], [(12,)]][i]
        return [(g, m) for g in gens for m in monomials(2, d - i)]

    def diff(i, d):
        cols = []
        for g, m in basis(i, d):
            col = {}
            if i == 1:
                var = (1, 0) if g == (1,) else (0, 1)
                c, mm = mul(1, m, var)
                col[((), mm)] = c
            else:
                c, mm = mul(1, m, (0, 1))
                col[((1,), mm)] = col.get(((1,), mm), 0) + c
                c, mm = mul(-q, m, (1, 0))
                col[((2,), mm)] = col.get(((2,), mm), 0) + c
            cols.append(col)
        return cols

    for d in range(D + 1):
        r = [0, matrix_rank(diff(1, d), basis(0, d), p), matrix_rank(diff(2, d), basis(1, d), p), 0]
        for i in range(3):
            h = len(basis(i, d)) - r[i] - r[i + 1]
            if h != (1 if (i, d) == (0, 0) else 0):
                raise AssertionError(f"q-complex not exact at step {i}, degree {d}")
    return {0: {0: 1}, 1: {1: 2}, 2: {2: 1}}


def weyl_product(a: tuple, b: tuple) -> dict:
    """x1^a1 x2^a2 * x1^b1 x2^b2 in the Weyl algebra x2 x1 = x1 x2 + 1.

    Uses x2^s x1^t = sum_k C(s,k) t!/(t-k)! x1^(t-k) x2^(s-k).
    """
    out: dict = {}
    s, t = a[1], b[0]
    for k in range(min(s, t) + 1):
        c = comb(s, k) * factorial(t) // factorial(t - k)
        key = (a[0] + t - k, s - k + b[1])
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}
