"""Reading and writing presentation files.

Format (line oriented, ``#`` starts a comment)::

    [field]
    rationals                 # or: prime 7
    [base]
    vars: y:1, z:2            # name[:degree]; omit the section for R = K
    ideal: y^2, y*z
    [vars]
    x1, x2:2                  # skew variables, optional degrees
    [sigma]
    x1: y -> 2*y              # omitted images are the identity
    [delta]
    x1: y -> 1                # omitted images are zero
    [relations]
    x2*x1 = 2*x1*x2 + y*x1    # omitted pairs commute

Right-hand sides of relations are sums of (base coefficient) * monomial
with monomials x_i*x_j (the same pair, ascending), a single x_k, or 1.
Expressions are parsed with :mod:`ast`, so ``^`` and ``**`` both denote
powers and products keep their order.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction
from pathlib import Path

from .basering import BaseElement, BaseRing, BaseRingSpec, FieldSpec
from .errors import BaseSpecError, ParseError
from .skewcore import Add, Div, Mul, Neg, Num, Pow, Presentation, Relation, Sym, normal_form

SECTIONS = ("field", "base", "vars", "sigma", "delta", "relations")
_NAME_DEG = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?::(\d+))?$")


def parse_expr(text: str):
    """Parse an expression into a RawExpr tree (order of products preserved)."""
    src = text.strip().replace("^", "**")
    if not src:
        raise ParseError("empty expression")
    try:
        tree = ast.parse(src, mode="eval").body
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    return _convert(tree, text)


def _convert(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Num(Fraction(node.value))
    if isinstance(node, ast.Name):
        return Sym(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        arg = _convert(node.operand, text)
        return Neg(arg) if isinstance(node.op, ast.USub) else arg
    if isinstance(node, ast.BinOp):
        left, right = _convert(node.left, text), _convert(node.right, text)
        if isinstance(node.op, ast.Add):
            return Add((left, right))
        if isinstance(node.op, ast.Sub):
            return Add((left, Neg(right)))
        if isinstance(node.op, ast.Mult):
            return Mul((left, right))
        if isinstance(node.op, ast.Div):
            return Div(left, right)
        if isinstance(node.op, ast.Pow):
            if not isinstance(right, Num) or right.value.denominator != 1 or right.value < 0:
                raise ParseError(f"exponents must be nonnegative integers in {text!r}")
            return Pow(left, int(right.value))
    raise ParseError(f"unsupported syntax in {text!r}")


def eval_base(ring: BaseRing, text: str) -> BaseElement:
    """Evaluate an expression in the (commutative) base ring."""
    tree = parse_expr(text)
    gens = {nm: ring.gen(j) for j, nm in enumerate(ring.names)}

    def go(e):
        if isinstance(e, Num):
            return ring.scalar(e.value)
        if isinstance(e, Sym):
            if e.name not in gens:
                raise ParseError(f"unknown base identifier {e.name!r}")
            return gens[e.name]
        if isinstance(e, Add):
            return go(e.terms[0]) + go(e.terms[1])
        if isinstance(e, Neg):
            return -go(e.arg)
        if isinstance(e, Mul):
            return go(e.factors[0]) * go(e.factors[1])
        if isinstance(e, Div):
            den = go(e.den)
            if not den or not den.is_scalar:
                raise ParseError(f"division only by nonzero scalars in {text!r}")
            return go(e.num) * ring.scalar(ring.field.inv(den.constant_term))
        if isinstance(e, Pow):
            return go(e.base) ** e.exp
        raise ParseError(f"bad expression {text!r}")

    return go(tree)


def eval_element(P: Presentation, text: str):
    try:
        return normal_form(P, parse_expr(text))
    except KeyError as exc:
        raise ParseError(f"unknown identifier {exc.args[0]!r}") from None
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _split_sections(text: str) -> dict:
    sections: dict = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"\[([a-z]+)\]", line)
        if m:
            name = m.group(1)
            if name not in SECTIONS:
                raise ParseError(f"line {lineno}: unknown section [{name}]")
            if name in sections:
                raise ParseError(f"line {lineno}: section [{name}] repeated")
            current = name
            sections[name] = []
            continue
        if current is None:
            raise ParseError(f"line {lineno}: content before the first section")
        sections[current].append((lineno, line))
    return sections


def _names_degrees(lineno, text):
    names, degs = [], []
    for item in filter(None, (t.strip() for t in re.split(r"[,\s]+", text))):
        m = _NAME_DEG.match(item)
        if not m:
            raise ParseError(f"line {lineno}: bad variable declaration {item!r}")
        names.append(m.group(1))
        degs.append(int(m.group(2) or 1))
    return names, degs


def _parse_field(lines) -> FieldSpec:
    if len(lines) != 1:
        raise ParseError("[field] takes exactly one line")
    lineno, line = lines[0]
    words = line.split()
    try:
        if words == ["rationals"]:
            return FieldSpec.rationals()
        if len(words) == 2 and words[0] == "prime" and words[1].isdigit():
            return FieldSpec.prime(int(words[1]))
    except BaseSpecError as exc:
        raise ParseError(f"line {lineno}: {exc}") from None
    raise ParseError(f"line {lineno}: expected 'rationals' or 'prime <p>'")


def _key_value(lineno, line):
    if ":" not in line:
        raise ParseError(f"line {lineno}: expected 'key: value'")
    key, value = line.split(":", 1)
    return key.strip(), value.strip()


def _monomial_exponent(lineno, names, text):
    exp = [0] * len(names)
    for factor in text.split("*"):
        factor = factor.strip()
        m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?", factor)
        if not m or m.group(1) not in names:
            raise ParseError(f"line {lineno}: bad ideal monomial {text!r}")
        exp[names.index(m.group(1))] += int(m.group(2) or 1)
    return tuple(exp)


def parse_presentation(text: str) -> Presentation:
    secs = _split_sections(text)
    if "field" not in secs:
        raise ParseError("missing [field] section")
    if "vars" not in secs:
        raise ParseError("missing [vars] section")
    field = _parse_field(secs["field"])

    bnames, bdegs, ideal = [], [], []
    for lineno, line in secs.get("base", []):
        key, value = _key_value(lineno, line)
        if key == "vars":
            n, d = _names_degrees(lineno, value)
            bnames += n
            bdegs += d
        elif key == "ideal":
            for mono in filter(None, (t.strip() for t in value.split(","))):
                ideal.append(mono)
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r} in [base]")
    ideal_exps = [_monomial_exponent(0, bnames, mono) for mono in ideal]
    try:
        ring = BaseRing(BaseRingSpec(tuple(bnames), tuple(bdegs), tuple(ideal_exps), field))
    except BaseSpecError as exc:
        raise ParseError(str(exc)) from None

    xnames, xdegs = [], []
    for lineno, line in secs["vars"]:
        n, d = _names_degrees(lineno, line)
        xnames += n
        xdegs += d
    if not xnames:
        raise ParseError("no skew variables declared")

    sigma, delta = {}, {}
    for name, table in (("sigma", sigma), ("delta", delta)):
        for lineno, line in secs.get(name, []):
            key, value = _key_value(lineno, line)
            if key not in xnames:
                raise ParseError(f"line {lineno}: unknown skew variable {key!r} in [{name}]")
            i = xnames.index(key)
            images = table.setdefault(i, {})
            for item in filter(None, (t.strip() for t in value.split(","))):
                if "->" not in item:
                    raise ParseError(f"line {lineno}: expected 'y -> image'")
                lhs, rhs = (s.strip() for s in item.split("->", 1))
                if lhs not in bnames:
                    raise ParseError(f"line {lineno}: unknown base variable {lhs!r}")
                images[bnames.index(lhs)] = eval_base(ring, rhs)

    def full(i, table, default):
        got = table.get(i, {})
        return [got.get(j, default(j)) for j in range(ring.m)]

    sig = [full(i, sigma, ring.gen) for i in range(len(xnames))]
    dlt = [full(i, delta, lambda j: ring.zero) for i in range(len(xnames))]

    try:
        P0 = Presentation(ring, xnames, sigma=sig, delta=dlt, xdegrees=xdegs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None

    relations = {}
    for lineno, line in secs.get("relations", []):
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected 'xj*xi = ...'")
        lhs, rhs = (s.strip() for s in line.split("=", 1))
        m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)\s*\*\s*([A-Za-z_][A-Za-z0-9_]*)", lhs)
        if not m or m.group(1) not in xnames or m.group(2) not in xnames:
            raise ParseError(f"line {lineno}: left side must be a product of two skew variables")
        j, i = xnames.index(m.group(1)), xnames.index(m.group(2))
        if not j > i:
            raise ParseError(f"line {lineno}: left side must be x_j*x_i with j after i")
        if (i, j) in relations:
            raise ParseError(f"line {lineno}: relation for {lhs} repeated")
        relations[(i, j)] = _parse_rhs(P0, lineno, rhs, i, j)

    try:
        return Presentation(ring, xnames, sigma=sig, delta=dlt, relations=relations, xdegrees=xdegs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _ascending(tree, xnames, lineno):
    """Reject products that list skew variables out of order."""
    if isinstance(tree, Mul):
        seq = []

        def flat(e):
            if isinstance(e, Mul):
                for f in e.factors:
                    flat(f)
            elif isinstance(e, Pow) and isinstance(e.base, Sym):
                seq.append(e.base.name)
            elif isinstance(e, Sym):
                seq.append(e.name)
            elif _mentions(e, xnames):
                raise ParseError(f"line {lineno}: expand products of sums involving skew variables")

        flat(tree)
        idx = [xnames.index(s) for s in seq if s in xnames]
        if idx != sorted(idx):
            raise ParseError(f"line {lineno}: write skew variables in ascending order on the right side")
        return
    for child in ast_children(tree):
        _ascending(child, xnames, lineno)


def _mentions(e, names) -> bool:
    if isinstance(e, Sym):
        return e.name in names
    if isinstance(e, Mul):
        return any(_mentions(f, names) for f in e.factors)
    return any(_mentions(c, names) for c in ast_children(e))


def ast_children(e):
    if isinstance(e, Add):
        return e.terms
    if isinstance(e, Neg):
        return (e.arg,)
    if isinstance(e, Div):
        return (e.num, e.den)
    if isinstance(e, Pow):
        return (e.base,)
    return ()


def _parse_rhs(P0: Presentation, lineno, text, i, j) -> Relation:
    tree = parse_expr(text)
    _ascending(tree, P0.xnames, lineno)
    try:
        el = normal_form(P0, tree)
    except (KeyError, ValueError) as exc:
        raise ParseError(f"line {lineno}: {exc}") from None
    n = P0.n
    ring = P0.ring
    pair = tuple(1 if k in (i, j) else 0 for k in range(n))
    c, d0, dlin = ring.zero, ring.zero, [ring.zero] * n
    for alpha, coef in el.terms.items():
        if alpha == pair:
            c = coef
        elif sum(alpha) == 0:
            d0 = coef
        elif sum(alpha) == 1:
            dlin[alpha.index(1)] = coef
        else:
            raise ParseError(f"line {lineno}: term {alpha} is not allowed in the {P0.xnames[j]}*{P0.xnames[i]} relation")
    return Relation(c, d0, tuple(dlin))


def load_presentation(path) -> Presentation:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_presentation(text)


def format_presentation(P: Presentation) -> str:
    """Inverse of parse_presentation (up to whitespace and comments)."""
    ring = P.ring
    out = ["[field]", str(P.field)]
    if ring.m:
        out.append("[base]")
        out.append("vars: " + ", ".join(f"{nm}:{d}" for nm, d in zip(ring.names, ring.degrees)))
        if ring.ideal:
            out.append("ideal: " + ", ".join(ring.format_monomial(g) for g in ring.ideal))
    out.append("[vars]")
    out.append(", ".join(f"{nm}:{d}" for nm, d in zip(P.xnames, P.xdegrees)))
    sig = [
        (P.xnames[i], [(ring.names[j], im) for j, im in enumerate(s.images) if im != ring.gen(j)])
        for i, s in enumerate(P.sigma)
    ]
    if any(items for _, items in sig):
        out.append("[sigma]")
        out += [f"{x}: " + ", ".join(f"{y} -> {im}" for y, im in items) for x, items in sig if items]
    dlt = [(P.xnames[i], [(ring.names[j], im) for j, im in enumerate(d.images) if im]) for i, d in enumerate(P.delta)]
    if any(items for _, items in dlt):
        out.append("[delta]")
        out += [f"{x}: " + ", ".join(f"{y} -> {im}" for y, im in items) for x, items in dlt if items]
    rel_lines = []
    for (i, j), rel in sorted(P.relations.items()):
        if rel.c == ring.one and not rel.has_defect:
            continue
        terms = []
        if rel.c:
            terms.append(f"({rel.c})*{P.xnames[i]}*{P.xnames[j]}")
        for k, r in enumerate(rel.dlin):
            if r:
                terms.append(f"({r})*{P.xnames[k]}")
        if rel.d0:
            terms.append(f"({rel.d0})")
        rel_lines.append(f"{P.xnames[j]}*{P.xnames[i]} = " + (" + ".join(terms) or "0"))
    if rel_lines:
        out.append("[relations]")
        out += rel_lines
    return "\n".join(out) + "\n"
