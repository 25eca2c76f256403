"""Text front end: the .lie and .mor file formats.

Grammar (EBNF in docs/dsl.md): an algebra file declares a basis, brackets
as linear combinations of basis names, and optional contact / phi / metric
blocks; a morphism file declares a free odd-generator source, a target
(the invariant-forms algebra or the extension model of a .lie file), and
one image expression per generator.

Expressions share one language: '+' '-' for sums, '*' '^' or adjacency for
(graded) products, '/' for scalar division, '**' for scalar powers, 'X*'
for the dual covector of basis element X.  Scalars are exact: integers,
fractions, and the declared parameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exterior import Form, Vector, form_to_str
from .liealg import LieAlgebra, build_algebra
from . import linalg
from .scalars import (Field, Fraction as Rational, FunctionField,
                      RationalField, RationalFunction, Scalar, render)

RESERVED = {"algebra", "morphism", "params", "basis", "brackets", "contact",
            "phi", "metric", "eta", "identity", "source", "target", "images",
            "free", "ce", "tievsky"}


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}" if line else message)


# ---------------------------------------------------------------------------
# tokens
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str   # IDENT NUMBER DUAL PUNCT END
    value: str
    line: int
    col: int


_PUNCT = ("->", "**", "{", "}", "[", "]", "(", ")", ",", ":", "=", "+", "-",
          "*", "/", "^")


def tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch == '"':
            j = i + 1
            while j < n and text[j] != '"':
                if text[j] == "\n":
                    raise ParseError("unterminated string", line, col)
                j += 1
            if j >= n:
                raise ParseError("unterminated string", line, col)
            toks.append(Token("STRING", text[i + 1:j], line, col))
            col += j - i + 1
            i = j + 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("NUMBER", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            # IDENT immediately followed by '*' marks a dual covector,
            # unless a letter or digit follows the star (then '*' multiplies)
            if j < n and text[j] == "*" and not (j + 1 < n and
                                                 (text[j + 1].isalnum()
                                                  or text[j + 1] == "_"
                                                  or text[j + 1] == "*")):
                toks.append(Token("DUAL", name, line, col))
                col += j - i + 1
                i = j + 1
                continue
            toks.append(Token("IDENT", name, line, col))
            col += j - i
            i = j
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                toks.append(Token("PUNCT", p, line, col))
                col += len(p)
                i += len(p)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append(Token("END", "", line, col))
    return toks


# ---------------------------------------------------------------------------
# expression AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int
    line: int
    col: int


@dataclass(frozen=True)
class Ref:
    name: str
    line: int
    col: int


@dataclass(frozen=True)
class DualRef:
    name: str
    line: int
    col: int


@dataclass(frozen=True)
class Unary:
    op: str
    operand: object
    line: int
    col: int


@dataclass(frozen=True)
class Bin:
    op: str  # + - * / **
    left: object
    right: object
    line: int
    col: int


class _TokenStream:
    def __init__(self, toks: list[Token]):
        self.toks = toks
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def next(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def accept(self, kind: str, value: str | None = None) -> Token | None:
        t = self.peek()
        if t.kind == kind and (value is None or t.value == value):
            return self.next()
        return None

    def expect(self, kind: str, value: str | None = None) -> Token:
        t = self.accept(kind, value)
        if t is None:
            got = self.peek()
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}, found {got.value!r}",
                             got.line, got.col)
        return t


def _parse_expr(ts: _TokenStream):
    node = _parse_term(ts)
    while True:
        t = ts.peek()
        if t.kind == "PUNCT" and t.value in "+-":
            ts.next()
            rhs = _parse_term(ts)
            node = Bin(t.value, node, rhs, t.line, t.col)
        else:
            return node


def _parse_term(ts: _TokenStream):
    node = _parse_factor(ts)
    while True:
        t = ts.peek()
        if t.kind == "PUNCT" and t.value in ("*", "^", "/"):
            ts.next()
            rhs = _parse_factor(ts)
            op = "/" if t.value == "/" else "*"
            node = Bin(op, node, rhs, t.line, t.col)
        elif t.kind in ("IDENT", "NUMBER", "DUAL") or \
                (t.kind == "PUNCT" and t.value == "("):
            # adjacency is multiplication: '-p A', '2 A'
            rhs = _parse_factor(ts)
            node = Bin("*", node, rhs, t.line, t.col)
        else:
            return node


def _parse_factor(ts: _TokenStream):
    t = ts.peek()
    if t.kind == "PUNCT" and t.value in "+-":
        ts.next()
        inner = _parse_factor(ts)
        return inner if t.value == "+" else Unary("-", inner, t.line, t.col)
    return _parse_power(ts)


def _parse_power(ts: _TokenStream):
    base = _parse_atom(ts)
    t = ts.peek()
    if t.kind == "PUNCT" and t.value == "**":
        ts.next()
        exp = ts.expect("NUMBER")
        return Bin("**", base, Num(int(exp.value), exp.line, exp.col),
                   t.line, t.col)
    return base


def _parse_atom(ts: _TokenStream):
    t = ts.next()
    if t.kind == "NUMBER":
        return Num(int(t.value), t.line, t.col)
    if t.kind == "IDENT":
        return Ref(t.value, t.line, t.col)
    if t.kind == "DUAL":
        return DualRef(t.value, t.line, t.col)
    if t.kind == "PUNCT" and t.value == "(":
        node = _parse_expr(ts)
        ts.expect("PUNCT", ")")
        return node
    raise ParseError(f"unexpected token {t.value!r}", t.line, t.col)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

@dataclass
class Val:
    kind: str  # scalar | vector | form | cdga
    value: object


class EvalContext:
    """Supplies the meaning of identifiers for one expression site."""

    def __init__(self, field: Field, param: str | None = None,
                 basis: dict[str, Vector] | None = None,
                 covectors: dict[str, Form] | None = None,
                 named: dict[str, object] | None = None):
        self.field = field
        self.param = param
        self.basis = basis or {}
        self.covectors = covectors or {}
        self.named = named or {}

    def resolve(self, node: Ref) -> Val:
        if self.param is not None and node.name == self.param:
            return Val("scalar", self.field.gen())
        if node.name in self.basis:
            return Val("vector", self.basis[node.name])
        if node.name in self.named:
            return Val("cdga", self.named[node.name])
        if self.param is None and node.name.islower() and len(node.name) <= 2:
            raise ParseError(f"parameter {node.name!r} used but not declared",
                             node.line, node.col)
        raise ParseError(f"unknown identifier {node.name!r}", node.line, node.col)

    def resolve_dual(self, node: DualRef) -> Val:
        if node.name in self.covectors:
            return Val("form", self.covectors[node.name])
        raise ParseError(f"unknown dual covector {node.name!r}*",
                         node.line, node.col)


def eval_expr(node, ctx: EvalContext) -> Val:
    if isinstance(node, Num):
        return Val("scalar", ctx.field.coerce(node.value))
    if isinstance(node, Ref):
        return ctx.resolve(node)
    if isinstance(node, DualRef):
        return ctx.resolve_dual(node)
    if isinstance(node, Unary):
        v = eval_expr(node.operand, ctx)
        return Val(v.kind, -v.value)
    if isinstance(node, Bin):
        if node.op == "**":
            return _eval_pow(node, ctx)
        a = eval_expr(node.left, ctx)
        b = eval_expr(node.right, ctx)
        if node.op in "+-":
            return _eval_sum(node, a, b)
        if node.op == "/":
            if b.kind != "scalar":
                raise ParseError("can only divide by a scalar", node.line, node.col)
            if b.value == ctx.field.zero():
                raise ParseError("division by zero", node.line, node.col)
            if a.kind == "scalar":
                return Val("scalar", a.value / b.value)
            return _scale(a, ctx.field.one() / b.value)
        return _eval_product(node, a, b)
    raise AssertionError(f"unknown node {node!r}")


def _eval_pow(node: Bin, ctx: EvalContext) -> Val:
    base = eval_expr(node.left, ctx)
    n = node.right.value
    if base.kind == "scalar":
        return Val("scalar", base.value ** n)
    if base.kind == "form":
        return Val("form", base.value.wedge_pow(n, ctx.field))
    if base.kind == "cdga":
        out = base.value.algebra.unit()
        for _ in range(n):
            out = out * base.value
        return Val("cdga", out)
    raise ParseError("cannot exponentiate a vector", node.line, node.col)


def _eval_sum(node: Bin, a: Val, b: Val) -> Val:
    if a.kind != b.kind:
        raise ParseError(f"cannot add {a.kind} and {b.kind}", node.line, node.col)
    try:
        return Val(a.kind, a.value + b.value if node.op == "+" else a.value - b.value)
    except (ValueError, Exception) as exc:  # degree/dimension mismatches
        raise ParseError(str(exc), node.line, node.col)


def _scale(v: Val, c: Scalar) -> Val:
    if v.kind == "scalar":
        return Val("scalar", c * v.value)
    return Val(v.kind, v.value.scale(c))


def _eval_product(node: Bin, a: Val, b: Val) -> Val:
    if a.kind == "scalar":
        return _scale(b, a.value) if b.kind != "scalar" else \
            Val("scalar", a.value * b.value)
    if b.kind == "scalar":
        return _scale(a, b.value)
    if a.kind == "form" and b.kind == "form":
        return Val("form", a.value.wedge(b.value))
    if a.kind == "cdga" and b.kind == "cdga":
        return Val("cdga", a.value * b.value)
    raise ParseError(f"cannot multiply {a.kind} and {b.kind}",
                     node.line, node.col)


# ---------------------------------------------------------------------------
# algebra files
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraFile:
    """Canonical abstract form of a .lie file; equality is structural."""

    name: str
    param: str | None
    basis: tuple[str, ...]
    brackets: tuple[tuple[int, int, tuple[Scalar, ...]], ...]
    eta: tuple[Scalar, ...] | None
    phi: tuple[tuple[Scalar, ...], ...] | None    # matrix rows
    metric: tuple[tuple[Scalar, ...], ...] | str | None  # rows or "identity"

    @property
    def field(self) -> Field:
        return FunctionField(self.param) if self.param else RationalField()


def parse(text: str) -> AlgebraFile:
    """Parse a .lie file into its canonical abstract form."""
    ts = _TokenStream(tokenize(text))
    ts.expect("IDENT", "algebra")
    name = _expect_name(ts)
    ts.expect("PUNCT", "{")

    param: str | None = None
    basis: list[str] = []
    bracket_exprs: list[tuple[Token, Token, object]] = []
    eta_expr = None
    phi_exprs: list[tuple[Token, object]] = []
    metric_spec = None
    seen: set[str] = set()

    while not ts.accept("PUNCT", "}"):
        section = ts.expect("IDENT")
        if section.value in seen:
            raise ParseError(f"duplicate section {section.value!r}",
                             section.line, section.col)
        seen.add(section.value)
        ts.expect("PUNCT", ":")
        if section.value == "params":
            param = _expect_name(ts)
        elif section.value == "basis":
            while ts.peek().kind == "IDENT" and ts.peek().value not in RESERVED:
                basis.append(ts.next().value)
            if not basis:
                raise ParseError("empty basis", section.line, section.col)
            if len(set(basis)) != len(basis):
                raise ParseError("duplicate basis name", section.line, section.col)
        elif section.value == "brackets":
            while ts.peek().kind == "PUNCT" and ts.peek().value == "[":
                ts.next()
                lhs = ts.expect("IDENT")
                ts.expect("PUNCT", ",")
                rhs = ts.expect("IDENT")
                ts.expect("PUNCT", "]")
                ts.expect("PUNCT", "=")
                bracket_exprs.append((lhs, rhs, _parse_expr(ts)))
        elif section.value == "contact":
            ts.expect("IDENT", "eta")
            ts.expect("PUNCT", "=")
            eta_expr = _parse_expr(ts)
        elif section.value == "phi":
            while ts.peek().kind == "IDENT" and ts.peek().value not in RESERVED:
                src = ts.next()
                ts.expect("PUNCT", "->")
                phi_exprs.append((src, _parse_expr(ts)))
        elif section.value == "metric":
            if ts.accept("IDENT", "identity"):
                metric_spec = "identity"
            else:
                entries = [_parse_expr(ts)]
                while ts.accept("PUNCT", ","):
                    entries.append(_parse_expr(ts))
                metric_spec = entries
        else:
            raise ParseError(f"unknown section {section.value!r}",
                             section.line, section.col)
    ts.expect("END")

    if not basis:
        raise ParseError("algebra needs a basis section")
    field = FunctionField(param) if param else RationalField()
    dim = len(basis)
    vectors = {bn: Vector.basis(dim, i, field) for i, bn in enumerate(basis)}
    covectors = {bn: Form.covector(dim, i, field.one())
                 for i, bn in enumerate(basis)}
    vec_ctx = EvalContext(field, param, basis=vectors)
    form_ctx = EvalContext(field, param, covectors=covectors)
    scal_ctx = EvalContext(field, param)

    brackets: dict[tuple[int, int], tuple[Scalar, ...]] = {}
    for lhs, rhs, expr in bracket_exprs:
        for t in (lhs, rhs):
            if t.value not in vectors:
                raise ParseError(f"unknown identifier {t.value!r}", t.line, t.col)
        i, j = basis.index(lhs.value), basis.index(rhs.value)
        if i == j:
            raise ParseError(f"illegal diagonal bracket [{lhs.value},{rhs.value}]",
                             lhs.line, lhs.col)
        val = eval_expr(expr, vec_ctx)
        coords = _as_vector(val, dim, field, lhs).coords
        key = (i, j) if i < j else (j, i)
        if i > j:
            coords = tuple(-c for c in coords)
        if key in brackets:
            raise ParseError(f"duplicate bracket [{basis[key[0]]},{basis[key[1]]}]",
                             lhs.line, lhs.col)
        brackets[key] = coords

    eta = None
    if eta_expr is not None:
        v = eval_expr(eta_expr, form_ctx)
        if v.kind != "form" or v.value.degree != 1:
            raise ParseError("eta must be a linear combination of dual covectors")
        zero = field.zero()
        eta = tuple(v.value.terms.get((i,), zero) for i in range(dim))

    phi = None
    if phi_exprs:
        cols: dict[int, tuple[Scalar, ...]] = {}
        for src, expr in phi_exprs:
            if src.value not in vectors:
                raise ParseError(f"unknown identifier {src.value!r}",
                                 src.line, src.col)
            idx = basis.index(src.value)
            if idx in cols:
                raise ParseError(f"duplicate phi image for {src.value!r}",
                                 src.line, src.col)
            val = eval_expr(expr, vec_ctx)
            cols[idx] = _as_vector(val, dim, field, src).coords
        missing = [basis[i] for i in range(dim) if i not in cols]
        if missing:
            raise ParseError(f"phi images missing for {', '.join(missing)}")
        phi = tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))

    metric = None
    if metric_spec == "identity":
        metric = "identity"
    elif metric_spec is not None:
        if len(metric_spec) != dim * dim:
            raise ParseError(f"metric needs {dim * dim} entries, "
                             f"got {len(metric_spec)}")
        flat = []
        for e in metric_spec:
            v = eval_expr(e, scal_ctx)
            if v.kind != "scalar":
                raise ParseError("metric entries must be scalars")
            flat.append(v.value)
        metric = tuple(tuple(flat[r * dim + c] for c in range(dim))
                       for r in range(dim))

    return AlgebraFile(
        name=name,
        param=param,
        basis=tuple(basis),
        brackets=tuple(sorted((i, j, coords)
                              for (i, j), coords in brackets.items())),
        eta=eta,
        phi=phi,
        metric=metric,
    )


def _expect_name(ts: _TokenStream) -> str:
    t = ts.expect("IDENT")
    if t.value in RESERVED:
        raise ParseError(f"{t.value!r} is a reserved word", t.line, t.col)
    return t.value


def _as_vector(val: Val, dim: int, field: Field, tok: Token) -> Vector:
    if val.kind == "vector":
        return val.value
    if val.kind == "scalar" and val.value == field.zero():
        return Vector.zero(dim, field)
    raise ParseError("expected a linear combination of basis elements",
                     tok.line, tok.col)


def algebra_from_file(af: AlgebraFile) -> LieAlgebra:
    field = af.field
    bracket_list = [(i, j, Vector(coords)) for i, j, coords in af.brackets]
    return build_algebra(len(af.basis), list(af.basis), bracket_list, field)


def eta_form(af: AlgebraFile) -> Form | None:
    if af.eta is None:
        return None
    return Form(len(af.basis), 1,
                {(i,): c for i, c in enumerate(af.eta) if c != 0})


def metric_matrix(af: AlgebraFile) -> linalg.Matrix | None:
    if af.metric is None:
        return None
    if af.metric == "identity":
        return linalg.identity(len(af.basis), af.field)
    return [list(row) for row in af.metric]


def phi_matrix(af: AlgebraFile) -> linalg.Matrix | None:
    if af.phi is None:
        return None
    return [list(row) for row in af.phi]


# ---------------------------------------------------------------------------
# pretty printer (round-trips through parse)
# ---------------------------------------------------------------------------

def scalar_to_source(x: Scalar, param: str | None) -> str:
    """Render a scalar in re-parseable expression syntax."""
    if isinstance(x, (int, Rational)):
        return str(x)
    if isinstance(x, RationalFunction):
        num = _poly_source(x.num, x.param)
        if x.den.degree <= 0:
            return num
        return f"({num})/({_poly_source(x.den, x.param)})"
    raise ValueError(f"cannot render {x!r} in source syntax")


def _poly_source(poly, param: str) -> str:
    if poly.is_zero:
        return "0"
    parts = []
    for k in range(poly.degree, -1, -1):
        c = poly.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            mono = str(abs(c))
        else:
            var = param if k == 1 else f"{param}**{k}"
            mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
        if not parts:
            parts.append(mono if c > 0 else f"-{mono}")
        else:
            parts.append(f"+{mono}" if c > 0 else f"-{mono}")
    return "".join(parts)


def _combo_source(coords, names, param, dual: bool) -> str:
    parts = []
    for i, c in enumerate(coords):
        if c == 0:
            continue
        name = f"{names[i]}*" if dual else names[i]
        cs = scalar_to_source(c, param)
        if cs == "1":
            piece = name
        elif cs == "-1":
            piece = f"-{name}"
        elif cs.startswith("-"):
            piece = f"-({cs[1:]}) {name}" if any(op in cs[1:] for op in "+-") \
                else f"{cs} {name}"
        else:
            piece = f"({cs}) {name}" if any(op in cs[1:] for op in "+-") \
                else f"{cs} {name}"
        parts.append(piece)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def pretty_print(af: AlgebraFile) -> str:
    """Canonical source text; parse(pretty_print(af)) == af."""
    lines = [f"algebra {af.name} {{"]
    if af.param:
        lines.append(f"  params: {af.param}")
    lines.append(f"  basis: {' '.join(af.basis)}")
    if af.brackets:
        lines.append("  brackets:")
        for i, j, coords in af.brackets:
            combo = _combo_source(coords, af.basis, af.param, dual=False)
            lines.append(f"    [{af.basis[i]}, {af.basis[j]}] = {combo}")
    if af.eta is not None:
        lines.append("  contact:")
        lines.append(f"    eta = {_combo_source(af.eta, af.basis, af.param, dual=True)}")
    if af.phi is not None:
        lines.append("  phi:")
        for j, name in enumerate(af.basis):
            col = tuple(af.phi[i][j] for i in range(len(af.basis)))
            combo = _combo_source(col, af.basis, af.param, dual=False)
            lines.append(f"    {name} -> {combo}")
    if af.metric == "identity":
        lines.append("  metric: identity")
    elif af.metric is not None:
        lines.append("  metric:")
        for row in af.metric:
            rendered = ", ".join(scalar_to_source(c, af.param) for c in row)
            lines.append(f"    {rendered},")
        last = lines.pop()
        lines.append(last.rstrip(","))
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# morphism files
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MorphismFile:
    name: str
    source_gens: tuple[tuple[str, int], ...]
    target_kind: str          # "ce" or "tievsky"
    target_ref: str           # path of the referenced .lie file
    images: tuple[tuple[str, object], ...]  # (generator, expression AST)


def parse_morphism(text: str) -> MorphismFile:
    ts = _TokenStream(tokenize(text))
    ts.expect("IDENT", "morphism")
    name = _expect_name(ts)
    ts.expect("PUNCT", "{")
    gens: list[tuple[str, int]] = []
    target_kind = target_ref = None
    images: list[tuple[str, object]] = []
    while not ts.accept("PUNCT", "}"):
        section = ts.expect("IDENT")
        ts.expect("PUNCT", ":")
        if section.value == "source":
            ts.expect("IDENT", "free")
            while ts.peek().kind == "IDENT" and ts.peek().value not in RESERVED:
                gname = ts.next().value
                ts.expect("PUNCT", ":")
                deg = int(ts.expect("NUMBER").value)
                gens.append((gname, deg))
            if not gens:
                raise ParseError("empty generator list", section.line, section.col)
        elif section.value == "target":
            kind = ts.expect("IDENT")
            if kind.value not in ("ce", "tievsky"):
                raise ParseError(f"unknown target kind {kind.value!r}",
                                 kind.line, kind.col)
            target_kind = kind.value
            target_ref = ts.expect("STRING").value
        elif section.value == "images":
            while ts.peek().kind == "IDENT" and ts.peek().value not in RESERVED:
                gname = ts.next()
                ts.expect("PUNCT", "->")
                images.append((gname.value, _parse_expr(ts)))
        else:
            raise ParseError(f"unknown section {section.value!r}",
                             section.line, section.col)
    ts.expect("END")
    if target_kind is None:
        raise ParseError("morphism needs a target section")
    declared = {g for g, _ in gens}
    for g, _ in images:
        if g not in declared:
            raise ParseError(f"image for undeclared generator {g!r}")
    return MorphismFile(name, tuple(gens), target_kind, target_ref,
                        tuple(images))


