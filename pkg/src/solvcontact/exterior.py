"""Sparse exterior algebra over a fixed ordered dual basis.

Conventions fixed here and relied on everywhere else:

* blades are strictly increasing index tuples; sign normalization is the
  parity of the sort,
* wedge evaluation follows the determinant convention with no 1/k! factor:
  (a ^ b)(X, Y) = a(X) b(Y) - a(Y) b(X),
* the interior product contracts in the first slot and extends as an
  antiderivation: i_v(a ^ b) = (i_v a) ^ b + (-1)^deg(a) a ^ (i_v b).

These are the unique choices making the two displayed structure equations
d(eta)(A, B) = -eta([A, B]) and d(eta) = -alpha^beta - gamma^theta agree;
see docs/conventions.md.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .scalars import Field, Scalar

Blade = tuple[int, ...]


class ArityError(ValueError):
    """A form was evaluated on the wrong number of vectors."""


@dataclass(frozen=True)
class Vector:
    """Element of the algebra in basis coordinates (dense)."""

    coords: tuple[Scalar, ...]

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __add__(self, other: Vector) -> Vector:
        return Vector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Vector) -> Vector:
        return Vector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Vector:
        return Vector(tuple(-a for a in self.coords))

    def scale(self, c: Scalar) -> Vector:
        return Vector(tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @classmethod
    def basis(cls, dim: int, i: int, field: Field) -> Vector:
        z, o = field.zero(), field.one()
        return cls(tuple(o if j == i else z for j in range(dim)))

    @classmethod
    def zero(cls, dim: int, field: Field) -> Vector:
        return cls((field.zero(),) * dim)


def merge_blades(b1: Blade, b2: Blade) -> tuple[int, Blade] | None:
    """Sorted concatenation with permutation sign; None when indices repeat."""
    if set(b1) & set(b2):
        return None
    sign = 1
    out: list[int] = []
    i = j = 0
    while i < len(b1) and j < len(b2):
        if b1[i] < b2[j]:
            out.append(b1[i])
            i += 1
        else:
            out.append(b2[j])
            j += 1
            if (len(b1) - i) % 2:
                sign = -sign
    out.extend(b1[i:])
    out.extend(b2[j:])
    return sign, tuple(out)


def sort_blade(indices: tuple[int, ...]) -> tuple[int, Blade] | None:
    """Normalize an arbitrary index tuple; None when an index repeats."""
    sign = 1
    arr = list(indices)
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
            elif arr[j] == arr[j + 1]:
                return None
    return sign, tuple(arr)


def all_blades(dim: int, degree: int) -> list[Blade]:
    if degree < 0:
        return []
    return list(combinations(range(dim), degree))


class Form:
    """Exterior form of a single degree, sparse over blades."""

    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim: int, degree: int, terms: dict[Blade, Scalar] | None = None):
        self.dim = dim
        self.degree = degree
        clean: dict[Blade, Scalar] = {}
        for b, c in (terms or {}).items():
            if len(b) != degree:
                raise ValueError(f"blade {b} has length {len(b)}, expected {degree}")
            if any(i < 0 or i >= dim for i in b):
                raise ValueError(f"blade {b} out of range for dimension {dim}")
            if list(b) != sorted(b):
                raise ValueError(f"blade {b} is not strictly increasing")
            if c != 0:
                clean[b] = c
        self.terms = clean

    @classmethod
    def zero(cls, dim: int, degree: int) -> Form:
        return cls(dim, degree, {})

    @classmethod
    def covector(cls, dim: int, i: int, coeff: Scalar) -> Form:
        return cls(dim, 1, {(i,): coeff})

    @classmethod
    def scalar(cls, dim: int, value: Scalar) -> Form:
        return cls(dim, 0, {(): value})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, blade: Blade, zero: Scalar) -> Scalar:
        return self.terms.get(blade, zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return (self.dim == other.dim and self.degree == other.degree
                and self.terms == other.terms)

    def __add__(self, other: Form) -> Form:
        if self.dim != other.dim or self.degree != other.degree:
            raise ValueError("can only add forms of equal dimension and degree")
        out = dict(self.terms)
        for b, c in other.terms.items():
            s = out.get(b)
            out[b] = c if s is None else s + c
        return Form(self.dim, self.degree, out)

    def __sub__(self, other: Form) -> Form:
        return self + (-other)

    def __neg__(self) -> Form:
        return Form(self.dim, self.degree, {b: -c for b, c in self.terms.items()})

    def scale(self, c: Scalar) -> Form:
        return Form(self.dim, self.degree, {b: c * v for b, v in self.terms.items()})

    def wedge(self, other: Form) -> Form:
        return wedge(self, other)

    def wedge_pow(self, n: int, field: Field) -> Form:
        out = Form.scalar(self.dim, field.one())
        for _ in range(n):
            out = wedge(out, self)
        return out

    def __repr__(self):
        if not self.terms:
            return f"Form<deg {self.degree}>(0)"
        parts = [f"{c!s}*e{list(b)}" for b, c in sorted(self.terms.items())]
        return f"Form<deg {self.degree}>({' + '.join(parts)})"


def wedge(a: Form, b: Form) -> Form:
    if a.dim != b.dim:
        raise ValueError("wedge of forms over different dimensions")
    degree = a.degree + b.degree
    if degree > a.dim:
        return Form.zero(a.dim, degree)
    out: dict[Blade, Scalar] = {}
    for b1, c1 in a.terms.items():
        for b2, c2 in b.terms.items():
            merged = merge_blades(b1, b2)
            if merged is None:
                continue
            sign, nb = merged
            c = c1 * c2
            if sign < 0:
                c = -c
            s = out.get(nb)
            out[nb] = c if s is None else s + c
    return Form(a.dim, degree, out)


def interior(v: Vector, a: Form) -> Form:
    """Contraction in the first slot, i_v extended as an antiderivation."""
    if v.dim != a.dim:
        raise ValueError("vector and form dimensions differ")
    if a.degree == 0:
        return Form.zero(a.dim, 0)
    out: dict[Blade, Scalar] = {}
    for blade, c in a.terms.items():
        for pos, idx in enumerate(blade):
            vi = v.coords[idx]
            if vi == 0:
                continue
            rest = blade[:pos] + blade[pos + 1:]
            term = vi * c
            if pos % 2:
                term = -term
            s = out.get(rest)
            out[rest] = term if s is None else s + term
    return Form(a.dim, a.degree - 1, out)


def evaluate(a: Form, vs: list[Vector]) -> Scalar:
    """Multilinear alternating evaluation (determinant convention, no 1/k!)."""
    if len(vs) != a.degree:
        raise ArityError(f"form of degree {a.degree} evaluated on {len(vs)} vectors")
    if a.degree == 0:
        total = None
        for _, c in a.terms.items():
            total = c if total is None else total + c
        if total is None:
            raise ValueError("cannot evaluate the zero 0-form without a field; "
                             "use Form.scalar to carry an explicit value")
        return total
    total = None
    for blade, c in a.terms.items():
        d = _det_minor(vs, blade)
        term = c * d
        total = term if total is None else total + term
    if total is None:
        # zero form: evaluate to the additive zero of the vectors' scalars
        x = vs[0].coords[0]
        return x - x
    return total


def form_to_str(a: Form, names: tuple[str, ...] | list[str]) -> str:
    """Render with dual-basis names, e.g. '-A*^B*-R*^U*'."""
    from .scalars import render
    if not a.terms:
        return "0"
    parts = []
    for blade in sorted(a.terms):
        c = a.terms[blade]
        mono = "^".join(f"{names[i]}*" for i in blade) if blade else "1"
        cs = render(c)
        if cs == "1" and blade:
            piece, neg = mono, False
        elif cs == "-1" and blade:
            piece, neg = mono, True
        else:
            neg = cs.startswith("-")
            body = cs[1:] if neg else cs
            if any(ch in body for ch in "+-") and not body.isdigit():
                body = f"({body})"
            piece = f"{body} {mono}" if blade else body
        if not parts:
            parts.append(f"-{piece}" if neg else piece)
        else:
            parts.append(f" - {piece}" if neg else f" + {piece}")
    return "".join(parts)


def _det_minor(vs: list[Vector], blade: Blade) -> Scalar:
    """det [ v_j component at blade index i ] via Laplace expansion."""
    k = len(blade)
    if k == 1:
        return vs[0].coords[blade[0]]
    total = None
    for j in range(k):
        c = vs[j].coords[blade[0]]
        if c == 0:
            continue
        sub = _det_minor(vs[:j] + vs[j + 1:], blade[1:])
        term = c * sub
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        x = vs[0].coords[0]
        return x - x
    return total
