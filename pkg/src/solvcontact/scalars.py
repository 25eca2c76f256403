"""Exact scalar arithmetic for the three coefficient fields.

Everything downstream computes over one of:

* ``Fraction``           -- the rationals,
* ``RationalFunction``   -- univariate rational functions over the rationals
  in one formal parameter (written ``p`` throughout the docs),
* ``QuadElement``        -- a real quadratic field Q(sqrt(D)), D squarefree.

All values are immutable and all operations are pure; results are always in
canonical form (reduced fractions, monic denominators, squarefree D), so
equality is component comparison.  No floating point is ever used to decide
anything; ``to_float`` exists for diagnostics only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


class MixedFieldError(TypeError):
    """Two operands from incompatible scalar fields met in one operation."""


class PoleError(ZeroDivisionError):
    """A rational function was specialized at a root of its denominator."""


# ---------------------------------------------------------------------------
# polynomials over Q (internal representation of rational functions)
# ---------------------------------------------------------------------------

class Poly:
    """Univariate polynomial over Fraction, coefficients stored low to high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c) -> Poly:
        return cls((Fraction(c),))

    @classmethod
    def gen(cls) -> Poly:
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        dlead = other.lead
        while len(r) >= len(other.coeffs) and any(c != 0 for c in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) < len(other.coeffs):
                break
            shift = len(r) - len(other.coeffs)
            f = r[-1] / dlead
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                r[shift + i] -= f * c
        return Poly(q), Poly(r)

    def content(self) -> Fraction:
        """Positive rational c such that self/c has coprime integer coefficients."""
        if self.is_zero:
            return Fraction(1)
        den = math.lcm(*(c.denominator for c in self.coeffs))
        num = math.gcd(*(abs(c.numerator) * (den // c.denominator) for c in self.coeffs))
        return Fraction(num, den)

    def primitive(self) -> Poly:
        if self.is_zero:
            return self
        c = self.content()
        if self.lead < 0:
            c = -c
        return Poly(tuple(x / c for x in self.coeffs))

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        lead = self.lead
        return Poly(tuple(c / lead for c in self.coeffs))

    def eval(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd via primitive-part Euclid: content stripped at every step."""
    f, g = f.primitive(), g.primitive()
    while not g.is_zero:
        _, r = divmod(f, g)
        f, g = g, r.primitive()
    return f.monic()


def poly_sqrt(f: Poly) -> Poly | None:
    """Exact square root in Q[x], or None if f is not a square."""
    if f.is_zero:
        return Poly()
    if f.degree % 2 != 0 or f.lead < 0:
        return None
    s = _fraction_sqrt(f.lead)
    if s is None:
        return None
    m = f.degree // 2
    q = [Fraction(0)] * (m + 1)
    q[m] = s
    # match coefficients of degree m+k from the top down; the only unknown
    # in the convolution at that degree is the cross term 2*q[k]*q[m]
    for k in range(m - 1, -1, -1):
        acc = sum((q[i] * q[m + k - i] for i in range(k + 1, m)), Fraction(0))
        target = f.coeffs[m + k] if m + k <= f.degree else Fraction(0)
        q[k] = (target - acc) / (2 * s)
    cand = Poly(q)
    return cand if cand * cand == f else None


def _fraction_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    a, b = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if a * a == x.numerator and b * b == x.denominator:
        return Fraction(a, b)
    return None


def poly_to_str(f: Poly, param: str) -> str:
    if f.is_zero:
        return "0"
    parts: list[str] = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            mono = str(abs(c))
        else:
            var = param if k == 1 else f"{param}^{k}"
            mono = var if abs(c) == 1 else f"{abs(c)}{var}"
        if not parts:
            parts.append(mono if c > 0 else f"-{mono}")
        else:
            parts.append(f"+{mono}" if c > 0 else f"-{mono}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# rational functions in one parameter
# ---------------------------------------------------------------------------

class RationalFunction:
    """Element of Q(param): a reduced fraction of rational polynomials.

    Invariants: the denominator is monic and nonzero, and gcd(num, den) = 1.
    """

    __slots__ = ("num", "den", "param")

    def __init__(self, num: Poly, den: Poly | None = None, param: str = "p"):
        if den is None:
            den = Poly.const(1)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = Poly(), Poly.const(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, _ = divmod(num, g)
                den, _ = divmod(den, g)
            lead = den.lead
            if lead != 1:
                num = num * (1 / lead)
                den = den.monic()
        self.num = num
        self.den = den
        self.param = param

    @classmethod
    def const(cls, c, param: str = "p") -> RationalFunction:
        return cls(Poly.const(c), param=param)

    @classmethod
    def gen(cls, param: str = "p") -> RationalFunction:
        return cls(Poly.gen(), param=param)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerce(self, other) -> RationalFunction | None:
        if isinstance(other, RationalFunction):
            if other.param != self.param:
                raise MixedFieldError(
                    f"rational functions in different parameters: "
                    f"{self.param!r} vs {other.param!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction.const(other, param=self.param)
        if isinstance(other, QuadElement):
            raise MixedFieldError("cannot mix Q(param) and Q(sqrt(D)) scalars")
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den, self.param))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other) -> RationalFunction:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den,
                                self.den * o.den, self.param)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den, self.param)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den, self.param)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num, self.param)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> RationalFunction:
        if n < 0:
            return RationalFunction.const(1, self.param) / self ** (-n)
        out = RationalFunction.const(1, self.param)
        for _ in range(n):
            out = out * self
        return out

    def eval(self, r: Fraction) -> Fraction:
        d = self.den.eval(r)
        if d == 0:
            raise PoleError(f"denominator {poly_to_str(self.den, self.param)} "
                            f"vanishes at {self.param}={r}")
        return self.num.eval(r) / d

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        n = poly_to_str(self.num, self.param)
        if self.den == Poly.const(1):
            return n
        return f"{n} / {poly_to_str(self.den, self.param)}"


# ---------------------------------------------------------------------------
# real quadratic field elements
# ---------------------------------------------------------------------------

def squarefree_decompose(n: int) -> tuple[int, int]:
    """n = s*s*d with d squarefree; returns (s, d).  Requires n > 0."""
    if n <= 0:
        raise ValueError("squarefree decomposition needs a positive integer")
    s, d, f = 1, 1, 2
    while f * f <= n:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        s *= f ** (e // 2)
        if e % 2:
            d *= f
        f += 1
    return s, d * n


class QuadElement:
    """a + b*sqrt(d) with rational a, b and squarefree d > 1."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        s, d0 = squarefree_decompose(d)
        if d0 <= 1:
            raise ValueError(f"quadratic field discriminant must be squarefree > 1, got {d}")
        self.a = Fraction(a)
        self.b = Fraction(b) * s
        self.d = d0

    @classmethod
    def const(cls, c, d: int) -> QuadElement:
        return cls(c, 0, d)

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def conjugate(self) -> QuadElement:
        return QuadElement(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def _coerce(self, other) -> QuadElement | None:
        if isinstance(other, QuadElement):
            if other.d != self.d:
                raise MixedFieldError(f"quadratic fields Q(sqrt{self.d}) and "
                                      f"Q(sqrt{other.d}) are incompatible")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElement.const(other, self.d)
        if isinstance(other, RationalFunction):
            raise MixedFieldError("cannot mix Q(sqrt(D)) and Q(param) scalars")
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadElement(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.a * o.a + self.b * o.b * self.d,
                           self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero quadratic element")
        n = o.norm()
        conj = o.conjugate()
        return QuadElement((self.a * conj.a + self.b * conj.b * self.d) / n,
                           (self.a * conj.b + self.b * conj.a) / n, self.d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> QuadElement:
        if n < 0:
            return QuadElement.const(1, self.d) / self ** (-n)
        out = QuadElement.const(1, self.d)
        for _ in range(n):
            out = out * self
        return out

    def to_float(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        return f"QuadElement({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return render(self)


def quad_sign(x: QuadElement | Fraction | int) -> int:
    """Exact sign of a + b*sqrt(d) as a real number (-1, 0, +1)."""
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    a, b = x.a, x.b
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return 1 if b > 0 else -1
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # opposite signs: compare a^2 against b^2 d
    cmp = a * a - b * b * x.d
    if a > 0:  # b < 0
        return (cmp > 0) - (cmp < 0)
    return (cmp < 0) - (cmp > 0)


# ---------------------------------------------------------------------------
# field descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalField:
    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise MixedFieldError(f"cannot coerce {x!r} into Q")

    def describe(self) -> str:
        return "Q"


@dataclass(frozen=True)
class FunctionField:
    param: str = "p"

    def zero(self) -> RationalFunction:
        return RationalFunction.const(0, self.param)

    def one(self) -> RationalFunction:
        return RationalFunction.const(1, self.param)

    def gen(self) -> RationalFunction:
        return RationalFunction.gen(self.param)

    def coerce(self, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            if x.param != self.param:
                raise MixedFieldError(f"parameter {x.param!r} does not belong to "
                                      f"Q({self.param})")
            return x
        if isinstance(x, (int, Fraction, str)):
            return RationalFunction.const(Fraction(x), self.param)
        raise MixedFieldError(f"cannot coerce {x!r} into Q({self.param})")

    def describe(self) -> str:
        return f"Q({self.param})"


@dataclass(frozen=True)
class QuadraticField:
    d: int

    def __post_init__(self):
        s, d0 = squarefree_decompose(self.d)
        if s != 1 or d0 <= 1:
            raise ValueError(f"discriminant must be squarefree > 1, got {self.d}")

    def zero(self) -> QuadElement:
        return QuadElement.const(0, self.d)

    def one(self) -> QuadElement:
        return QuadElement.const(1, self.d)

    def sqrt_gen(self) -> QuadElement:
        return QuadElement(0, 1, self.d)

    def coerce(self, x) -> QuadElement:
        if isinstance(x, QuadElement):
            if x.d != self.d:
                raise MixedFieldError(f"sqrt({x.d}) does not belong to Q(sqrt{self.d})")
            return x
        if isinstance(x, (int, Fraction, str)):
            return QuadElement.const(Fraction(x), self.d)
        raise MixedFieldError(f"cannot coerce {x!r} into Q(sqrt{self.d})")

    def describe(self) -> str:
        return f"Q(sqrt{self.d})"


Field = RationalField | FunctionField | QuadraticField
Scalar = Fraction | RationalFunction | QuadElement


def field_of(x: Scalar) -> Field:
    if isinstance(x, (int, Fraction)):
        return RationalField()
    if isinstance(x, RationalFunction):
        return FunctionField(x.param)
    if isinstance(x, QuadElement):
        return QuadraticField(x.d)
    raise MixedFieldError(f"not a scalar: {x!r}")


def field_arith(x: Scalar, y: Scalar, op: str) -> Scalar:
    """Exact arithmetic dispatch; integers and Fractions embed everywhere."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def specialize(f: RationalFunction | Fraction | int, r: Fraction) -> Fraction:
    """Evaluate a rational function at a concrete rational parameter value."""
    if isinstance(f, (int, Fraction)):
        return Fraction(f)
    if isinstance(f, RationalFunction):
        return f.eval(Fraction(r))
    raise MixedFieldError(f"cannot specialize {f!r}")


def to_float(x: Scalar, sample: Fraction | None = None) -> float:
    """Floating approximation, for diagnostics only (never for decisions)."""
    if isinstance(x, (int, Fraction)):
        return float(x)
    if isinstance(x, QuadElement):
        return x.to_float()
    if isinstance(x, RationalFunction):
        if sample is None:
            raise ValueError("a sample parameter value is required")
        return float(x.eval(sample))
    raise MixedFieldError(f"not a scalar: {x!r}")


def render(x: Scalar) -> str:
    """Canonical exact string form, e.g. '3/2', '(3+sqrt5)/2', 'p^2-1 / p'."""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, RationalFunction):
        return str(x)
    if isinstance(x, QuadElement):
        if x.b == 0:
            return str(x.a)
        q = math.lcm(x.a.denominator, x.b.denominator)
        a, b = x.a * q, x.b * q
        root = f"sqrt{x.d}" if abs(b) == 1 else f"{abs(b)}sqrt{x.d}"
        if a == 0:
            core = root if b > 0 else f"-{root}"
            return core if q == 1 else f"{core}/{q}"
        core = f"{a}+{root}" if b > 0 else f"{a}-{root}"
        return f"({core})/{q}" if q != 1 else core
    raise MixedFieldError(f"not a scalar: {x!r}")


# ---------------------------------------------------------------------------
# roots of polynomials inside a field (used by the flag-of-ideals search)
# ---------------------------------------------------------------------------

def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = [1]
    f = 2
    rest = n
    while f * f <= rest:
        if rest % f == 0:
            e = 0
            while rest % f == 0:
                rest //= f
                e += 1
            out = [d * f ** k for d in out for k in range(e + 1)]
        f += 1
    if rest > 1:
        out = [d * rest ** k for d in out for k in range(2)]
    return sorted(set(out))


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    if len(ints) <= 1:
        return []
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints = ints[1:]
        if len(ints) <= 1:
            return roots
    for u in _divisors(ints[0]):
        for v in _divisors(ints[-1]):
            if math.gcd(u, v) != 1:
                continue
            for cand in (Fraction(u, v), Fraction(-u, v)):
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def _rf_sqrt(f: RationalFunction) -> RationalFunction | None:
    s = poly_sqrt(f.num * f.den)
    if s is None:
        return None
    return RationalFunction(s, f.den, f.param)


def roots_in_field(coeffs: list[Scalar], field: Field) -> list[Scalar]:
    """All roots of sum(coeffs[k] x^k) that lie in the given field.

    Complete over Q and for degree <= 2 over Q(param) and Q(sqrt D); for
    higher degree over Q(param) it finds every root that is polynomial in
    the parameter of degree <= 2 (each candidate is verified exactly), and
    over Q(sqrt D) every rational root.  Callers treat a miss as "unknown",
    never as a proof of absence.
    """
    cs = [field.coerce(c) for c in coeffs]
    while cs and cs[-1] == field.zero():
        cs.pop()
    roots: list[Scalar] = []
    while cs and cs[0] == field.zero():
        cs = cs[1:]
        if field.zero() not in roots:
            roots.append(field.zero())
    deg = len(cs) - 1
    if deg <= 0:
        return roots
    if deg == 1:
        roots.append(field.zero() - cs[0] / cs[1])
        return _dedup(roots)
    if isinstance(field, RationalField):
        roots.extend(_rational_roots(cs))
        return _dedup(roots)
    if deg == 2:
        a, b, c = cs[2], cs[1], cs[0]
        disc = b * b - 4 * a * c
        s = _field_sqrt(disc, field)
        if s is not None:
            roots.append((s - b) / (2 * a))
            roots.append((field.zero() - s - b) / (2 * a))
        return _dedup(roots)
    if isinstance(field, FunctionField):
        roots.extend(_function_field_roots(cs, field))
    return _dedup(roots)


def _dedup(values: list[Scalar]) -> list[Scalar]:
    out: list[Scalar] = []
    for v in values:
        if not any(v == w for w in out):
            out.append(v)
    return out


def _field_sqrt(x: Scalar, field: Field) -> Scalar | None:
    if isinstance(field, RationalField):
        return _fraction_sqrt(x)
    if isinstance(field, FunctionField):
        return _rf_sqrt(x)
    # square root of a rational number inside Q(sqrt d)
    if isinstance(field, QuadraticField) and x.b == 0:
        if x.a == 0:
            return field.zero()
        if x.a > 0:
            num_s, num_d = squarefree_decompose(x.a.numerator)
            den_s, den_d = squarefree_decompose(x.a.denominator)
            core = num_d * den_d
            scale = Fraction(num_s, den_s * den_d)
            if core == 1:
                return QuadElement(scale, 0, field.d)
            if core == field.d:
                return QuadElement(0, scale, field.d)
    return None


def _function_field_roots(cs: list[RationalFunction], field: FunctionField) -> list[RationalFunction]:
    """Roots polynomial in the parameter of degree <= 2, found by sampling
    three specializations and verifying each interpolated candidate exactly."""
    samples = [Fraction(17), Fraction(19), Fraction(23)]
    per_sample: list[list[Fraction]] = []
    for s in samples:
        try:
            spec = [c.eval(s) for c in cs]
        except PoleError:
            return []
        per_sample.append(_rational_roots(spec))
    found: list[RationalFunction] = []
    s0, s1, s2 = samples
    for r0 in per_sample[0]:
        for r1 in per_sample[1]:
            for r2 in per_sample[2]:
                # Lagrange interpolation through the three sample points
                c2 = (r0 / ((s0 - s1) * (s0 - s2)) + r1 / ((s1 - s0) * (s1 - s2))
                      + r2 / ((s2 - s0) * (s2 - s1)))
                c1 = (-r0 * (s1 + s2) / ((s0 - s1) * (s0 - s2))
                      - r1 * (s0 + s2) / ((s1 - s0) * (s1 - s2))
                      - r2 * (s0 + s1) / ((s2 - s0) * (s2 - s1)))
                c0 = (r0 * s1 * s2 / ((s0 - s1) * (s0 - s2))
                      + r1 * s0 * s2 / ((s1 - s0) * (s1 - s2))
                      + r2 * s0 * s1 / ((s2 - s0) * (s2 - s1)))
                cand = RationalFunction(Poly((c0, c1, c2)), param=field.param)
                if any(cand == f for f in found):
                    continue
                acc = field.zero()
                for c in reversed(cs):
                    acc = acc * cand + c
                if acc == field.zero():
                    found.append(cand)
    return found
