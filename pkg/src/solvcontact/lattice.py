"""Co-compact lattice generators from a hyperbolic integer matrix.

Given N in SL(2, Z) with trace > 2, the eigenvalue data lives in the real
quadratic field Q(sqrt D) with D the squarefree part of trace^2 - 4.  The
three Heisenberg generators h0, h1, h2 are built with exact quadratic-field
coordinates: the z-coordinates of h0, h1 solve the invariance equations
under the diagonal automorphism (x, y, z) -> (lambda x, y/lambda, z), and
every required group relation is then verified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .scalars import (QuadElement, QuadraticField, quad_sign, render,
                      squarefree_decompose)


class NotHyperbolicError(ValueError):
    """|trace| <= 2: eigenvalues are not a real pair lambda, 1/lambda."""


class NotUnimodularError(ValueError):
    """The matrix determinant is not 1."""


class EigenvaluesNotPositiveError(ValueError):
    """trace <= -2: the eigenvalues are negative, not of exponential form."""


class LatticeWindowError(ValueError):
    """No solvable z-system inside the searched integer window."""


@dataclass(frozen=True)
class HyperbolicMatrix:
    n00: int
    n01: int
    n10: int
    n11: int

    def __post_init__(self):
        if self.det != 1:
            raise NotUnimodularError(f"determinant is {self.det}, expected 1")
        if abs(self.trace) <= 2:
            raise NotHyperbolicError(f"|trace| = {abs(self.trace)} <= 2")
        if self.trace < 0:
            raise EigenvaluesNotPositiveError(
                f"trace {self.trace} < 0: eigenvalues are negative")

    @property
    def trace(self) -> int:
        return self.n00 + self.n11

    @property
    def det(self) -> int:
        return self.n00 * self.n11 - self.n01 * self.n10

    def rows(self) -> list[list[int]]:
        return [[self.n00, self.n01], [self.n10, self.n11]]


@dataclass(frozen=True)
class HeisenbergElement:
    """(x, y, z) coordinates of the 3x3 unitriangular matrix with top row
    (1, x, z) and middle row (0, 1, y)."""

    x: QuadElement
    y: QuadElement
    z: QuadElement


def heisenberg_mul(a: HeisenbergElement, b: HeisenbergElement) -> HeisenbergElement:
    """Matrix product: (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x y')."""
    return HeisenbergElement(a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y)


def heisenberg_inv(a: HeisenbergElement) -> HeisenbergElement:
    return HeisenbergElement(-a.x, -a.y, -a.z + a.x * a.y)


def heisenberg_pow(a: HeisenbergElement, m: int) -> HeisenbergElement:
    """a^m = (m x, m y, m z + C(m,2) x y), valid for every integer m."""
    binom = m * (m - 1) // 2
    return HeisenbergElement(a.x * m, a.y * m, a.z * m + a.x * a.y * binom)


@dataclass
class EigenData:
    d: int
    lam: QuadElement                       # the eigenvalue > 1
    eigvec_plus: tuple[QuadElement, QuadElement]
    eigvec_minus: tuple[QuadElement, QuadElement]


def hyperbolic_data(n: HyperbolicMatrix) -> EigenData:
    """Squarefree D, the eigenvalue lambda > 1, and normalized eigenvectors.

    Eigenvectors are normalized with first nonzero coordinate 1, which makes
    every later output deterministic.
    """
    t = n.trace
    s, d = squarefree_decompose(t * t - 4)
    lam = QuadElement(Fraction(t, 2), Fraction(s, 2), d)
    assert quad_sign(lam - 1) == 1, "lambda must exceed 1"
    lam_inv = 1 / lam
    # n01 != 0 for every hyperbolic unimodular integer matrix
    vec_plus = (QuadElement.const(1, d), (lam - n.n00) / n.n01)
    vec_minus = (QuadElement.const(1, d), (lam_inv - n.n00) / n.n01)
    for lam_check, vec in ((lam, vec_plus), (lam_inv, vec_minus)):
        r0 = vec[0] * n.n00 + vec[1] * n.n01
        r1 = vec[0] * n.n10 + vec[1] * n.n11
        assert r0 == lam_check * vec[0] and r1 == lam_check * vec[1]
    return EigenData(d, lam, vec_plus, vec_minus)


@dataclass
class LatticeData:
    matrix: HyperbolicMatrix
    d: int
    lam: QuadElement
    eigvec_plus: tuple[QuadElement, QuadElement]
    eigvec_minus: tuple[QuadElement, QuadElement]
    z0: QuadElement
    z1: QuadElement
    z2: QuadElement
    r: int
    s: int
    h0: HeisenbergElement
    h1: HeisenbergElement
    h2: HeisenbergElement


def psi_one(ld: LatticeData, a: HeisenbergElement) -> HeisenbergElement:
    """The time-1 automorphism (x, y, z) -> (lambda x, y / lambda, z)."""
    return HeisenbergElement(ld.lam * a.x, a.y / ld.lam, a.z)


def build_lattice(n: HyperbolicMatrix) -> LatticeData:
    """Solve for (z0, z1) making the generator set automorphism-invariant.

    psi(1)(h0) = h0^n00 h1^n01 h2^r and psi(1)(h1) = h0^n10 h1^n11 h2^s
    reduce to the linear system (I - N) (z0, z1)^T = c(r, s) over the
    quadratic field; r = s = 0 is tried first (the system matrix I - N has
    determinant 2 - trace != 0, so it succeeds for every hyperbolic input),
    with a bounded window |r|, |s| <= 8 as fallback.
    """
    eig = hyperbolic_data(n)
    field = QuadraticField(eig.d)
    x0, x1 = eig.eigvec_plus
    y0, y1 = eig.eigvec_minus
    z2 = x1 * y0 - x0 * y1
    assert not z2.is_zero, "eigenvectors must form a basis"

    one = field.one()
    mat = [[one * (1 - n.n00), one * (-n.n01)],
           [one * (-n.n10), one * (1 - n.n11)]]

    def constant(m0: int, m1: int) -> QuadElement:
        # z-coordinate of h0^m0 h1^m1 before the h2 correction
        b0 = m0 * (m0 - 1) // 2
        b1 = m1 * (m1 - 1) // 2
        return x0 * y0 * b0 + x1 * y1 * b1 + x0 * y1 * (m0 * m1)

    c_top = constant(n.n00, n.n01)
    c_bot = constant(n.n10, n.n11)

    for window in range(0, 9):
        for r in range(-window, window + 1):
            for s in range(-window, window + 1):
                if max(abs(r), abs(s)) != window:
                    continue
                rhs = [c_top + z2 * r, c_bot + z2 * s]
                sol = linalg.solve(mat, rhs, field)
                if sol is None:
                    continue
                z0, z1 = sol
                h0 = HeisenbergElement(x0, y0, z0)
                h1 = HeisenbergElement(x1, y1, z1)
                h2 = HeisenbergElement(field.zero(), field.zero(), z2)
                return LatticeData(n, eig.d, eig.lam, eig.eigvec_plus,
                                   eig.eigvec_minus, z0, z1, z2, r, s,
                                   h0, h1, h2)
    raise LatticeWindowError(
        f"no solvable system with |r|, |s| <= 8; singular system {mat}")


@dataclass
class RelationCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class LatticeReport:
    checks: list[RelationCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed]


def _h_str(a: HeisenbergElement) -> str:
    return f"({render(a.x)}, {render(a.y)}, {render(a.z)})"


def verify_lattice(ld: LatticeData) -> LatticeReport:
    """Exact verification of every defining relation of the generator set."""
    checks: list[RelationCheck] = []
    h0, h1, h2 = ld.h0, ld.h1, ld.h2

    lhs = heisenberg_mul(h2, heisenberg_mul(h0, h1))
    rhs = heisenberg_mul(h1, h0)
    checks.append(RelationCheck(
        "h2 (h0 h1) = h1 h0", lhs == rhs,
        "" if lhs == rhs else f"{_h_str(lhs)} != {_h_str(rhs)}"))

    for name, g in (("h0", h0), ("h1", h1)):
        a, b = heisenberg_mul(h2, g), heisenberg_mul(g, h2)
        checks.append(RelationCheck(
            f"h2 {name} = {name} h2", a == b,
            "" if a == b else f"{_h_str(a)} != {_h_str(b)}"))

    ok, detail = True, ""
    for m0 in range(-2, 3):
        for m1 in range(-2, 3):
            lhs = heisenberg_mul(heisenberg_pow(h1, m1), heisenberg_pow(h0, m0))
            rhs = heisenberg_mul(heisenberg_pow(h2, m0 * m1),
                                 heisenberg_mul(heisenberg_pow(h0, m0),
                                                heisenberg_pow(h1, m1)))
            if lhs != rhs:
                ok = False
                detail = f"fails at (m0, m1) = ({m0}, {m1})"
                break
        if not ok:
            break
    checks.append(RelationCheck(
        "h1^m1 h0^m0 = h2^(m0 m1) h0^m0 h1^m1 for m0, m1 in -2..2", ok, detail))

    n = ld.matrix
    for name, g, row, exp in (("h0", h0, (n.n00, n.n01), ld.r),
                              ("h1", h1, (n.n10, n.n11), ld.s)):
        lhs = psi_one(ld, g)
        rhs = heisenberg_mul(heisenberg_pow(h0, row[0]),
                             heisenberg_mul(heisenberg_pow(h1, row[1]),
                                            heisenberg_pow(h2, exp)))
        checks.append(RelationCheck(
            f"psi(1)({name}) = h0^{row[0]} h1^{row[1]} h2^{exp}", lhs == rhs,
            "" if lhs == rhs else f"{_h_str(lhs)} != {_h_str(rhs)}"))

    z2_expected = ld.eigvec_plus[1] * ld.eigvec_minus[0] \
        - ld.eigvec_plus[0] * ld.eigvec_minus[1]
    checks.append(RelationCheck(
        "z2 = x1 y0 - x0 y1 != 0",
        ld.z2 == z2_expected and not ld.z2.is_zero,
        f"z2 = {render(ld.z2)}"))
    return LatticeReport(checks)
