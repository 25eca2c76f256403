"""Exact linear algebra on cochain complexes.

Ranks come from fraction-free elimination; representative cocycles come
from the canonical kernel construction (reduced echelon, pivoting by basis
order), so results are deterministic for a given input ordering.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

from . import linalg
from .exterior import Form, all_blades
from .scalars import Field, Scalar


class NotClosedError(ValueError):
    """A form claimed to be closed is not; carries d(form) as witness."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__("form is not closed")


class CochainComplex:
    """Finite complex of free modules over an exact field.

    d[k] maps degree k to degree k+1 and is stored as a (dims[k+1] x dims[k])
    matrix.  Optionally carries a graded product (making cup products
    available) and per-degree basis labels / blade identifications.
    """

    def __init__(self, dims: list[int], d: list[linalg.Matrix], field: Field,
                 labels: list[list[str]] | None = None,
                 product: Callable[[int, list[Scalar], int, list[Scalar]],
                                   list[Scalar]] | None = None,
                 blades: list[list[tuple[int, ...]]] | None = None,
                 ambient_dim: int | None = None,
                 check: bool = True):
        self.dims = list(dims)
        self.d = d
        self.field = field
        self.labels = labels
        self.product = product
        self.blades = blades
        self.ambient_dim = ambient_dim
        self._spaces: dict[int, CohomologySpace] = {}
        self._ranks: list[int] | None = None
        if check:
            self._check_d_squared()

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def _check_d_squared(self):
        for k in range(len(self.d) - 1):
            m = linalg.mat_mul(self.d[k + 1], self.d[k], self.field)
            for row in m:
                for x in row:
                    if x != self.field.zero():
                        raise ValueError(f"d^2 != 0 between degrees {k} and {k + 2}")

    @classmethod
    def from_algebra(cls, algebra) -> CochainComplex:
        n = algebra.dim
        field = algebra.field
        blades = [all_blades(n, k) for k in range(n + 1)]
        dims = [len(b) for b in blades]
        mats: list[linalg.Matrix] = []
        for k in range(n + 1):
            cod = {b: i for i, b in enumerate(blades[k + 1])} if k < n else {}
            m = linalg.zeros(dims[k + 1] if k < n else 0, dims[k], field)
            for col, blade in enumerate(blades[k]):
                df = algebra.d_form(Form(n, k, {blade: field.one()}))
                for b, c in df.terms.items():
                    m[cod[b]][col] = c
            mats.append(m)
        labels = [[_blade_label(algebra, b) for b in blades[k]] for k in range(n + 1)]

        def wedge_product(k1, v1, k2, v2):
            f1 = cls._vector_to_form_static(n, blades[k1], k1, v1)
            f2 = cls._vector_to_form_static(n, blades[k2], k2, v2)
            w = f1.wedge(f2)
            deg = k1 + k2
            if deg > n:
                return []
            zero = field.zero()
            return [w.terms.get(b, zero) for b in blades[deg]]

        cc = cls(dims, mats, field, labels=labels, product=wedge_product,
                 blades=blades, ambient_dim=n)
        cc.algebra = algebra
        return cc

    @staticmethod
    def _vector_to_form_static(dim, blade_list, degree, vec) -> Form:
        return Form(dim, degree, {b: c for b, c in zip(blade_list, vec) if c != 0})

    # -- conversions (complexes with a blade identification) ----------------

    def form_to_vector(self, form: Form) -> list[Scalar]:
        if self.blades is None:
            raise ValueError("complex carries no blade identification")
        k = form.degree
        zero = self.field.zero()
        return [form.terms.get(b, zero) for b in self.blades[k]]

    def vector_to_form(self, k: int, vec: list[Scalar]):
        if self.blades is None or self.ambient_dim is None:
            raise ValueError("complex carries no blade identification")
        return Form(self.ambient_dim, k,
                    {b: c for b, c in zip(self.blades[k], vec) if c != 0})

    # -- ranks ---------------------------------------------------------------

    def ranks(self) -> list[int]:
        if self._ranks is None:
            self._ranks = [linalg.bareiss_rank(m, self.field) for m in self.d]
        return self._ranks

    def differential_vector(self, k: int, vec: list[Scalar]) -> list[Scalar]:
        if k > self.top or k >= len(self.d):
            return []
        return linalg.mat_vec(self.d[k], vec, self.field)

    def space(self, k: int) -> CohomologySpace:
        if k not in self._spaces:
            self._spaces[k] = cohomology_basis(self, k)
        return self._spaces[k]


def _blade_label(algebra, blade) -> str:
    if not blade:
        return "1"
    return "^".join(algebra.basis_names[i] + "*" for i in blade)


def betti(complex_: CochainComplex) -> list[int]:
    """b_k = dim ker d_k - rank d_{k-1}; ranks by fraction-free elimination."""
    ranks = complex_.ranks()
    out = []
    for k in range(complex_.top + 1):
        rk = ranks[k] if k < len(ranks) else 0
        rprev = ranks[k - 1] if k > 0 else 0
        out.append(complex_.dims[k] - rk - rprev)
    return out


@dataclass
class CohomologySpace:
    complex: CochainComplex
    degree: int
    betti: int
    representatives: list[list[Scalar]]
    coboundaries: list[list[Scalar]]
    _solver_cols: list[list[Scalar]] = dc_field(default_factory=list, repr=False)

    def representative_forms(self) -> list[Form]:
        return [self.complex.vector_to_form(self.degree, v)
                for v in self.representatives]


@dataclass(frozen=True)
class CohClass:
    degree: int
    coords: tuple[Scalar, ...]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


def cohomology_basis(complex_: CochainComplex, k: int) -> CohomologySpace:
    """Closed representatives spanning degree-k cohomology, deterministically.

    Kernel vectors come from the canonical reduced-echelon construction in
    basis order; those independent modulo the coboundaries are kept.
    """
    field = complex_.field
    if not (0 <= k <= complex_.top):
        raise ValueError(f"degree {k} outside the complex")
    dk = complex_.d[k] if k < len(complex_.d) else []
    kernel = linalg.nullspace(dk, complex_.dims[k], field)
    if k > 0:
        prev = complex_.d[k - 1]
        image_cols = [[prev[i][j] for i in range(len(prev))]
                      for j in range(complex_.dims[k - 1])]
        image = linalg.row_space(image_cols, field)
    else:
        image = []
    reps: list[list[Scalar]] = []
    span = [list(r) for r in image]
    for v in kernel:
        if linalg.bareiss_rank(span + [v], field) > len(span):
            reps.append(v)
            span.append(v)
    expected = complex_.dims[k] - (complex_.ranks()[k] if k < len(complex_.d) else 0) \
        - (complex_.ranks()[k - 1] if k > 0 else 0)
    assert len(reps) == expected, "representative count disagrees with Betti rank"
    return CohomologySpace(complex_, k, len(reps), reps, [list(r) for r in image])


def class_of(space: CohomologySpace, element) -> CohClass:
    """Coordinates of a closed element in the representative basis.

    Accepts a Form (for blade-identified complexes) or a raw coordinate
    vector.  Raises NotClosedError with d(element) as witness otherwise.
    """
    complex_ = space.complex
    field = complex_.field
    if isinstance(element, Form):
        vec = complex_.form_to_vector(element)
    else:
        vec = list(element)
    dv = complex_.differential_vector(space.degree, vec)
    if any(x != field.zero() for x in dv):
        witness = (complex_.vector_to_form(space.degree + 1, dv)
                   if complex_.blades is not None else dv)
        raise NotClosedError(witness)
    cols = [list(r) for r in space.representatives] + [list(r) for r in space.coboundaries]
    coords = linalg.solve_columns(cols, vec, field)
    if coords is None:
        raise AssertionError("closed element outside kernel span; complex corrupt")
    return CohClass(space.degree, tuple(coords[:space.betti]))


def cup(space_j: CohomologySpace, space_k: CohomologySpace,
        x: CohClass, y: CohClass) -> CohClass:
    """Class of the product of representatives (independent of the choice)."""
    complex_ = space_j.complex
    if complex_ is not space_k.complex:
        raise ValueError("cup product of classes from different complexes")
    if complex_.product is None:
        raise ValueError("complex carries no graded product")
    field = complex_.field
    zero = field.zero()
    vx = [zero] * complex_.dims[space_j.degree]
    for c, rep in zip(x.coords, space_j.representatives):
        vx = [a + c * b for a, b in zip(vx, rep)]
    vy = [zero] * complex_.dims[space_k.degree]
    for c, rep in zip(y.coords, space_k.representatives):
        vy = [a + c * b for a, b in zip(vy, rep)]
    prod = complex_.product(space_j.degree, vx, space_k.degree, vy)
    deg = space_j.degree + space_k.degree
    if deg > complex_.top:
        return CohClass(deg, ())
    return class_of(complex_.space(deg), prod)


@dataclass
class DualityReport:
    betti: list[int]
    euler_characteristic: int
    is_unimodular: bool
    poincare_pairs: list[tuple[int, int, bool]]
    poincare_holds: bool


def duality_report(algebra) -> DualityReport:
    """Euler characteristic and the b_k = b_{n-k} flags for an algebra."""
    from .liealg import classify
    bs = betti(algebra.cochain_complex)
    n = algebra.dim
    chi = sum(b if k % 2 == 0 else -b for k, b in enumerate(bs))
    unimod = classify(algebra).is_unimodular
    pairs = [(k, n - k, bs[k] == bs[n - k]) for k in range(n + 1)]
    return DualityReport(
        betti=bs,
        euler_characteristic=chi,
        is_unimodular=unimod,
        poincare_pairs=pairs,
        poincare_holds=all(ok for _, _, ok in pairs),
    )
