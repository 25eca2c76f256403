"""Lie algebras from structure constants.

Validates the Jacobi identity eagerly, builds the invariant-forms complex
(whose differential acts on dual generators by dw(X, Y) = -w([X, Y])),
classifies structure (nilpotent / solvable / completely solvable via an
explicit flag of ideals / unimodular), and supports linear epimorphisms
with exact pullback of forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import linalg
from .exterior import Form, Vector, all_blades, merge_blades
from .scalars import (Field, FunctionField, QuadraticField, RationalField,
                      Scalar, roots_in_field, specialize)


class JacobiError(ValueError):
    """The Jacobi identity fails; carries the offending triple and residual."""

    def __init__(self, names: tuple[str, str, str], residual: Vector):
        self.names = names
        self.residual = residual
        super().__init__(f"Jacobi identity fails on ({', '.join(names)}); "
                         f"residual {residual.coords}")


class HomomorphismError(ValueError):
    """A linear map fails to preserve brackets; carries the witness pair."""


class LieAlgebra:
    """Finite-dimensional Lie algebra over an exact field.

    Brackets are stored only for i < j (antisymmetry is built in); the
    Jacobi identity is verified exactly at construction, so every instance
    in circulation is a genuine Lie algebra.  Immutable after construction.
    """

    def __init__(self, dim: int, basis_names: list[str],
                 brackets: dict[tuple[int, int], Vector], field: Field,
                 _validate: bool = True):
        if len(basis_names) != dim:
            raise ValueError("basis name count does not match dimension")
        if len(set(basis_names)) != dim:
            raise ValueError("duplicate basis names")
        self.dim = dim
        self.basis_names = tuple(basis_names)
        self.field = field
        clean: dict[tuple[int, int], Vector] = {}
        for (i, j), v in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket indices ({i},{j}) must satisfy 0 <= i < j < dim")
            if v.dim != dim:
                raise ValueError("bracket value has wrong dimension")
            v = Vector(tuple(field.coerce(c) for c in v.coords))
            if not v.is_zero():
                clean[(i, j)] = v
        self.brackets = clean
        if _validate:
            self._check_jacobi()

    # -- basic structure ----------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Vector:
        if i == j:
            return Vector.zero(self.dim, self.field)
        if i < j:
            return self.brackets.get((i, j), Vector.zero(self.dim, self.field))
        return -self.brackets.get((j, i), Vector.zero(self.dim, self.field))

    def bracket(self, x: Vector, y: Vector) -> Vector:
        out = Vector.zero(self.dim, self.field)
        for i, xi in enumerate(x.coords):
            if xi == 0:
                continue
            for j, yj in enumerate(y.coords):
                if yj == 0 or i == j:
                    continue
                out = out + self.bracket_basis(i, j).scale(xi * yj)
        return out

    def _check_jacobi(self):
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    xi, xj, xk = (Vector.basis(self.dim, t, self.field)
                                  for t in (i, j, k))
                    res = (self.bracket(self.bracket(xi, xj), xk)
                           + self.bracket(self.bracket(xj, xk), xi)
                           + self.bracket(self.bracket(xk, xi), xj))
                    if not res.is_zero():
                        names = (self.basis_names[i], self.basis_names[j],
                                 self.basis_names[k])
                        raise JacobiError(names, res)

    def ad_matrix(self, v: Vector) -> linalg.Matrix:
        """Matrix of ad_v = [v, .] in the chosen basis (columns are images)."""
        cols = [self.bracket(v, Vector.basis(self.dim, j, self.field))
                for j in range(self.dim)]
        return [[cols[j].coords[i] for j in range(self.dim)]
                for i in range(self.dim)]

    # -- invariant forms -----------------------------------------------------

    def covector(self, i: int) -> Form:
        return Form.covector(self.dim, i, self.field.one())

    def basis_vector(self, i: int) -> Vector:
        return Vector.basis(self.dim, i, self.field)

    @cached_property
    def _dual_generator_d(self) -> list[Form]:
        """d of each dual generator: dw_k = -sum_{i<j} c^k_{ij} w_i ^ w_j."""
        out = []
        for k in range(self.dim):
            terms = {}
            for (i, j), v in self.brackets.items():
                c = v.coords[k]
                if c != 0:
                    terms[(i, j)] = -c
            out.append(Form(self.dim, 2, terms))
        return out

    def d_form(self, form: Form) -> Form:
        """Invariant-forms differential, extended as an antiderivation."""
        out = Form.zero(self.dim, form.degree + 1)
        gen_d = self._dual_generator_d
        for blade, c in form.terms.items():
            for pos, idx in enumerate(blade):
                rest = blade[:pos] + blade[pos + 1:]
                for b2, c2 in gen_d[idx].terms.items():
                    merged = merge_blades(b2, rest)
                    if merged is None:
                        continue
                    sign, nb = merged
                    coeff = c * c2
                    if (pos % 2) ^ (sign < 0):
                        coeff = -coeff
                    out = out + Form(self.dim, form.degree + 1, {nb: coeff})
        return out

    @cached_property
    def cochain_complex(self):
        from .cohomology import CochainComplex  # local import avoids a cycle
        return CochainComplex.from_algebra(self)

    def specialize(self, r: Fraction) -> LieAlgebra:
        """Evaluate a generic-parameter algebra at a concrete rational p."""
        if not isinstance(self.field, FunctionField):
            raise ValueError("only parameterized algebras can be specialized")
        new = {}
        for key, v in self.brackets.items():
            new[key] = Vector(tuple(specialize(c, r) for c in v.coords))
        return LieAlgebra(self.dim, list(self.basis_names), new, RationalField())

    def __repr__(self):
        return (f"LieAlgebra(dim={self.dim}, basis={list(self.basis_names)}, "
                f"field={self.field.describe()})")


def build_algebra(dim: int, names: list[str],
                  bracket_list: list[tuple[int, int, Vector]],
                  field: Field) -> LieAlgebra:
    """Construct and validate an algebra from a list of (i, j, [Xi, Xj])."""
    brackets: dict[tuple[int, int], Vector] = {}
    for i, j, v in bracket_list:
        if i == j:
            raise ValueError(f"diagonal bracket [{names[i]},{names[i]}] must be absent")
        key, val = ((i, j), v) if i < j else ((j, i), -v)
        if key in brackets:
            raise ValueError(f"duplicate bracket for ({names[key[0]]},{names[key[1]]})")
        brackets[key] = val
    return LieAlgebra(dim, names, brackets, field)


def ce_differential(algebra: LieAlgebra):
    """The invariant-forms cochain complex of the algebra (d^2 = 0 verified)."""
    return algebra.cochain_complex


# ---------------------------------------------------------------------------
# structural classification
# ---------------------------------------------------------------------------

@dataclass
class StructureReport:
    is_nilpotent: bool
    is_solvable: bool
    is_completely_solvable: bool | str  # True, False, or "unknown"
    is_unimodular: bool
    lower_central_dims: list[int]
    derived_series_dims: list[int]
    flag_of_ideals: list[list[Vector]] | None


def _bracket_span(algebra: LieAlgebra, rows_a: linalg.Matrix,
                  rows_b: linalg.Matrix) -> linalg.Matrix:
    vecs = []
    for ra in rows_a:
        for rb in rows_b:
            v = algebra.bracket(Vector(tuple(ra)), Vector(tuple(rb)))
            if not v.is_zero():
                vecs.append(list(v.coords))
    return linalg.row_space(vecs, algebra.field) if vecs else []


def classify(algebra: LieAlgebra) -> StructureReport:
    field = algebra.field
    full = linalg.identity(algebra.dim, field)

    lower = [full]
    while True:
        nxt = _bracket_span(algebra, full, lower[-1])
        if len(nxt) == len(lower[-1]):
            break
        lower.append(nxt)
        if not nxt:
            break
    nilpotent = not lower[-1]

    derived = [full]
    while True:
        nxt = _bracket_span(algebra, derived[-1], derived[-1])
        if len(nxt) == len(derived[-1]):
            break
        derived.append(nxt)
        if not nxt:
            break
    solvable = not derived[-1]

    unimodular = True
    for i in range(algebra.dim):
        ad = algebra.ad_matrix(algebra.basis_vector(i))
        tr = field.zero()
        for k in range(algebra.dim):
            tr = tr + ad[k][k]
        if tr != field.zero():
            unimodular = False
            break

    if not solvable:
        completely: bool | str = False
        flag = None
    else:
        flag = _find_flag(algebra, derived[1] if len(derived) > 1 else [])
        completely = True if flag is not None else "unknown"

    return StructureReport(
        is_nilpotent=nilpotent,
        is_solvable=solvable,
        is_completely_solvable=completely,
        is_unimodular=unimodular,
        lower_central_dims=[len(s) for s in lower],
        derived_series_dims=[len(s) for s in derived],
        flag_of_ideals=flag,
    )


def _find_flag(algebra: LieAlgebra,
               derived_rows: linalg.Matrix) -> list[list[Vector]] | None:
    """Full flag of ideals with one-dimensional steps, or None.

    Each step extends the current ideal by a common eigenvector of the
    induced adjoint action on the quotient; by Lie-type weight vanishing a
    common eigenvector is killed by the derived algebra, and the remaining
    induced actions commute there, so eigenvalue search proceeds matrix by
    matrix.  Eigenvalues are only searched inside the coefficient field.
    """
    field = algebra.field
    dim = algebra.dim
    ideal: linalg.Matrix = []
    flag: list[list[Vector]] = []
    for _ in range(dim):
        new_vec = _quotient_common_eigenvector(algebra, ideal, derived_rows)
        if new_vec is None:
            return None
        ideal = linalg.row_space(ideal + [new_vec], field)
        flag.append([Vector(tuple(r)) for r in ideal])
    return flag


def _quotient_common_eigenvector(algebra: LieAlgebra, ideal_rows: linalg.Matrix,
                                 derived_rows: linalg.Matrix) -> list[Scalar] | None:
    field = algebra.field
    dim = algebra.dim
    red, pivots = linalg.rref(ideal_rows, field) if ideal_rows else ([], [])
    comp = [c for c in range(dim) if c not in pivots]
    qdim = len(comp)
    if qdim == 0:
        return None

    def reduce_mod_ideal(v: list[Scalar]) -> list[Scalar]:
        v = list(v)
        for r, pc in enumerate(pivots):
            f = v[pc]
            if f != field.zero():
                v = [a - f * b for a, b in zip(v, red[r])]
        return [v[c] for c in comp]

    def induced_matrix(x: Vector) -> linalg.Matrix:
        cols = []
        for c in comp:
            img = algebra.bracket(x, algebra.basis_vector(c))
            cols.append(reduce_mod_ideal(list(img.coords)))
        return [[cols[j][i] for j in range(qdim)] for i in range(qdim)]

    # common kernel of the derived algebra's induced action
    space = linalg.identity(qdim, field)
    for row in derived_rows:
        m = induced_matrix(Vector(tuple(row)))
        stacked = [[sum((m[i][k] * b[k] for k in range(qdim)), field.zero())
                    for i in range(qdim)] for b in space]
        coeffs = linalg.nullspace(linalg.transpose(stacked), len(space), field)
        space = linalg.row_space(
            [[sum((c[r] * space[r][k] for r in range(len(space))), field.zero())
              for k in range(qdim)] for c in coeffs], field)
        if not space:
            return None

    mats = [induced_matrix(algebra.basis_vector(i)) for i in range(dim)]
    sub = _common_eigenvector(mats, space, field)
    if sub is None:
        return None
    out = [field.zero()] * dim
    for k, c in enumerate(comp):
        out[c] = sub[k]
    return out


def _restrict(m: linalg.Matrix, basis: linalg.Matrix, field: Field) -> linalg.Matrix | None:
    """Matrix of m on span(basis) in that basis; None if not invariant."""
    k = len(basis)
    cols = []
    for b in basis:
        img = linalg.mat_vec(m, b, field)
        coords = linalg.solve_columns([list(r) for r in basis], img, field)
        if coords is None:
            return None
        cols.append(coords)
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def _charpoly(m: linalg.Matrix, field: Field) -> list[Scalar]:
    """Characteristic polynomial coefficients (low to high), Faddeev-LeVerrier."""
    n = len(m)
    cs = [field.one()]  # leading coefficient of lambda^n
    mk = [row[:] for row in m]
    coeffs_rev = [field.one()]
    for k in range(1, n + 1):
        tr = field.zero()
        for i in range(n):
            tr = tr + mk[i][i]
        ck = tr / k
        coeffs_rev.append(field.zero() - ck)
        if k < n:
            for i in range(n):
                mk[i][i] = mk[i][i] - ck
            mk = linalg.mat_mul(m, mk, field)
    return list(reversed(coeffs_rev))


def _common_eigenvector(mats: list[linalg.Matrix], space: linalg.Matrix,
                        field: Field) -> list[Scalar] | None:
    """First common eigenvector (with in-field eigenvalues) inside span(space)."""
    if not space:
        return None
    for pos, m in enumerate(mats):
        restricted = _restrict(m, space, field)
        if restricted is None:
            return None
        # skip matrices already scalar on the whole space
        if all(restricted[i][j] == (restricted[0][0] if i == j else field.zero())
               for i in range(len(space)) for j in range(len(space))):
            continue
        roots = roots_in_field(_charpoly(restricted, field), field)
        for lam in roots:
            shifted = [[restricted[i][j] - (lam if i == j else field.zero())
                        for j in range(len(space))] for i in range(len(space))]
            coeffs = linalg.nullspace(shifted, len(space), field)
            if not coeffs:
                continue
            sub = linalg.row_space(
                [[sum((c[r] * space[r][k] for r in range(len(space))), field.zero())
                  for k in range(len(space[0]))] for c in coeffs], field)
            found = _common_eigenvector(mats[pos + 1:], sub, field)
            if found is not None:
                return found
        return None
    return list(space[0])


# ---------------------------------------------------------------------------
# homomorphisms and pullback
# ---------------------------------------------------------------------------

class AlgebraHom:
    """Bracket-preserving linear map, given by a target_dim x source_dim matrix."""

    def __init__(self, source: LieAlgebra, target: LieAlgebra,
                 matrix: linalg.Matrix):
        if len(matrix) != target.dim or any(len(r) != source.dim for r in matrix):
            raise ValueError("homomorphism matrix has wrong shape")
        if source.field != target.field:
            raise ValueError("source and target must share one coefficient field")
        self.source = source
        self.target = target
        self.matrix = [row[:] for row in matrix]
        self._check()

    def apply(self, v: Vector) -> Vector:
        return Vector(tuple(linalg.mat_vec(self.matrix, list(v.coords),
                                           self.target.field)))

    def _check(self):
        for i in range(self.source.dim):
            for j in range(i + 1, self.source.dim):
                lhs = self.apply(self.source.bracket_basis(i, j))
                rhs = self.target.bracket(
                    self.apply(self.source.basis_vector(i)),
                    self.apply(self.source.basis_vector(j)))
                if lhs.coords != rhs.coords:
                    raise HomomorphismError(
                        f"bracket not preserved on ({self.source.basis_names[i]}, "
                        f"{self.source.basis_names[j]})")


def pullback(hom: AlgebraHom, form: Form) -> Form:
    """(h* a)(v1..vk) = a(h v1, .., h vk), computed exactly on source blades."""
    if form.dim != hom.target.dim:
        raise ValueError("form does not live on the homomorphism target")
    src = hom.source
    if form.degree == 0:
        value = form.terms.get((), src.field.zero())
        return Form.scalar(src.dim, value)
    from .exterior import evaluate
    images = [hom.apply(src.basis_vector(i)) for i in range(src.dim)]
    terms = {}
    for blade in all_blades(src.dim, form.degree):
        val = evaluate(form, [images[i] for i in blade])
        if val != 0:
            terms[blade] = val
    return Form(src.dim, form.degree, terms)
