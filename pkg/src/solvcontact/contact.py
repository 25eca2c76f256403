"""Contact structure checks at the invariant-forms level.

Covers: the contact condition eta ^ (d eta)^n != 0 with exact Reeb solve,
the contact-metric structure equations, the Killing / centrality test for
the Reeb element, the hard Lefschetz relation in each degree, and the
symplectic quotient identity pullback(omega) = d eta.

Sign convention fixed here: d eta(X, Y) = g(phi X, Y).  This is the unique
choice compatible with the structure equations of the verified family; see
docs/conventions.md.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cohomology import class_of
from .exterior import Form, Vector, all_blades, evaluate, interior, wedge
from .liealg import AlgebraHom, LieAlgebra, pullback
from .scalars import (Field, FunctionField, QuadElement, QuadraticField,
                      RationalFunction, Scalar, quad_sign, render, specialize)

HATTORI_NOTE = ("computed on invariant forms; equals the quotient-manifold "
                "answer for lattices in completely solvable groups")


class EvenDimensionError(ValueError):
    """Contact structures need an odd-dimensional algebra."""


class NotContactError(ValueError):
    """eta ^ (d eta)^n vanishes; carries the vanishing top form."""

    def __init__(self, top_form: Form):
        self.top_form = top_form
        super().__init__("the 1-form is not contact: eta ^ (d eta)^n = 0")


class ImageNotClosedError(ValueError):
    """A Lefschetz image fails to be closed; carries the witness form."""

    def __init__(self, witness: Form):
        self.witness = witness
        super().__init__("lefschetz image is not closed")


class OmegaNotClosedError(ValueError):
    pass


class OmegaDegenerateError(ValueError):
    pass


@dataclass
class ContactData:
    algebra: LieAlgebra
    eta: Form
    reeb: Vector
    n: int  # dim = 2n + 1

    @property
    def d_eta(self) -> Form:
        return self.algebra.d_form(self.eta)


def is_contact(algebra: LieAlgebra, eta: Form) -> ContactData:
    """Verify eta ^ (d eta)^n != 0 and solve for the Reeb element exactly."""
    if algebra.dim % 2 == 0:
        raise EvenDimensionError(f"dimension {algebra.dim} is even")
    if eta.degree != 1:
        raise ValueError("a contact form has degree 1")
    n = (algebra.dim - 1) // 2
    field = algebra.field
    deta = algebra.d_form(eta)
    top = wedge(eta, deta.wedge_pow(n, field))
    if top.is_zero():
        raise NotContactError(top)
    reeb = _solve_reeb(algebra, eta, deta)
    return ContactData(algebra, eta, reeb, n)


def _solve_reeb(algebra: LieAlgebra, eta: Form, deta: Form) -> Vector:
    """Unique solution of eta(xi) = 1, i_xi d(eta) = 0."""
    field = algebra.field
    dim = algebra.dim
    zero = field.zero()
    rows: list[list[Scalar]] = []
    rhs: list[Scalar] = []
    rows.append([eta.terms.get((j,), zero) for j in range(dim)])
    rhs.append(field.one())
    # i_xi deta = 0: one linear condition per surviving 1-form component
    for b in all_blades(dim, 1):
        row = []
        for j in range(dim):
            contracted = interior(Vector.basis(dim, j, field), deta)
            row.append(contracted.terms.get(b, zero))
        rows.append(row)
        rhs.append(zero)
    sol = linalg.solve(rows, rhs, field)
    if sol is None:
        raise NotContactError(Form.zero(dim, dim))
    assert linalg.bareiss_rank(rows, field) == dim, "Reeb solution is not unique"
    return Vector(tuple(sol))


# ---------------------------------------------------------------------------
# contact metric and K-contact
# ---------------------------------------------------------------------------

@dataclass
class MetricData:
    g: linalg.Matrix    # symmetric, positive-definite
    phi: linalg.Matrix  # columns are the images of basis vectors


@dataclass
class CheckItem:
    name: str
    passed: bool
    witness: str = ""


@dataclass
class ContactMetricReport:
    checks: list[CheckItem]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[CheckItem]:
        return [c for c in self.checks if not c.passed]


def is_contact_metric(algebra: LieAlgebra, cd: ContactData, md: MetricData,
                      sample: Fraction | None = None) -> ContactMetricReport:
    """Structure equations of an almost contact metric structure, exactly.

    phi^2 = -Id + eta (x) xi;  phi(xi) = 0;  g(phi X, phi Y) = g(X, Y) -
    eta(X) eta(Y);  d eta(X, Y) = g(phi X, Y).  Positive-definiteness of g
    is decided by leading principal minors; over a parameter field the sign
    check runs at the supplied sample value (default 1).
    """
    field = algebra.field
    dim = algebra.dim
    zero, one = field.zero(), field.one()
    names = algebra.basis_names
    checks: list[CheckItem] = []

    eta_row = [cd.eta.terms.get((j,), zero) for j in range(dim)]
    xi = list(cd.reeb.coords)

    sym_ok = all(md.g[i][j] == md.g[j][i] for i in range(dim) for j in range(dim))
    checks.append(CheckItem("g symmetric", sym_ok))

    pd_ok, pd_witness = _positive_definite(md.g, field, sample)
    checks.append(CheckItem("g positive definite (leading minors)", pd_ok, pd_witness))

    phi2 = linalg.mat_mul(md.phi, md.phi, field)
    want = [[(one if i == j else zero) * (-1) + xi[i] * eta_row[j]
             for j in range(dim)] for i in range(dim)]
    bad = _first_mismatch(phi2, want, dim)
    checks.append(CheckItem("phi^2 = -Id + eta (x) xi", bad is None,
                            _pair_witness(names, bad)))

    phixi = linalg.mat_vec(md.phi, xi, field)
    checks.append(CheckItem("phi(xi) = 0", all(x == zero for x in phixi),
                            "" if all(x == zero for x in phixi)
                            else f"phi(xi) = {[render(x) for x in phixi]}"))

    gphi = linalg.mat_mul(linalg.mat_mul(linalg.transpose(md.phi), md.g, field),
                          md.phi, field)
    gminus = [[md.g[i][j] - eta_row[i] * eta_row[j] for j in range(dim)]
              for i in range(dim)]
    bad = _first_mismatch(gphi, gminus, dim)
    checks.append(CheckItem("g(phi X, phi Y) = g(X,Y) - eta(X)eta(Y)", bad is None,
                            _pair_witness(names, bad)))

    deta = cd.d_eta
    gphi_left = linalg.mat_mul(linalg.transpose(md.phi), md.g, field)
    bad = None
    for i in range(dim):
        for j in range(dim):
            lhs = evaluate(deta, [algebra.basis_vector(i), algebra.basis_vector(j)])
            if lhs != gphi_left[i][j]:
                bad = (i, j)
                break
        if bad:
            break
    checks.append(CheckItem("d eta(X, Y) = g(phi X, Y)", bad is None,
                            _pair_witness(names, bad)))
    return ContactMetricReport(checks)


def _first_mismatch(a: linalg.Matrix, b: linalg.Matrix, dim: int):
    for i in range(dim):
        for j in range(dim):
            if a[i][j] != b[i][j]:
                return (i, j)
    return None


def _pair_witness(names, bad) -> str:
    if bad is None:
        return ""
    return f"fails at ({names[bad[0]]}, {names[bad[1]]})"


def _positive_definite(g: linalg.Matrix, field: Field,
                       sample: Fraction | None) -> tuple[bool, str]:
    dim = len(g)
    for k in range(1, dim + 1):
        minor = [row[:k] for row in g[:k]]
        d = linalg.det(minor, field)
        s = _scalar_sign(d, sample)
        if s <= 0:
            return False, f"leading {k}x{k} minor has sign {s}"
    return True, ""


def _scalar_sign(x: Scalar, sample: Fraction | None) -> int:
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    if isinstance(x, QuadElement):
        return quad_sign(x)
    if isinstance(x, RationalFunction):
        r = specialize(x, sample if sample is not None else Fraction(1))
        return (r > 0) - (r < 0)
    raise TypeError(f"cannot decide sign of {x!r}")


@dataclass
class KContactReport:
    reeb_is_central: bool
    ad_reeb_skew: bool
    witness: str = ""

    @property
    def is_k_contact(self) -> bool:
        return self.ad_reeb_skew


def is_k_contact(algebra: LieAlgebra, cd: ContactData,
                 md: MetricData) -> KContactReport:
    """For an invariant metric the Reeb element is Killing iff ad_xi is
    skew-adjoint for g; centrality is the sufficient condition reported too."""
    field = algebra.field
    dim = algebra.dim
    zero = field.zero()
    ad = algebra.ad_matrix(cd.reeb)
    central = all(ad[i][j] == zero for i in range(dim) for j in range(dim))
    # skew: g(ad X, Y) + g(X, ad Y) = 0  <=>  ad^T g + g ad = 0
    lhs = linalg.mat_mul(linalg.transpose(ad), md.g, field)
    rhs = linalg.mat_mul(md.g, ad, field)
    witness = ""
    skew = True
    for i in range(dim):
        for j in range(dim):
            if lhs[i][j] + rhs[i][j] != zero:
                skew = False
                witness = (f"witness pair ({algebra.basis_names[i]}, "
                           f"{algebra.basis_names[j]})")
                break
        if not skew:
            break
    return KContactReport(central, skew, witness)


# ---------------------------------------------------------------------------
# hard Lefschetz relation
# ---------------------------------------------------------------------------

@dataclass
class LefschetzReport:
    degree: int
    dim_h_p: int
    dim_h_q: int
    relation_dim: int
    is_total: bool
    is_single_valued: bool
    is_graph_of_iso: bool
    matrix: linalg.Matrix | None
    hypothesis: str = HATTORI_NOTE


def lefschetz_relation(algebra: LieAlgebra, cd: ContactData,
                       p_deg: int) -> LefschetzReport:
    """The relation of class pairs ([b], [eta ^ (d eta)^(n-p) ^ b]).

    b ranges over p-forms with d b = 0, i_xi b = 0, (d eta)^(n-p+1) ^ b = 0.
    Reports whether the relation is total over degree-p cohomology, single
    valued, and the graph of an isomorphism onto degree 2n+1-p.
    """
    n = cd.n
    if not (0 <= p_deg <= n):
        raise ValueError(f"degree must lie in 0..{n}")
    field = algebra.field
    dim = algebra.dim
    zero = field.zero()
    cc = algebra.cochain_complex
    q_deg = 2 * n + 1 - p_deg

    deta = cd.d_eta
    kill_power = deta.wedge_pow(n - p_deg + 1, field)
    image_power = deta.wedge_pow(n - p_deg, field)

    p_blades = all_blades(dim, p_deg)
    contracted_cols = [interior(cd.reeb, Form(dim, p_deg, {b: field.one()}))
                       for b in p_blades]
    killed_cols = [wedge(kill_power, Form(dim, p_deg, {b: field.one()}))
                   for b in p_blades]
    kdeg = p_deg + 2 * (n - p_deg + 1)
    rows: list[list[Scalar]] = []
    # closedness rows
    for r in cc.d[p_deg]:
        rows.append(list(r))
    # horizontality rows: i_xi b = 0
    for target in all_blades(dim, p_deg - 1):
        rows.append([col.terms.get(target, zero) for col in contracted_cols])
    # primitivity rows: (d eta)^(n-p+1) ^ b = 0
    for target in all_blades(dim, kdeg):
        rows.append([col.terms.get(target, zero) for col in killed_cols])

    z_basis = linalg.nullspace(rows, len(p_blades), field)
    space_p = cc.space(p_deg)
    space_q = cc.space(q_deg)

    relation_rows: list[list[Scalar]] = []
    for vec in z_basis:
        beta = cc.vector_to_form(p_deg, vec)
        omega = wedge(wedge(cd.eta, image_power), beta)
        if not algebra.d_form(omega).is_zero():
            raise ImageNotClosedError(beta)
        pc = class_of(space_p, beta)
        qc = class_of(space_q, omega)
        relation_rows.append(list(pc.coords) + list(qc.coords))

    b_p, b_q = space_p.betti, space_q.betti
    relation_dim = linalg.bareiss_rank(relation_rows, field) if relation_rows else 0
    first_block = [r[:b_p] for r in relation_rows]
    first_rank = linalg.bareiss_rank(first_block, field) if relation_rows else 0
    is_total = first_rank == b_p
    is_single_valued = first_rank == relation_dim

    matrix = None
    if is_total and is_single_valued and relation_rows:
        red, pivots = linalg.rref(relation_rows, field)
        # pivots all in the first block when single-valued and total
        cols = [[zero] * b_q for _ in range(b_p)]
        for r, pc_col in enumerate(pivots):
            if pc_col < b_p:
                cols[pc_col] = red[r][b_p:]
        matrix = [[cols[j][i] for j in range(b_p)] for i in range(b_q)]
    elif is_total and is_single_valued:
        matrix = []

    if matrix is not None and b_p == b_q:
        iso = linalg.bareiss_rank(matrix, field) == b_p if matrix else b_p == 0
    else:
        iso = False
    return LefschetzReport(p_deg, b_p, b_q, relation_dim, is_total,
                           is_single_valued, iso, matrix)


# ---------------------------------------------------------------------------
# symplectic quotient identity
# ---------------------------------------------------------------------------

@dataclass
class QuotientCheckReport:
    holds: bool
    difference: Form


def symplectization_quotient_check(algebra: LieAlgebra, hom: AlgebraHom,
                                   omega: Form,
                                   cd: ContactData) -> QuotientCheckReport:
    """True iff pullback(omega) equals d(eta) exactly.

    omega must be a closed nondegenerate 2-form on the homomorphism target.
    """
    target = hom.target
    if omega.degree != 2:
        raise ValueError("omega must have degree 2")
    if not target.d_form(omega).is_zero():
        raise OmegaNotClosedError("omega is not closed on the target")
    if target.dim % 2 != 0:
        raise OmegaDegenerateError("2-forms on odd-dimensional targets are degenerate")
    half = target.dim // 2
    if omega.wedge_pow(half, target.field).is_zero():
        raise OmegaDegenerateError("omega^top vanishes")
    diff = pullback(hom, omega) - algebra.d_form(cd.eta)
    return QuotientCheckReport(diff.is_zero(), diff)
