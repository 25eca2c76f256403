"""Basic cohomology, the two-step extension model, and morphism witnesses.

The basic subcomplex collects the forms killed by both i_xi and i_xi d.
Its cohomology carries a ring structure; when that ring matches the
exterior-times-truncated pattern on two degree-1 classes and one degree-2
class, the classes are named (u, v, w) by requiring [d eta]_B = -u v - w
exactly.  The model is the elementary extension by a degree-1 generator y
with d y = [d eta]_B, and morphism witnesses from a free source are checked
for well-definedness, the chain-map identity, and quasi-isomorphism.

Differential sign convention: d(x y) = (d x) y + (-1)^deg(x) x (d y).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import linalg
from .cohomology import CochainComplex, CohClass, CohomologySpace, class_of, \
    cohomology_basis, cup
from .contact import ContactData
from .exterior import Form, all_blades, form_to_str, interior, wedge
from .liealg import LieAlgebra
from .scalars import Field, Scalar


class CDGAError(ValueError):
    """A CDGA construction or morphism check failed structurally."""


# ---------------------------------------------------------------------------
# finite-dimensional CDGAs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CDGAElement:
    algebra: "CDGA"
    degree: int
    coords: tuple[Scalar, ...]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "CDGAElement") -> "CDGAElement":
        if other.algebra is not self.algebra or other.degree != self.degree:
            raise CDGAError("can only add elements of one algebra and degree")
        return CDGAElement(self.algebra, self.degree,
                           tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "CDGAElement") -> "CDGAElement":
        return self + (-other)

    def __neg__(self) -> "CDGAElement":
        return CDGAElement(self.algebra, self.degree,
                           tuple(-c for c in self.coords))

    def scale(self, c: Scalar) -> "CDGAElement":
        return CDGAElement(self.algebra, self.degree,
                           tuple(c * x for x in self.coords))

    def __mul__(self, other: "CDGAElement") -> "CDGAElement":
        return self.algebra.multiply(self, other)

    def d(self) -> "CDGAElement":
        return self.algebra.differential(self)

    def __str__(self):
        return self.algebra.render_element(self)


class CDGA:
    """Graded-commutative differential algebra on an explicit finite basis.

    ``names[k]`` lists the degree-k basis; ``mult`` maps basis index pairs to
    coordinate tuples; ``d[k]`` is the degree-k differential matrix.  The
    constructor verifies d^2 = 0, graded commutativity and the Leibniz rule
    on every basis pair, so instances are honest CDGAs by construction.

    ``generators``/``monomials`` record a monomial structure (every basis
    element is an ordered product of generators); morphisms need it on
    their source.
    """

    def __init__(self, field: Field, names: list[list[str]],
                 mult: dict[tuple[int, int, int, int], tuple[Scalar, ...]],
                 d: list[linalg.Matrix],
                 generators: list[tuple[str, int, int]] | None = None,
                 monomials: list[list[tuple[int, ...]]] | None = None,
                 check: bool = True):
        self.field = field
        self.names = [list(ns) for ns in names]
        self.dims = [len(ns) for ns in names]
        if not self.dims or self.dims[0] < 1 or self.names[0][0] != "1":
            raise CDGAError("degree 0 must start with the unit element '1'")
        self.mult = mult
        self.d = d
        self.generators = generators
        self.monomials = monomials
        self._complex: CochainComplex | None = None
        if check:
            self._validate()

    # -- element helpers -----------------------------------------------------

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def zero(self, degree: int) -> CDGAElement:
        n = self.dims[degree] if 0 <= degree <= self.top else 0
        return CDGAElement(self, degree, (self.field.zero(),) * n)

    def unit(self) -> CDGAElement:
        return self.basis_element(0, 0)

    def basis_element(self, degree: int, index: int) -> CDGAElement:
        z, o = self.field.zero(), self.field.one()
        return CDGAElement(self, degree,
                           tuple(o if i == index else z
                                 for i in range(self.dims[degree])))

    def element_by_name(self, name: str) -> CDGAElement:
        for k, ns in enumerate(self.names):
            if name in ns:
                return self.basis_element(k, ns.index(name))
        raise KeyError(f"no basis element named {name!r}")

    def multiply(self, a: CDGAElement, b: CDGAElement) -> CDGAElement:
        deg = a.degree + b.degree
        out = self.zero(deg)
        if deg > self.top:
            return out
        coords = list(out.coords)
        for i, ca in enumerate(a.coords):
            if ca == 0:
                continue
            for j, cb in enumerate(b.coords):
                if cb == 0:
                    continue
                prod = self.mult.get((a.degree, i, b.degree, j))
                if prod is None:
                    continue
                c = ca * cb
                for t, x in enumerate(prod):
                    if x != 0:
                        coords[t] = coords[t] + c * x
        return CDGAElement(self, deg, tuple(coords))

    def differential(self, a: CDGAElement) -> CDGAElement:
        if a.degree >= self.top:
            return self.zero(a.degree + 1)
        vec = linalg.mat_vec(self.d[a.degree], list(a.coords), self.field)
        return CDGAElement(self, a.degree + 1, tuple(vec))

    def render_element(self, a: CDGAElement) -> str:
        from .scalars import render
        parts = []
        for i, c in enumerate(a.coords):
            if c == 0:
                continue
            name = self.names[a.degree][i]
            cs = render(c)
            if cs == "1":
                piece, neg = name, False
            elif cs == "-1":
                piece, neg = name, True
            else:
                neg = cs.startswith("-")
                body = cs[1:] if neg else cs
                piece = f"{body} {name}"
            if not parts:
                parts.append(f"-{piece}" if neg else piece)
            else:
                parts.append(f" - {piece}" if neg else f" + {piece}")
        return "".join(parts) if parts else "0"

    # -- validation ----------------------------------------------------------

    def _basis_iter(self):
        for k, n in enumerate(self.dims):
            for i in range(n):
                yield k, i

    def _validate(self):
        self.cochain_complex()  # raises if d^2 != 0
        for k1, i1 in self._basis_iter():
            x = self.basis_element(k1, i1)
            u = self.multiply(self.unit(), x)
            if u.coords != x.coords:
                raise CDGAError(f"unit fails on {self.names[k1][i1]}")
            for k2, i2 in self._basis_iter():
                y = self.basis_element(k2, i2)
                xy = self.multiply(x, y)
                yx = self.multiply(y, x)
                sign = -1 if (k1 % 2 and k2 % 2) else 1
                expected = yx.scale(self.field.coerce(sign))
                if xy.coords != expected.coords:
                    raise CDGAError(
                        f"graded commutativity fails on "
                        f"({self.names[k1][i1]}, {self.names[k2][i2]})")
                lhs = self.differential(xy)
                rhs = self.multiply(self.differential(x), y)
                term = self.multiply(x, self.differential(y))
                if k1 % 2:
                    term = -term
                rhs = rhs + term
                if lhs.coords != rhs.coords:
                    raise CDGAError(
                        f"Leibniz rule fails on "
                        f"({self.names[k1][i1]}, {self.names[k2][i2]})")

    # -- cohomology ----------------------------------------------------------

    def cochain_complex(self) -> CochainComplex:
        if self._complex is None:
            def product(kk1, v1, kk2, v2):
                a = CDGAElement(self, kk1, tuple(v1))
                b = CDGAElement(self, kk2, tuple(v2))
                return list(self.multiply(a, b).coords)
            self._complex = CochainComplex(self.dims, self.d, self.field,
                                           labels=self.names, product=product)
        return self._complex


def cdga_cohomology(algebra: CDGA) -> tuple[list[int], list[CohomologySpace]]:
    """Betti numbers and representative spaces of a finite CDGA."""
    cc = algebra.cochain_complex()
    from .cohomology import betti as _betti
    return _betti(cc), [cc.space(k) for k in range(cc.top + 1)]


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def free_odd_cdga(gens: list[tuple[str, int]], field: Field) -> CDGA:
    """Free graded-commutative algebra on odd-degree generators, zero d.

    Finite because odd generators square to zero; even-degree generators
    would make the algebra infinite-dimensional and are rejected.
    """
    for name, deg in gens:
        if deg % 2 == 0:
            raise CDGAError(f"generator {name!r} has even degree {deg}; "
                            "the free algebra would be infinite-dimensional")
    g = len(gens)
    subsets: list[tuple[int, ...]] = [()]
    for i in range(g):
        subsets = subsets + [s + (i,) for s in subsets]
    degree_of = lambda s: sum(gens[i][1] for i in s)
    top = degree_of(tuple(range(g)))
    per_degree: list[list[tuple[int, ...]]] = [[] for _ in range(top + 1)]
    for s in sorted(subsets, key=lambda s: (degree_of(s), s)):
        per_degree[degree_of(s)].append(s)
    names = [["^".join(gens[i][0] for i in s) if s else "1" for s in ss]
             for ss in per_degree]
    index = {s: (degree_of(s), per_degree[degree_of(s)].index(s)) for s in subsets}

    mult: dict[tuple[int, int, int, int], tuple[Scalar, ...]] = {}
    zero, one = field.zero(), field.one()
    for s1 in subsets:
        for s2 in subsets:
            k1, i1 = index[s1]
            k2, i2 = index[s2]
            if set(s1) & set(s2):
                continue  # squares of odd generators vanish
            sign = 1
            for a in s1:  # count graded transpositions moving s2 past s1
                for b in s2:
                    if b < a and (gens[a][1] % 2) and (gens[b][1] % 2):
                        sign = -sign
            merged = tuple(sorted(s1 + s2))
            km, im = index[merged]
            coords = [zero] * len(per_degree[km])
            coords[im] = one if sign > 0 else -one
            mult[(k1, i1, k2, i2)] = tuple(coords)

    dims = [len(ns) for ns in names]
    d = [linalg.zeros(dims[k + 1] if k < top else 0, dims[k], field)
         for k in range(top + 1)]
    generators = [(gens[i][0], gens[i][1],
                   per_degree[gens[i][1]].index((i,))) for i in range(g)]
    monomials = per_degree
    return CDGA(field, names, mult, d, generators=generators,
                monomials=monomials)


def ce_cdga(algebra: LieAlgebra) -> CDGA:
    """The invariant-forms complex of a Lie algebra, packaged as a CDGA."""
    cc = algebra.cochain_complex
    field = algebra.field
    n = algebra.dim
    blades = cc.blades
    names = cc.labels
    mult: dict[tuple[int, int, int, int], tuple[Scalar, ...]] = {}
    for k1 in range(n + 1):
        for i1, b1 in enumerate(blades[k1]):
            f1 = Form(n, k1, {b1: field.one()})
            for k2 in range(n + 1 - k1):
                for i2, b2 in enumerate(blades[k2]):
                    w = wedge(f1, Form(n, k2, {b2: field.one()}))
                    if w.is_zero():
                        continue
                    deg = k1 + k2
                    coords = [field.zero()] * len(blades[deg])
                    for b, c in w.terms.items():
                        coords[blades[deg].index(b)] = c
                    mult[(k1, i1, k2, i2)] = tuple(coords)
    generators = [(names[1][i], 1, i) for i in range(n)]
    monomials = [list(blades[k]) for k in range(n + 1)]
    return CDGA(field, names, mult, cc.d, generators=generators,
                monomials=monomials)


# ---------------------------------------------------------------------------
# basic subcomplex and its cohomology ring
# ---------------------------------------------------------------------------

@dataclass
class BasicComplex:
    algebra: LieAlgebra
    contact: ContactData
    bases: list[list[Form]]
    complex: CochainComplex

    def to_coords(self, k: int, form: Form) -> list[Scalar]:
        field = self.algebra.field
        cols = [self.algebra.cochain_complex.form_to_vector(f) for f in self.bases[k]]
        target = self.algebra.cochain_complex.form_to_vector(form)
        coords = linalg.solve_columns(cols, target, field)
        if coords is None:
            raise ValueError("form does not lie in the basic subcomplex")
        return coords

    def to_form(self, k: int, coords: list[Scalar]) -> Form:
        out = Form.zero(self.algebra.dim, k)
        for c, f in zip(coords, self.bases[k]):
            if c != 0:
                out = out + f.scale(c)
        return out


def basic_complex(algebra: LieAlgebra, cd: ContactData) -> BasicComplex:
    """Maximal subcomplex annihilated by i_xi and i_xi d."""
    field = algebra.field
    dim = algebra.dim
    zero = field.zero()
    cc = algebra.cochain_complex
    bases: list[list[Form]] = []
    for k in range(dim + 1):
        kb = all_blades(dim, k)
        cols_int = [interior(cd.reeb, Form(dim, k, {b: field.one()})) for b in kb]
        cols_intd = [interior(cd.reeb, algebra.d_form(Form(dim, k, {b: field.one()})))
                     for b in kb]
        rows: list[list[Scalar]] = []
        for target in all_blades(dim, k - 1):
            rows.append([c.terms.get(target, zero) for c in cols_int])
        for target in all_blades(dim, k):
            rows.append([c.terms.get(target, zero) for c in cols_intd])
        kernel = linalg.nullspace(rows, len(kb), field)
        bases.append([Form(dim, k, {b: c for b, c in zip(kb, vec) if c != 0})
                      for vec in kernel])

    dims = [len(bs) for bs in bases]
    mats: list[linalg.Matrix] = []
    for k in range(dim + 1):
        m = linalg.zeros(dims[k + 1] if k < dim else 0, dims[k], field)
        for j, f in enumerate(bases[k]):
            df = algebra.d_form(f)
            if df.is_zero():
                continue
            cols = [cc.form_to_vector(bf) for bf in bases[k + 1]]
            coords = linalg.solve_columns(cols, cc.form_to_vector(df), field)
            assert coords is not None, "basic subcomplex is not closed under d"
            for i, c in enumerate(coords):
                m[i][j] = c
        mats.append(m)

    labels = [[form_to_str(f, algebra.basis_names) for f in bs] for bs in bases]
    bc = BasicComplex(algebra, cd, bases, None)  # complex attached below

    def product(k1, v1, k2, v2):
        if k1 + k2 > dim:
            return []
        w = wedge(bc.to_form(k1, list(v1)), bc.to_form(k2, list(v2)))
        return bc.to_coords(k1 + k2, w)

    bc.complex = CochainComplex(dims, mats, field, labels=labels, product=product)
    return bc


@dataclass
class RingEntry:
    left: tuple[int, int]   # (degree, class index)
    right: tuple[int, int]
    product: CohClass


@dataclass
class Identification:
    u: CohClass
    v: CohClass
    w: CohClass
    relations: list[str]


@dataclass
class BasicCohomology:
    basic: BasicComplex
    betti: list[int]
    spaces: list[CohomologySpace]
    ring: list[RingEntry]
    deta_class: CohClass
    identification: Identification | None


def basic_cohomology(bc: BasicComplex) -> BasicCohomology:
    """Betti numbers, representatives and all pairwise cup products of the
    basic cohomology, plus the (u, v, w) naming when the ring shape allows."""
    from .cohomology import betti as _betti
    cc = bc.complex
    bs = _betti(cc)
    spaces = [cc.space(k) for k in range(cc.top + 1)]
    ring: list[RingEntry] = []
    for k1, sp1 in enumerate(spaces):
        for i1 in range(sp1.betti):
            x = _unit_class(sp1, i1)
            for k2 in range(k1, len(spaces)):
                if k1 + k2 > cc.top:
                    continue
                sp2 = spaces[k2]
                for i2 in range(sp2.betti):
                    y = _unit_class(sp2, i2)
                    ring.append(RingEntry((k1, i1), (k2, i2),
                                          cup(sp1, sp2, x, y)))
    deta = bc.algebra.d_form(bc.contact.eta)
    deta_class = class_of(spaces[2], bc.to_coords(2, deta)) if cc.top >= 2 else \
        CohClass(2, ())
    trimmed = list(bs)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    ident = (_identify_uvw(bc, spaces, deta_class)
             if trimmed == [1, 2, 2, 2, 1] else None)
    return BasicCohomology(bc, bs, spaces, ring, deta_class, ident)


def _unit_class(space: CohomologySpace, index: int) -> CohClass:
    field = space.complex.field
    return CohClass(space.degree,
                    tuple(field.one() if i == index else field.zero()
                          for i in range(space.betti)))


def _identify_uvw(bc: BasicComplex, spaces: list[CohomologySpace],
                  deta_class: CohClass) -> Identification | None:
    """Pick u, v in degree 1 and w in degree 2 with [d eta]_B = -u v - w,
    w^2 = 0 and u v w spanning the top: first signed ordering that works."""
    field = bc.complex.field
    sp1, sp2, sp3, sp4 = spaces[1], spaces[2], spaces[3], spaces[4]
    e = [_unit_class(sp1, i) for i in range(2)]
    candidates = []
    for sa, sb in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        for a, b in ((0, 1), (1, 0)):
            candidates.append((_scale_class(e[a], sa, field),
                               _scale_class(e[b], sb, field)))
    for u, v in candidates:
        uv = cup(sp1, sp1, u, v)
        w = CohClass(2, tuple(-d - p for d, p in zip(deta_class.coords, uv.coords)))
        if _rank2(uv, w, field) != 2:
            continue
        ww = cup(sp2, sp2, w, w)
        if not ww.is_zero():
            continue
        uw = cup(sp1, sp2, u, w)
        vw = cup(sp1, sp2, v, w)
        if _rank2(uw, vw, field) != 2:
            continue
        uvw = cup(sp1, sp3, u, vw)
        if uvw.is_zero():
            continue
        return Identification(u, v, w, relations=[
            "u^2 = v^2 = 0", "w^2 = 0", "u v w != 0", "[d eta]_B = -u v - w"])
    return None


def _scale_class(c: CohClass, s: int, field: Field) -> CohClass:
    f = field.coerce(s)
    return CohClass(c.degree, tuple(f * x for x in c.coords))


def _rank2(a: CohClass, b: CohClass, field: Field) -> int:
    return linalg.bareiss_rank([list(a.coords), list(b.coords)], field)


# ---------------------------------------------------------------------------
# the model
# ---------------------------------------------------------------------------

def cohomology_ring_cdga(hb: BasicCohomology) -> CDGA:
    """The basic cohomology ring as a zero-differential CDGA.

    When the (u, v, w) identification succeeded the basis is the monomial
    one (1, u, v, u^v, w, u^w, v^w, u^v^w); otherwise canonical classes are
    named h<degree>_<index>.
    """
    field = hb.basic.complex.field
    spaces = hb.spaces
    if hb.identification is not None:
        ident = hb.identification
        sp1, sp2, sp3 = spaces[1], spaces[2], spaces[3]
        u, v, w = ident.u, ident.v, ident.w
        uv = cup(sp1, sp1, u, v)
        uw = cup(sp1, sp2, u, w)
        vw = cup(sp1, sp2, v, w)
        uvw = cup(sp1, sp3, u, vw)
        basis: list[list[tuple[str, CohClass]]] = [
            [("1", _unit_class(spaces[0], 0))],
            [("u", u), ("v", v)],
            [("u^v", uv), ("w", w)],
            [("u^w", uw), ("v^w", vw)],
            [("u^v^w", uvw)],
        ]
        generators = [("u", 1, 0), ("v", 1, 1), ("w", 2, 1)]
        monomials = [[()], [(0,), (1,)], [(0, 1), (2,)], [(0, 2), (1, 2)],
                     [(0, 1, 2)]]
    else:
        basis = [[("1" if k == 0 and i == 0 else f"h{k}_{i}",
                   _unit_class(spaces[k], i))
                  for i in range(spaces[k].betti)] for k in range(len(spaces))]
        generators = None
        monomials = None

    while basis and not basis[-1]:
        basis.pop()
    names = [[n for n, _ in layer] for layer in basis]
    dims = [len(layer) for layer in basis]
    top = len(dims) - 1

    # change-of-basis: coordinates of a canonical class in the chosen basis
    def to_basis(k: int, c: CohClass) -> list[Scalar]:
        cols = [list(cls.coords) for _, cls in basis[k]]
        coords = linalg.solve_columns(cols, list(c.coords), field)
        if coords is None:
            raise CDGAError("chosen classes do not span basic cohomology")
        return coords

    mult: dict[tuple[int, int, int, int], tuple[Scalar, ...]] = {}
    for k1 in range(top + 1):
        for i1, (_, c1) in enumerate(basis[k1]):
            for k2 in range(top + 1 - k1):
                for i2, (_, c2) in enumerate(basis[k2]):
                    prod = cup(spaces[k1], spaces[k2], c1, c2)
                    if prod.is_zero():
                        continue
                    mult[(k1, i1, k2, i2)] = tuple(to_basis(k1 + k2, prod))
    d = [linalg.zeros(dims[k + 1] if k < top else 0, dims[k], field)
         for k in range(top + 1)]
    cdga = CDGA(field, names, mult, d, generators=generators,
                monomials=monomials)
    cdga.basis_classes = basis
    return cdga


def hirsch_extension(base: CDGA, dy: CDGAElement, y_name: str = "y") -> CDGA:
    """Elementary extension by one degree-1 generator y with d y = dy.

    The basis doubles: each degree-k layer holds the base elements h first,
    then the products h^y (of base degree k-1).  Requires dy closed of
    degree 2; then d(h^y) = (d h)^y + (-1)^deg(h) h.dy and d^2 = 0.
    """
    if dy.degree != 2:
        raise CDGAError("the extension class must have degree 2")
    if not dy.d().is_zero():
        raise CDGAError("the extension class is not closed")
    field = base.field
    zero = field.zero()
    btop = base.top
    top = btop + 1

    def bdim(k: int) -> int:
        return base.dims[k] if 0 <= k <= btop else 0

    dims = [bdim(k) + bdim(k - 1) for k in range(top + 1)]
    names = []
    for k in range(top + 1):
        layer = list(base.names[k]) if k <= btop else []
        if k >= 1:
            layer += [y_name if n == "1" else f"{n}^{y_name}"
                      for n in (base.names[k - 1] if k - 1 <= btop else [])]
        names.append(layer)

    mult: dict[tuple[int, int, int, int], tuple[Scalar, ...]] = {}

    def put(k1: int, p1: int, k2: int, p2: int, coords: list[Scalar]):
        if any(c != 0 for c in coords):
            mult[(k1, p1, k2, p2)] = tuple(coords)

    for (k1, i1, k2, i2), prod in base.mult.items():
        deg = k1 + k2
        # (a)(b) = ab
        if deg <= top:
            coords = [zero] * dims[deg]
            for t, c in enumerate(prod):
                coords[t] = c
            put(k1, i1, k2, i2, coords)
        # (a)(b^y) = (ab)^y  and  (a^y)(b) = (-1)^deg(b) (ab)^y
        if deg + 1 <= top:
            off = bdim(deg + 1)
            coords = [zero] * dims[deg + 1]
            for t, c in enumerate(prod):
                coords[off + t] = c
            put(k1, i1, k2 + 1, bdim(k2 + 1) + i2, coords)
            coords2 = [zero] * dims[deg + 1]
            for t, c in enumerate(prod):
                coords2[off + t] = (zero - c) if k2 % 2 else c
            put(k1 + 1, bdim(k1 + 1) + i1, k2, i2, coords2)
        # (a^y)(b^y) = 0: omitted entries default to zero

    d: list[linalg.Matrix] = []
    for k in range(top + 1):
        rows = dims[k + 1] if k < top else 0
        m = linalg.zeros(rows, dims[k], field)
        if k < top:
            # base columns: d(a) = (d_base a)
            if k < btop:
                for j in range(bdim(k)):
                    for i in range(bdim(k + 1)):
                        m[i][j] = base.d[k][i][j]
            # y columns: d(a^y) = (d_base a)^y + (-1)^deg(a) a.dy
            for j in range(bdim(k - 1)):
                col = bdim(k) + j
                if k - 1 < btop:
                    for i in range(bdim(k)):
                        m[bdim(k + 1) + i][col] = base.d[k - 1][i][j]
                a = base.basis_element(k - 1, j)
                ady = base.multiply(a, dy)
                if (k - 1) % 2:
                    ady = -ady
                for i, c in enumerate(ady.coords):
                    m[i][col] = m[i][col] + c
        d.append(m)

    generators = None
    monomials = None
    if base.generators is not None and base.monomials is not None:
        y_gen_index = len(base.generators)
        generators = base.generators + [(y_name, 1, bdim(1))]
        monomials = []
        for k in range(top + 1):
            layer = list(base.monomials[k]) if k <= btop else []
            if k >= 1 and k - 1 <= btop:
                layer += [mono + (y_gen_index,) for mono in base.monomials[k - 1]]
            monomials.append(layer)
    return CDGA(field, names, mult, d, generators=generators,
                monomials=monomials)


def tievsky_model(hb: BasicCohomology, deta_class: CohClass | None = None) -> CDGA:
    """H_B tensor the degree-1 exterior generator y, with d y = [d eta]_B."""
    if deta_class is None:
        deta_class = hb.deta_class
    if deta_class.degree != 2:
        raise CDGAError("the extension class must be a degree-2 basic class")
    ring = cohomology_ring_cdga(hb)
    cols = [list(cls.coords) for _, cls in ring.basis_classes[2]]
    coords = linalg.solve_columns(cols, list(deta_class.coords), ring.field)
    if coords is None:
        raise CDGAError("extension class does not lie in degree-2 basic cohomology")
    dy = CDGAElement(ring, 2, tuple(coords))
    return hirsch_extension(ring, dy)


# ---------------------------------------------------------------------------
# morphism verification
# ---------------------------------------------------------------------------

@dataclass
class CDGAMorphism:
    source: CDGA
    target: CDGA
    images: dict[str, CDGAElement]


@dataclass
class MorphismReport:
    well_defined: bool
    chain_map: bool
    quasi_iso: bool
    witnesses: list[str] = dc_field(default_factory=list)
    betti_source: list[int] = dc_field(default_factory=list)
    betti_target: list[int] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.well_defined and self.chain_map and self.quasi_iso


def verify_morphism(m: CDGAMorphism) -> MorphismReport:
    """Check degree preservation, relation preservation, the chain-map
    identity, and bijectivity of the induced map on cohomology."""
    src, tgt = m.source, m.target
    if src.generators is None or src.monomials is None:
        raise CDGAError("morphism source must carry a monomial basis")
    witnesses: list[str] = []
    well_defined = True

    for name, deg, _ in src.generators:
        if name not in m.images:
            raise CDGAError(f"no image supplied for generator {name!r}")
        if m.images[name].degree != deg:
            well_defined = False
            witnesses.append(f"image of {name} has degree "
                             f"{m.images[name].degree}, expected {deg}")
    if not well_defined:
        return MorphismReport(False, False, False, witnesses)

    gen_images = [m.images[name] for name, _, _ in src.generators]

    mapped: dict[tuple[int, int], CDGAElement] = {}
    for k in range(src.top + 1):
        for i, mono in enumerate(src.monomials[k]):
            img = tgt.unit()
            for gi in mono:
                img = img * gen_images[gi]
            mapped[(k, i)] = img

    def apply(element: CDGAElement) -> CDGAElement:
        out = tgt.zero(element.degree)
        for i, c in enumerate(element.coords):
            if c == 0:
                continue
            piece = mapped.get((element.degree, i))
            if piece is None:
                continue
            out = out + piece.scale(c)
        return out

    # relation preservation: multiplicativity on every basis pair
    for k1 in range(src.top + 1):
        for i1 in range(src.dims[k1]):
            for k2 in range(src.top + 1):
                for i2 in range(src.dims[k2]):
                    lhs = mapped[(k1, i1)] * mapped[(k2, i2)]
                    prod = src.multiply(src.basis_element(k1, i1),
                                        src.basis_element(k2, i2))
                    rhs = apply(prod) if prod.degree <= src.top else \
                        tgt.zero(prod.degree)
                    if lhs.degree > tgt.top:
                        ok = rhs.degree > tgt.top or rhs.is_zero()
                    elif rhs.degree > tgt.top:
                        ok = lhs.is_zero()
                    else:
                        ok = lhs.coords == rhs.coords
                    if not ok:
                        well_defined = False
                        witnesses.append(
                            f"multiplicativity fails on "
                            f"({src.names[k1][i1]}, {src.names[k2][i2]})")
    # chain map on every basis element (generators give the witnesses)
    chain = True
    for k in range(src.top + 1):
        for i in range(src.dims[k]):
            lhs = mapped[(k, i)].d()
            rhs = apply(src.differential(src.basis_element(k, i)))
            if lhs.degree > tgt.top:
                ok = rhs.degree > tgt.top or rhs.is_zero()
            elif rhs.degree > tgt.top:
                ok = lhs.is_zero()
            else:
                ok = lhs.coords == rhs.coords
            if not ok:
                chain = False
                witnesses.append(f"chain-map identity fails on {src.names[k][i]}")

    src_cc = src.cochain_complex()
    tgt_cc = tgt.cochain_complex()
    from .cohomology import betti as _betti
    bs, bt = _betti(src_cc), _betti(tgt_cc)
    quasi = well_defined and chain
    if quasi:
        topdeg = max(src_cc.top, tgt_cc.top)
        for k in range(topdeg + 1):
            b_s = bs[k] if k <= src_cc.top else 0
            b_t = bt[k] if k <= tgt_cc.top else 0
            if b_s != b_t:
                quasi = False
                witnesses.append(f"betti mismatch in degree {k}: {b_s} vs {b_t}")
                continue
            if b_s == 0:
                continue
            sp_s = src_cc.space(k)
            sp_t = tgt_cc.space(k)
            cols = []
            for rep in sp_s.representatives:
                img = apply(CDGAElement(src, k, tuple(rep)))
                cols.append(list(class_of(sp_t, list(img.coords)).coords))
            if linalg.bareiss_rank(cols, src.field) != b_s:
                quasi = False
                witnesses.append(f"induced map not bijective in degree {k}")
    return MorphismReport(well_defined, chain, quasi, witnesses, bs, bt)
