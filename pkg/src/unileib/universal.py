"""The universal algebra of a pair of Leibniz algebras.

For h of dimension n and g of dimension m this is the quotient of the
polynomial ring on the n×m variable grid by the ideal of the n·m² generating
polynomials built from the two structure-constant tensors.  The square case
g = h carries the coacting-bialgebra structure (comultiplication and counit),
and every axiom the construction promises is machine-verified here by normal
forms: the quotient relations, the coaction being a bracket homomorphism, the
well-definedness of the comultiplication on the quotient, coassociativity,
counit laws, and the comodule diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebras import LeibnizAlgebra, builtin, derived_subalgebra
from .errors import ValidationError
from .fields import require_same_field
from .groebner import GroebnerBasis, buchberger, normal_form, tensor_square_basis
from .linalg import column_space_basis
from .poly import DEGREVLEX, Polynomial, VariableGrid


@dataclass
class Certificate:
    """Outcome of a verification pass: overall flag plus per-check details."""

    ok: bool
    checks: list = dc_field(default_factory=list)

    def add(self, label: str, passed: bool, detail: str = ""):
        self.checks.append({"label": label, "ok": bool(passed), "detail": detail})
        if not passed:
            self.ok = False

    def to_json(self):
        return {"ok": self.ok, "checks": self.checks}


def universal_polynomials(h: LeibnizAlgebra, g: LeibnizAlgebra) -> dict:
    """All generating polynomials, indexed by (a, i, j); zero entries retained.

    P(a,i,j) = sum_u beta[i,j][u]·X[a,u] - sum_{s,t} tau[s,t][a]·X[s,i]·X[t,j]
    on the grid with rows indexed by h and columns by g.
    """
    require_same_field(h.field, g.field, "the two algebras")
    n, m = h.dim, g.dim
    grid = VariableGrid(n, m)
    fld = h.field
    out = {}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            beta = g.bracket_basis(i, j)
            quad = {a: {} for a in range(1, n + 1)}
            for (s, t), vec in h.tau.items():
                e = [0] * grid.nvars
                e[grid.flat(s, i)] += 1
                e[grid.flat(t, j)] += 1
                e = tuple(e)
                for a, c in vec.items():
                    acc = quad[a]
                    prev = acc.get(e, fld.zero)
                    acc[e] = fld.add(prev, c)
            for a in range(1, n + 1):
                entries = []
                for u, c in beta.items():
                    ev = [0] * grid.nvars
                    ev[grid.flat(a, u)] = 1
                    entries.append((tuple(ev), c))
                for e, c in quad[a].items():
                    entries.append((e, fld.neg(c)))
                out[(a, i, j)] = Polynomial.from_terms(grid, fld, entries)
    return out


class Presentation:
    """Computable face of the universal algebra: generators plus reduced basis."""

    def __init__(self, h, g, order, upolys, gb):
        self.h = h
        self.g = g
        self.order = order
        self.universal_polys = upolys
        self.gb = gb
        self.grid = gb.grid
        self.field = gb.field
        self._tensor_gb = None

    @property
    def is_square(self) -> bool:
        return self.h == self.g

    def nonzero_polys(self):
        return [p for _, p in sorted(self.universal_polys.items()) if not p.is_zero()]

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.gb)

    def tensor_square_gb(self) -> GroebnerBasis:
        """Basis for the doubled ring, computed once and cached."""
        if self._tensor_gb is None:
            self._tensor_gb = tensor_square_basis(self.gb)
        return self._tensor_gb

    def variable(self, s, i, copy=0, grid=None):
        return Polynomial.variable(grid or self.grid, self.field, s, i, copy)

    def to_json(self):
        return {
            "dims": {"rows": self.h.dim, "cols": self.g.dim},
            "field": self.field.to_json(),
            "order": self.order,
            "names": {"h": self.h.name or "", "g": self.g.name or ""},
            "universal_polys": [
                {"index": list(key), "terms": poly.to_json(self.order)}
                for key, poly in sorted(self.universal_polys.items())
            ],
            "groebner_basis": self.gb.to_json(),
        }


def build_presentation(h: LeibnizAlgebra, g: LeibnizAlgebra, order: str = DEGREVLEX) -> Presentation:
    upolys = universal_polynomials(h, g)
    grid = VariableGrid(h.dim, g.dim)
    gens = [p for _, p in sorted(upolys.items()) if not p.is_zero()]
    gb = buchberger(gens, order, grid=grid, field=h.field)
    pres = Presentation(h, g, order, upolys, gb)
    # the defining relations must hold in the quotient
    for key, p in upolys.items():
        if not pres.reduce(p).is_zero():
            raise ValidationError(f"generator {key} does not vanish in its own quotient")
    return pres


@dataclass
class Coaction:
    """Symbolic unit map: basis vector i of g goes to sum_s e_s ⊗ x[s,i]."""

    presentation: Presentation
    images: list  # images[i-1] = [(s, Polynomial X_{s,i})] with exactly n entries

    def to_json(self):
        return [
            {"source": i + 1, "terms": [[s, poly.to_json(self.presentation.order)] for s, poly in img]}
            for i, img in enumerate(self.images)
        ]


def eta(pres: Presentation) -> Coaction:
    n, m = pres.h.dim, pres.g.dim
    images = []
    for i in range(1, m + 1):
        images.append([(s, pres.variable(s, i)) for s in range(1, n + 1)])
    return Coaction(pres, images)


def _bracket_poly_vectors(h: LeibnizAlgebra, x, y, grid, fld):
    """Bracket in h⊗R of two vectors of polynomials (coordinates over h)."""
    out = [Polynomial.zero(grid, fld) for _ in range(h.dim)]
    for (s, t), vec in h.tau.items():
        prod = x[s - 1] * y[t - 1]
        if prod.is_zero():
            continue
        for a, c in vec.items():
            out[a - 1] = out[a - 1] + prod.scale(c)
    return out


def verify_eta_hom(pres: Presentation) -> Certificate:
    """Check the unit map is a bracket homomorphism modulo the defining ideal.

    For every pair (i, j) the coordinates of [eta(f_i), eta(f_j)] - eta([f_i, f_j])
    must reduce to zero.
    """
    h, g = pres.h, pres.g
    n, m = h.dim, g.dim
    cert = Certificate(ok=True)
    cols = [[pres.variable(s, i) for s in range(1, n + 1)] for i in range(1, m + 1)]
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            lhs = _bracket_poly_vectors(h, cols[i - 1], cols[j - 1], pres.grid, pres.field)
            rhs = [Polynomial.zero(pres.grid, pres.field) for _ in range(n)]
            for u, c in g.bracket_basis(i, j).items():
                for a in range(n):
                    rhs[a] = rhs[a] + cols[u - 1][a].scale(c)
            for a in range(n):
                diff = pres.reduce(lhs[a] - rhs[a])
                cert.add(
                    f"eta-bracket ({i},{j}) coordinate {a + 1}",
                    diff.is_zero(),
                    "" if diff.is_zero() else str(diff),
                )
    return cert


@dataclass
class Comultiplication:
    """Generator images of the coalgebra structure in the square case.

    delta[(i,j)] lives on the doubled grid (copy 0 ⊗ copy 1); the counit table
    is the identity pattern, stored explicitly for serialization.
    """

    presentation: Presentation
    delta: dict  # (i, j) -> Polynomial on doubled grid
    counit: dict  # (i, j) -> field element

    def to_json(self):
        n = self.presentation.h.dim
        f = self.presentation.field
        return {
            "counit": [[f.format(self.counit[(i, j)]) for j in range(1, n + 1)] for i in range(1, n + 1)],
            "delta": {
                f"{i},{j}": str(self.delta[(i, j)]) for (i, j) in sorted(self.delta)
            },
        }


def _delta_images(pres: Presentation):
    """Variable-wise comultiplication on the free ring, as substitution images."""
    n = pres.h.dim
    doubled = pres.grid.tensor_power(2)
    images = [None] * pres.grid.nvars
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            acc = Polynomial.zero(doubled, pres.field)
            for s in range(1, n + 1):
                acc = acc + pres.variable(i, s, 0, doubled) * pres.variable(s, j, 1, doubled)
            images[pres.grid.flat(i, j)] = acc
    return images


def comultiplication(pres: Presentation):
    """Comultiplication and counit on generators plus well-definedness certificate.

    Both maps are forced: delta(x_ij) = sum_s x_is ⊗ x_sj and eps(x_ij) = δ_ij.
    Well-definedness on the quotient means every defining polynomial P goes to
    zero under both: delta(P) reduces to zero modulo the doubled-ring ideal
    and eps(P) evaluates to zero.
    """
    if not pres.is_square:
        raise ValidationError("comultiplication requires the square case g = h")
    n = pres.h.dim
    fld = pres.field
    images = _delta_images(pres)
    delta = {}
    counit = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            delta[(i, j)] = images[pres.grid.flat(i, j)]
            counit[(i, j)] = fld.one if i == j else fld.zero
    cert = Certificate(ok=True)
    tensor_gb = pres.tensor_square_gb()
    delta_values = [fld.one if i == j else fld.zero for i in range(1, n + 1) for j in range(1, n + 1)]
    for key, p in sorted(pres.universal_polys.items()):
        if p.is_zero():
            continue
        image = p.substitute(images)
        red = normal_form(image, tensor_gb)
        cert.add(
            f"delta well-defined on P{key}",
            red.is_zero(),
            "" if red.is_zero() else str(red),
        )
        eps_val = p.evaluate(delta_values)
        cert.add(f"epsilon kills P{key}", fld.is_zero(eps_val), "" if fld.is_zero(eps_val) else str(eps_val))
    return Comultiplication(pres, delta, counit), cert


def verify_comodule(pres: Presentation) -> Certificate:
    """Comodule and coalgebra axioms on generators, verified symbolically.

    Checks, in order: the coaction square (id⊗delta)∘eta = (eta⊗id)∘eta, the
    counit triangle (id⊗eps)∘eta = can, coassociativity and both counit laws
    on every generator, and that the projection from the free ring respects
    the coalgebra formulas.
    """
    if not pres.is_square:
        raise ValidationError("comodule verification requires the square case g = h")
    n = pres.h.dim
    fld = pres.field
    cert = Certificate(ok=True)
    doubled = pres.grid.tensor_power(2)
    tripled = pres.grid.tensor_power(3)
    images = _delta_images(pres)
    tensor_gb = pres.tensor_square_gb()

    # coaction square, coordinate of e_t for source e_i
    for i in range(1, n + 1):
        for t in range(1, n + 1):
            lhs = images[pres.grid.flat(t, i)]
            rhs = Polynomial.zero(doubled, fld)
            for s in range(1, n + 1):
                rhs = rhs + pres.variable(t, s, 0, doubled) * pres.variable(s, i, 1, doubled)
            diff = normal_form(lhs - rhs, tensor_gb)
            cert.add(f"comodule square e_{i} coordinate {t}", diff.is_zero())

    # counit triangle: sum_s e_s · eps(x_si) = e_i, evaluating eps on the nose
    eps_values = [fld.one if r == c else fld.zero for r in range(n) for c in range(n)]
    for i in range(1, n + 1):
        coeffs = [pres.variable(s, i).evaluate(eps_values) for s in range(1, n + 1)]
        expected = [fld.one if s == i else fld.zero for s in range(1, n + 1)]
        cert.add(f"counit triangle e_{i}", coeffs == expected)

    # coassociativity on generators, in the tripled free ring
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lhs = Polynomial.zero(tripled, fld)
            rhs = Polynomial.zero(tripled, fld)
            for s in range(1, n + 1):
                for t in range(1, n + 1):
                    lhs = lhs + (
                        pres.variable(i, t, 0, tripled)
                        * pres.variable(t, s, 1, tripled)
                        * pres.variable(s, j, 2, tripled)
                    )
                    rhs = rhs + (
                        pres.variable(i, s, 0, tripled)
                        * pres.variable(s, t, 1, tripled)
                        * pres.variable(t, j, 2, tripled)
                    )
            cert.add(f"coassociativity x({i},{j})", lhs == rhs)

    # counit laws on generators: (eps⊗id) and (id⊗eps) applied to delta(x_ij)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            dx = images[pres.grid.flat(i, j)]
            left = dx.contract_copy(0, eps_values)
            right = dx.contract_copy(1, eps_values)
            xij = pres.variable(i, j)
            cert.add(f"counit law x({i},{j})", left == xij and right == xij)

    # the quotient projection is a coalgebra map: reducing before or after
    # applying delta gives the same class, on generators and their products
    probes = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            probes.append(pres.variable(i, j))
    flat_vars = [pres.variable(*pres.grid.unflat(k)[1:]) for k in range(pres.grid.nvars)]
    for a in range(len(flat_vars)):
        for b in range(a, len(flat_vars)):
            probes.append(flat_vars[a] * flat_vars[b])
    for idx, f_poly in enumerate(probes):
        through_quotient = normal_form(pres.reduce(f_poly).substitute(images), tensor_gb)
        direct = normal_form(f_poly.substitute(images), tensor_gb)
        cert.add(f"projection compatible probe {idx}", through_quotient == direct)
    return cert


@dataclass
class SymmetricAlgebraReport:
    ok: bool
    derived_dim: int
    span_dim: int
    free_variables: int
    all_linear: bool


def symmetric_algebra_check(g: LeibnizAlgebra) -> SymmetricAlgebraReport:
    """The universal algebra of (k, g) is a polynomial ring on g/g'.

    With the 1-dimensional abelian algebra in the first slot every generating
    polynomial is the linear form carrying a bracket value of g, so the ideal
    is spanned by linear forms of rank dim(g'); the quotient is then free on
    dim(g) - dim(g') variables.
    """
    point = builtin("abelian(1)", g.field)
    pres = build_presentation(point, g)
    fld = g.field
    m = g.dim
    rows = []
    all_linear = True
    for _, p in sorted(pres.universal_polys.items()):
        if p.is_zero():
            continue
        if p.total_degree() != 1:
            all_linear = False
            continue
        row = [fld.zero] * m
        for e, c in p.terms.items():
            k = e.index(1)
            _, _, i = pres.grid.unflat(k)
            row[i - 1] = c
        rows.append(row)
    span_dim = len(column_space_basis(rows, fld)) if rows else 0
    derived_dim = len(derived_subalgebra(g))
    gb_linear = all(gen.total_degree() == 1 for gen in pres.gb)
    ok = all_linear and gb_linear and span_dim == derived_dim
    return SymmetricAlgebraReport(
        ok=ok,
        derived_dim=derived_dim,
        span_dim=span_dim,
        free_variables=m - span_dim,
        all_linear=all_linear and gb_linear,
    )
