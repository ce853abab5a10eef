"""Group gradings and group actions through the coacting bialgebra.

A grading of h by a finite abelian group G is the same thing as a bialgebra
homomorphism from the universal algebra into the group algebra k[G]; an action
of a finite group by automorphisms is the same with the dual k[G]* as target.
Both directions are implemented and verified, gradings are classified up to
conjugation by automorphism characters, and the classification is exhaustive
for diagonal gradings together with their conjugates (general gradings with no
homogeneous basis in that orbit are out of the enumeration's scope, which the
output metadata records).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from . import linalg
from .algebras import LeibnizAlgebra
from .errors import InputError, ValidationError
from .fields import PrimeField
from .homspace import (
    Character,
    convolution,
    convolution_inverse,
    counit_character,
    enumerate_automorphism_characters,
    verify_character,
)
from .universal import Certificate, Presentation, build_presentation


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct product of cyclic groups; elements are residue tuples."""

    factors: tuple

    def __post_init__(self):
        if any(int(m) < 2 for m in self.factors):
            raise InputError("cyclic factors must be at least 2")
        object.__setattr__(self, "factors", tuple(int(m) for m in self.factors))

    @classmethod
    def parse(cls, text: str) -> "FiniteAbelianGroup":
        """Grammar: Zm with m >= 2, joined by 'x' — e.g. Z2, Z2xZ4."""
        parts = text.strip().split("x")
        factors = []
        for part in parts:
            m = re.fullmatch(r"[Zz](\d+)", part.strip())
            if not m:
                raise InputError(f"bad group spec {text!r}; expected like Z2 or Z2xZ4")
            factors.append(int(m.group(1)))
        return cls(tuple(factors))

    @property
    def order(self) -> int:
        out = 1
        for m in self.factors:
            out *= m
        return out

    @property
    def identity(self):
        return (0,) * len(self.factors)

    def elements(self):
        """All elements in lexicographic residue order."""
        return [e for e in itertools.product(*(range(m) for m in self.factors))]

    def add(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.factors))

    def neg(self, a):
        return tuple((-x) % m for x, m in zip(a, self.factors))

    def contains(self, a) -> bool:
        return len(a) == len(self.factors) and all(0 <= x < m for x, m in zip(a, self.factors))

    def key(self, a) -> str:
        return ",".join(str(x) for x in a)

    def spec(self) -> str:
        return "x".join(f"Z{m}" for m in self.factors) if self.factors else "trivial"


def group_commutative_algebra(field, group: FiniteAbelianGroup):
    """k[G] as a plain commutative algebra (basis = group elements, lex order)."""
    from .algebras import CommutativeAlgebra

    elements = group.elements()
    index = {g: k + 1 for k, g in enumerate(elements)}
    mu = {}
    for a, ga in enumerate(elements, start=1):
        for b, gb in enumerate(elements, start=1):
            mu[(a, b)] = {index[group.add(ga, gb)]: field.one}
    unit = [field.one if g == group.identity else field.zero for g in elements]
    return CommutativeAlgebra(len(elements), field, mu, unit, name=f"k[{group.spec()}]")


class GroupAlgebraElement:
    """Element of k[G] or of its dual k[G]*, tagged by ``dual``.

    k[G]: basis = group elements, product = group addition, the coalgebra is
    diagonal.  k[G]*: dual basis p_g, pointwise (idempotent) product, unit is
    the all-ones functional, and the coproduct fans p_g over all sums u+v = g.
    """

    __slots__ = ("group", "field", "dual", "coeffs")

    def __init__(self, group, field, coeffs, dual=False):
        self.group = group
        self.field = field
        self.dual = dual
        self.coeffs = {g: c for g, c in coeffs.items() if not field.is_zero(c)}

    @classmethod
    def zero(cls, group, field, dual=False):
        return cls(group, field, {}, dual)

    @classmethod
    def basis(cls, group, field, element, dual=False):
        if not group.contains(element):
            raise ValidationError(f"{element} is not in {group.spec()}")
        return cls(group, field, {tuple(element): field.one}, dual)

    @classmethod
    def one(cls, group, field, dual=False):
        if dual:
            return cls(group, field, {g: field.one for g in group.elements()}, True)
        return cls(group, field, {group.identity: field.one}, False)

    def _check(self, other):
        if self.group != other.group or self.field != other.field or self.dual != other.dual:
            raise ValidationError("mixing distinct group algebras")

    def __add__(self, other):
        self._check(other)
        f = self.field
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = f.add(out.get(g, f.zero), c)
        return GroupAlgebraElement(self.group, f, out, self.dual)

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        out = {}
        if self.dual:
            for g, c in self.coeffs.items():
                d = other.coeffs.get(g)
                if d is not None:
                    out[g] = f.mul(c, d)
        else:
            for g, c in self.coeffs.items():
                for h, d in other.coeffs.items():
                    k = self.group.add(g, h)
                    out[k] = f.add(out.get(k, f.zero), f.mul(c, d))
        return GroupAlgebraElement(self.group, f, out, self.dual)

    def scale(self, c):
        f = self.field
        return GroupAlgebraElement(
            self.group, f, {g: f.mul(c, v) for g, v in self.coeffs.items()}, self.dual
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, element):
        return self.coeffs.get(tuple(element), self.field.zero)

    def coproduct(self) -> dict:
        """Sparse map (g, h) -> coefficient describing the element's coproduct."""
        f = self.field
        out = {}
        if self.dual:
            for u in self.group.elements():
                for v in self.group.elements():
                    c = self.coeffs.get(self.group.add(u, v))
                    if c is not None:
                        key = (u, v)
                        out[key] = f.add(out.get(key, f.zero), c)
        else:
            for g, c in self.coeffs.items():
                out[(g, g)] = c
        return {k: v for k, v in out.items() if not f.is_zero(v)}

    def counit(self):
        f = self.field
        if self.dual:
            return self.coeffs.get(self.group.identity, f.zero)
        acc = f.zero
        for c in self.coeffs.values():
            acc = f.add(acc, c)
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, GroupAlgebraElement)
            and self.group == other.group
            and self.dual == other.dual
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.group, self.dual, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        basis = "p" if self.dual else "g"
        parts = [
            f"{self.field.format(c)}·{basis}[{self.group.key(g)}]"
            for g, c in sorted(self.coeffs.items())
        ]
        return " + ".join(parts)

    def to_json(self):
        return {self.group.key(g): self.field.format(c) for g, c in sorted(self.coeffs.items())}


class _GroupRingOps:
    """Ring adapter for evaluating polynomials inside k[G] or k[G]*."""

    def __init__(self, group, field, dual):
        self.zero = GroupAlgebraElement.zero(group, field, dual)
        self.one = GroupAlgebraElement.one(group, field, dual)

    @staticmethod
    def add(x, y):
        return x + y

    @staticmethod
    def mul(x, y):
        return x * y

    @staticmethod
    def scale(c, x):
        return x.scale(c)


class BialgebraHom:
    """Map from the universal algebra to k[G] (gradings) or k[G]* (actions),
    stored by its n×n generator images."""

    def __init__(self, presentation: Presentation, group: FiniteAbelianGroup, images, dual=False):
        n = presentation.h.dim
        self.presentation = presentation
        self.group = group
        self.dual = dual
        self.images = tuple(tuple(row) for row in images)
        if len(self.images) != n or any(len(r) != n for r in self.images):
            raise ValidationError(f"image matrix must be {n}x{n}")
        for row in self.images:
            for elem in row:
                if elem.dual != dual:
                    raise ValidationError("image tag does not match the target bialgebra")

    def key(self):
        """Canonical hashable form, used for orbit bookkeeping."""
        return tuple(
            tuple(tuple(sorted(elem.coeffs.items())) for elem in row) for row in self.images
        )

    def __eq__(self, other):
        return (
            isinstance(other, BialgebraHom)
            and self.group == other.group
            and self.dual == other.dual
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.group, self.dual, self.key()))

    def to_json(self):
        return {
            "group": list(self.group.factors),
            "target": "dual_group_algebra" if self.dual else "group_algebra",
            "images": [[elem.to_json() for elem in row] for row in self.images],
        }


def verify_bialgebra_hom(theta: BialgebraHom) -> Certificate:
    """Exact check of both halves of the bialgebra-homomorphism condition.

    Algebra half: every defining polynomial vanishes under the substitution.
    Coalgebra half: the coproduct of each image matches the matrix coproduct
    sum_s θ(x_is)⊗θ(x_sj), and counits reproduce the identity pattern.
    """
    pres = theta.presentation
    if not pres.is_square:
        raise ValidationError("bialgebra homomorphisms need the square case")
    n = pres.h.dim
    fld = pres.field
    ops = _GroupRingOps(theta.group, fld, theta.dual)
    cert = Certificate(ok=True)
    values = [theta.images[s][i] for s in range(n) for i in range(n)]
    for key, p in sorted(pres.universal_polys.items()):
        if p.is_zero():
            continue
        image = p.evaluate_generic(values, ops)
        cert.add(f"relation P{key} vanishes", image.is_zero(), "" if image.is_zero() else repr(image))
    for i in range(n):
        for j in range(n):
            lhs = theta.images[i][j].coproduct()
            rhs = {}
            for s in range(n):
                for (g1, c1) in theta.images[i][s].coeffs.items():
                    for (g2, c2) in theta.images[s][j].coeffs.items():
                        k = (g1, g2)
                        rhs[k] = fld.add(rhs.get(k, fld.zero), fld.mul(c1, c2))
            rhs = {k: v for k, v in rhs.items() if not fld.is_zero(v)}
            cert.add(f"coproduct matches at x({i + 1},{j + 1})", lhs == rhs)
            eps = theta.images[i][j].counit()
            expected = fld.one if i == j else fld.zero
            cert.add(f"counit matches at x({i + 1},{j + 1})", eps == expected)
    return cert


@dataclass
class Grading:
    """Decomposition of h into homogeneous components indexed by G.

    ``components`` lists (group element, column vectors); only nonzero
    components are stored.  Diagonal gradings also carry the degree map on
    basis indices.
    """

    algebra: LeibnizAlgebra
    group: FiniteAbelianGroup
    components: list
    diagonal: bool = False
    degree_map: tuple | None = None

    def component(self, element):
        for g, cols in self.components:
            if g == tuple(element):
                return cols
        return []

    def dimensions(self):
        return {g: len(cols) for g, cols in self.components}

    def to_json(self):
        f = self.algebra.field
        return {
            "group": list(self.group.factors),
            "components": [
                {"element": list(g), "basis": [[f.format(c) for c in col] for col in cols]}
                for g, cols in self.components
            ],
            "diagonal": self.diagonal,
            "degree_map": [list(g) for g in self.degree_map] if self.degree_map else None,
        }


def validate_grading(gr: Grading):
    """Direct-sum and bracket-compatibility invariants; returns (ok, message)."""
    h = gr.algebra
    fld = h.field
    cols = []
    for _, basis in gr.components:
        cols.extend(basis)
    if len(cols) != h.dim:
        return False, f"components span {len(cols)} dimensions, expected {h.dim}"
    matrix = [[col[r] for col in cols] for r in range(h.dim)]
    if not linalg.is_invertible(matrix, fld):
        return False, "components do not form a direct sum"
    for g1, basis1 in gr.components:
        for g2, basis2 in gr.components:
            target = gr.component(gr.group.add(g1, g2))
            for u in basis1:
                for v in basis2:
                    w = h.bracket(u, v)
                    if all(fld.is_zero(c) for c in w):
                        continue
                    if not target:
                        return False, f"bracket of components {g1},{g2} escapes the grading"
                    rows = [[col[r] for col in target] for r in range(h.dim)]
                    if linalg.solve(rows, w, fld) is None:
                        return False, f"bracket of components {g1},{g2} leaves component {gr.group.add(g1, g2)}"
    return True, ""


def diagonal_gradings(h: LeibnizAlgebra, group: FiniteAbelianGroup):
    """All gradings making the given basis homogeneous.

    A degree map d works exactly when every nonzero structure constant
    tau[i,j][s] forces d(s) = d(i)+d(j).  Exhaustive over |G|^dim maps, in
    lexicographic order of degree tuples.
    """
    out = []
    elements = group.elements()
    for degrees in itertools.product(elements, repeat=h.dim):
        ok = True
        for (i, j), vec in h.tau.items():
            expected = group.add(degrees[i - 1], degrees[j - 1])
            if any(degrees[s - 1] != expected for s in vec):
                ok = False
                break
        if not ok:
            continue
        comps = {}
        for idx, g in enumerate(degrees):
            comps.setdefault(g, []).append(
                [h.field.one if r == idx else h.field.zero for r in range(h.dim)]
            )
        components = [(g, comps[g]) for g in sorted(comps)]
        out.append(Grading(h, group, components, diagonal=True, degree_map=tuple(degrees)))
    return out


def grading_to_bihom(gr: Grading, pres: Presentation) -> BialgebraHom:
    """The coaction matrix of a grading, conjugated back to the standard basis.

    Diagonal case: θ(x_si) = δ_si·d(i).  General case: with C the homogeneous
    basis matrix and σ_j the column degrees, θ = C·diag(σ)·C⁻¹ over k[G].
    """
    if gr.algebra != pres.h or not pres.is_square:
        raise ValidationError("grading and presentation do not match")
    ok, msg = validate_grading(gr)
    if not ok:
        raise ValidationError(f"invalid grading: {msg}")
    fld = pres.field
    n = pres.h.dim
    group = gr.group
    zero = GroupAlgebraElement.zero(group, fld)
    if gr.diagonal and gr.degree_map is not None:
        images = [
            [
                GroupAlgebraElement.basis(group, fld, gr.degree_map[i]) if s == i else zero
                for i in range(n)
            ]
            for s in range(n)
        ]
    else:
        cols = []
        degrees = []
        for g, basis in gr.components:
            for col in basis:
                cols.append(col)
                degrees.append(g)
        C = [[cols[j][r] for j in range(n)] for r in range(n)]
        Cinv = linalg.invert(C, fld)
        if Cinv is None:
            raise ValidationError("homogeneous basis is singular")
        images = []
        for s in range(n):
            row = []
            for i in range(n):
                acc = zero
                for j in range(n):
                    c = fld.mul(C[s][j], Cinv[j][i])
                    if not fld.is_zero(c):
                        acc = acc + GroupAlgebraElement.basis(group, fld, degrees[j]).scale(c)
                row.append(acc)
            images.append(row)
    theta = BialgebraHom(pres, group, images, dual=False)
    cert = verify_bialgebra_hom(theta)
    if not cert.ok:
        raise ValidationError("grading does not induce a bialgebra homomorphism (internal bug)")
    return theta


def bihom_to_grading(theta: BialgebraHom, pres: Presentation | None = None) -> Grading:
    """Homogeneous components of a coaction: h_σ = {x : Θx = σ·x}.

    For each group element the condition is a linear system over the base
    field (one block per group element in the image coefficients); its
    nullspace is the component.
    """
    pres = pres or theta.presentation
    if theta.dual:
        raise ValidationError("gradings come from maps into the group algebra, not its dual")
    cert = verify_bialgebra_hom(theta)
    if not cert.ok:
        raise ValidationError("not a bialgebra homomorphism; refusing to extract a grading")
    n = pres.h.dim
    fld = pres.field
    group = theta.group
    components = []
    total = 0
    for sigma in group.elements():
        rows = []
        for g in group.elements():
            for s in range(n):
                row = []
                for i in range(n):
                    c = theta.images[s][i].coeffs.get(g, fld.zero)
                    if g == sigma and s == i:
                        c = fld.sub(c, fld.one)
                    row.append(c)
                rows.append(row)
        basis = linalg.nullspace(rows, fld)
        if basis:
            components.append((sigma, basis))
            total += len(basis)
    if total != n:
        raise ValidationError("components fail to span; the map is not a comodule map")
    degree_map = [None] * n
    diagonal = True
    for sigma, basis in components:
        for col in basis:
            support = [r for r, c in enumerate(col) if not fld.is_zero(c)]
            if len(support) == 1:
                degree_map[support[0]] = sigma
    if any(d is None for d in degree_map):
        diagonal = False
        degree_map = None
    else:
        degree_map = tuple(degree_map)
    gr = Grading(pres.h, group, components, diagonal=diagonal, degree_map=degree_map)
    ok, msg = validate_grading(gr)
    if not ok:
        raise ValidationError(f"extracted components are not a grading: {msg}")
    return gr


# -- conjugation and classification -------------------------------------------


def _convolve_scalar_left(char_matrix, images, pres, group):
    """(g ⋆ θ): matrix product with scalar matrix on the left."""
    fld = pres.field
    n = pres.h.dim
    zero = GroupAlgebraElement.zero(group, fld, images[0][0].dual)
    out = []
    for a in range(n):
        row = []
        for i in range(n):
            acc = zero
            for s in range(n):
                c = char_matrix[a][s]
                if not fld.is_zero(c):
                    acc = acc + images[s][i].scale(c)
            row.append(acc)
        out.append(row)
    return out


def _convolve_scalar_right(images, char_matrix, pres, group):
    fld = pres.field
    n = pres.h.dim
    zero = GroupAlgebraElement.zero(group, fld, images[0][0].dual)
    out = []
    for a in range(n):
        row = []
        for i in range(n):
            acc = zero
            for s in range(n):
                c = char_matrix[s][i]
                if not fld.is_zero(c):
                    acc = acc + images[a][s].scale(c)
            row.append(acc)
        out.append(row)
    return out


def conjugate_bihom(g: Character, theta: BialgebraHom) -> BialgebraHom:
    """g ⋆ θ ⋆ g⁻¹ in the convolution algebra of maps into k[G]."""
    ginv = convolution_inverse(g)
    if ginv is None:
        raise ValidationError("conjugation needs an invertible character")
    pres = theta.presentation
    mid = _convolve_scalar_left(g.matrix, theta.images, pres, theta.group)
    out = _convolve_scalar_right(mid, ginv.matrix, pres, theta.group)
    return BialgebraHom(pres, theta.group, out, dual=theta.dual)


def gradings_isomorphic(t1: BialgebraHom, t2: BialgebraHom, p: int | None = None, budget=None):
    """Search for an automorphism witness g with g ⋆ t1 = t2 ⋆ g.

    Returns (found, witness character or None).  The witness equation is the
    comodule-map condition for the automorphism between the two graded
    structures, checked entrywise over k[G].
    """
    pres = t1.presentation
    if t1.group != t2.group or t1.dual or t2.dual:
        raise ValidationError("expected two gradings over the same group")
    autos = enumerate_automorphism_characters(pres, p, budget)
    for g in autos:
        lhs = _convolve_scalar_left(g.matrix, t1.images, pres, t1.group)
        rhs = _convolve_scalar_right(t2.images, g.matrix, pres, t2.group)
        if lhs == rhs:
            return True, g
    return False, None


def classify_gradings(h: LeibnizAlgebra, group: FiniteAbelianGroup, p: int | None = None, budget=None):
    """Conjugation classes of gradings reachable from a homogeneous basis.

    The enumerated set is {diagonal gradings} closed under conjugation by all
    automorphism characters; classes are its conjugation orbits.  Classes are
    returned sorted, each with a representative (diagonal when possible),
    the representative's grading, and the orbit size.
    """
    if not isinstance(h.field, PrimeField):
        raise ValidationError("classification enumerates automorphisms over a prime field")
    if p is not None and h.field.p != p:
        raise ValidationError(f"algebra is over GF({h.field.p}), not GF({p})")
    pres = build_presentation(h, h)
    diagonals = diagonal_gradings(h, group)
    bihoms = [grading_to_bihom(gr, pres) for gr in diagonals]
    autos = enumerate_automorphism_characters(pres, p, budget)
    seen = {}
    orbits = []
    for theta in bihoms:
        if theta.key() in seen:
            continue
        orbit = {}
        for g in autos:
            conj = conjugate_bihom(g, theta)
            orbit.setdefault(conj.key(), conj)
        for key in orbit:
            seen[key] = True
        orbits.append(orbit)
    classes = []
    for orbit in orbits:
        members = sorted(orbit)
        diagonal_keys = [k for k, v in orbit.items() if _is_diagonal_images(v)]
        rep_key = min(diagonal_keys) if diagonal_keys else members[0]
        rep = orbit[rep_key]
        classes.append(
            {
                "representative": rep,
                "grading": bihom_to_grading(rep, pres),
                "orbit_size": len(orbit),
                "member_keys": members,
            }
        )
    classes.sort(key=lambda c: c["member_keys"][0])
    return classes


def _is_diagonal_images(theta: BialgebraHom) -> bool:
    n = theta.presentation.h.dim
    for s in range(n):
        for i in range(n):
            elem = theta.images[s][i]
            if s != i and not elem.is_zero():
                return False
            if s == i and len(elem.coeffs) != 1:
                return False
    return True


# -- actions as automorphisms ---------------------------------------------------


@dataclass
class GroupAction:
    """Group homomorphism into the automorphisms, element by element."""

    presentation: Presentation
    group: FiniteAbelianGroup
    images: dict  # group element -> Character

    def to_json(self):
        return {
            "group": list(self.group.factors),
            "images": {self.group.key(g): char.to_json() for g, char in sorted(self.images.items())},
        }


def validate_action(phi: GroupAction):
    """Identity to counit, multiplicativity, and invertibility of every image."""
    pres = phi.presentation
    eps = counit_character(pres)
    if set(phi.images) != set(phi.group.elements()):
        return False, "images must cover every group element exactly once"
    if phi.images[phi.group.identity] != eps:
        return False, "identity does not act as the counit"
    for g in phi.group.elements():
        char = phi.images[g]
        if not verify_character(char, pres):
            return False, f"image of {g} is not a character"
        if not linalg.is_invertible(char.matrix, pres.field):
            return False, f"image of {g} is not invertible"
        for k in phi.group.elements():
            if convolution(phi.images[g], phi.images[k]) != phi.images[phi.group.add(g, k)]:
                return False, f"multiplicativity fails at {g}+{k}"
    return True, ""


def action_to_bihom(phi: GroupAction, pres: Presentation | None = None) -> BialgebraHom:
    """θ(x_si) = sum_g φ(g)[s][i]·p_g inside the dual of the group algebra."""
    pres = pres or phi.presentation
    ok, msg = validate_action(phi)
    if not ok:
        raise ValidationError(f"not a group action: {msg}")
    n = pres.h.dim
    fld = pres.field
    images = []
    for s in range(n):
        row = []
        for i in range(n):
            coeffs = {}
            for g in phi.group.elements():
                c = phi.images[g].matrix[s][i]
                if not fld.is_zero(c):
                    coeffs[g] = c
            row.append(GroupAlgebraElement(phi.group, fld, coeffs, dual=True))
        images.append(row)
    theta = BialgebraHom(pres, phi.group, images, dual=True)
    cert = verify_bialgebra_hom(theta)
    if not cert.ok:
        raise ValidationError("action does not induce a bialgebra homomorphism (internal bug)")
    return theta


def bihom_to_action(theta: BialgebraHom, pres: Presentation | None = None) -> GroupAction:
    """Extract φ(g)[s][i] = <θ(x_si), g> and insist it is a genuine action."""
    pres = pres or theta.presentation
    if not theta.dual:
        raise ValidationError("actions come from maps into the dual group algebra")
    cert = verify_bialgebra_hom(theta)
    if not cert.ok:
        raise ValidationError("not a bialgebra homomorphism; refusing to extract an action")
    n = pres.h.dim
    images = {}
    for g in theta.group.elements():
        matrix = [
            [theta.images[s][i].coefficient(g) for i in range(n)] for s in range(n)
        ]
        images[g] = Character(pres, matrix)
    phi = GroupAction(pres, theta.group, images)
    ok, msg = validate_action(phi)
    if not ok:
        raise ValidationError(f"extracted maps are not a group action: {msg}")
    return phi


def enumerate_actions(h: LeibnizAlgebra, group: FiniteAbelianGroup, p: int | None = None, budget=None):
    """All actions of the group by automorphisms, via generator images.

    Picks an image for each cyclic generator among the automorphism
    characters, subject to the generator's order and pairwise commutation,
    then expands multiplicatively.  Deterministic order.
    """
    if not isinstance(h.field, PrimeField):
        raise ValidationError("action enumeration needs a prime field")
    if p is not None and h.field.p != p:
        raise ValidationError(f"algebra is over GF({h.field.p}), not GF({p})")
    pres = build_presentation(h, h)
    autos = enumerate_automorphism_characters(pres, p, budget)
    eps = counit_character(pres)
    rank = len(group.factors)
    actions = []
    for choice in itertools.product(autos, repeat=rank):
        ok = True
        for k, a in enumerate(choice):
            power = eps
            for _ in range(group.factors[k]):
                power = convolution(power, a)
            if power != eps:
                ok = False
                break
        if ok:
            for a, b in itertools.combinations(choice, 2):
                if convolution(a, b) != convolution(b, a):
                    ok = False
                    break
        if not ok:
            continue
        images = {}
        for g in group.elements():
            acc = eps
            for k, a in enumerate(choice):
                for _ in range(g[k]):
                    acc = convolution(acc, a)
            images[g] = acc
        actions.append(GroupAction(pres, group, images))
    return actions
