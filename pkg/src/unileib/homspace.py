"""Characters of the universal algebra and the hom-space bijection.

A character is an n×m scalar matrix d with d[s][i] the image of the generator
class x[s,i]; it satisfies the presentation's defining relations exactly when
the associated linear map (column i goes to sum_s d[s,i]·e_s) is a bracket
homomorphism.  Over a prime field the full character set is enumerated by a
pruned exhaustive search; composition corresponds to the convolution product,
which on matrices is plain matrix multiplication.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from . import linalg
from .algebras import CommutativeAlgebra, LeibnizAlgebra, LinearMap, builtin, current_algebra, is_hom
from .errors import BudgetExceededError, ValidationError
from .fields import PrimeField, require_same_field
from .universal import Presentation, build_presentation
from . import _kernel as K

DEFAULT_BUDGET = 10**8


def resolve_budget(budget=None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get("UAL_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class Character:
    """Algebra map to the base field, stored as its generator-value matrix."""

    def __init__(self, presentation: Presentation, matrix):
        self.presentation = presentation
        self.matrix = tuple(tuple(row) for row in matrix)
        n, m = presentation.h.dim, presentation.g.dim
        if len(self.matrix) != n or any(len(r) != m for r in self.matrix):
            raise ValidationError(f"character matrix must be {n}x{m}")

    def flat_values(self):
        return [c for row in self.matrix for c in row]

    def __eq__(self, other):
        return isinstance(other, Character) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"Character({self.matrix})"

    def to_json(self):
        f = self.presentation.field
        return [[f.format(c) for c in row] for row in self.matrix]


def verify_character(matrix, pres: Presentation) -> bool:
    """True when every defining polynomial vanishes under the substitution."""
    theta = matrix if isinstance(matrix, Character) else Character(pres, matrix)
    values = theta.flat_values()
    fld = pres.field
    return all(
        fld.is_zero(p.evaluate(values))
        for p in pres.universal_polys.values()
        if not p.is_zero()
    )


def counit_character(pres: Presentation) -> Character:
    """The identity matrix: the counit, unit of the convolution monoid."""
    if not pres.is_square:
        raise ValidationError("the counit character needs the square case")
    f = pres.field
    n = pres.h.dim
    return Character(pres, linalg.identity(n, f))


@dataclass
class AlgebraValuedPoint:
    """Solution of the defining relations with entries in a commutative algebra.

    ``entries[s-1][i-1]`` is the coordinate vector (over the algebra basis) of
    the value at x[s,i].
    """

    presentation: Presentation
    algebra: CommutativeAlgebra
    entries: list

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraValuedPoint)
            and self.algebra is other.algebra
            and self.entries == other.entries
        )


class _AlgebraOps:
    """Ring adapter so polynomials can be evaluated inside a CommutativeAlgebra."""

    def __init__(self, A: CommutativeAlgebra):
        self.A = A
        self.zero = [A.field.zero] * A.dim
        self.one = list(A.unit)

    def add(self, x, y):
        f = self.A.field
        return [f.add(a, b) for a, b in zip(x, y)]

    def mul(self, x, y):
        return self.A.multiply(x, y)

    def scale(self, c, x):
        f = self.A.field
        return [f.mul(c, v) for v in x]


def verify_point(point: AlgebraValuedPoint) -> bool:
    """All defining polynomials vanish when evaluated inside the algebra."""
    ops = _AlgebraOps(point.algebra)
    values = [point.entries[s][i] for s in range(len(point.entries)) for i in range(len(point.entries[0]))]
    return all(
        p.evaluate_generic(values, ops) == ops.zero
        for p in point.presentation.universal_polys.values()
        if not p.is_zero()
    )


def gamma(theta, pres: Presentation | None = None) -> LinearMap:
    """The hom-space bijection: character matrices become linear maps.

    Scalar case: f(f_i) = sum_s d[s,i]·e_s, i.e. the matrix itself.  Algebra
    valued case: the map lands in the current algebra h⊗A on the basis
    e_s⊗f_c with index (s-1)·dim(A)+c.  The result is checked to be a bracket
    homomorphism — that is the content of the bijection.
    """
    if isinstance(theta, Character):
        pres = theta.presentation
        if not verify_character(theta, pres):
            raise ValidationError("matrix does not satisfy the defining relations")
        f = LinearMap(pres.field, theta.matrix)
        if not is_hom(f, pres.g, pres.h):
            raise ValidationError("character image is not a homomorphism (internal bug)")
        return f
    if isinstance(theta, AlgebraValuedPoint):
        pres = theta.presentation
        if not verify_point(theta):
            raise ValidationError("point does not satisfy the defining relations")
        A = theta.algebra
        n, m = pres.h.dim, pres.g.dim
        rows = []
        for s in range(n):
            for c in range(A.dim):
                rows.append([theta.entries[s][i][c] for i in range(m)])
        f = LinearMap(pres.field, rows)
        if not is_hom(f, pres.g, current_algebra(pres.h, A)):
            raise ValidationError("point image is not a homomorphism (internal bug)")
        return f
    raise ValidationError(f"cannot apply gamma to {theta!r}")


def lift(f: LinearMap, pres: Presentation, algebra: CommutativeAlgebra | None = None):
    """Inverse of gamma: read the generator values off a homomorphism.

    Scalar case (algebra omitted): f must be a bracket homomorphism g -> h.
    Otherwise f maps into the current algebra h⊗A and the entries are
    extracted blockwise.  Round trip: gamma(lift(f)) == f.
    """
    n, m = pres.h.dim, pres.g.dim
    if algebra is None:
        if not is_hom(f, pres.g, pres.h):
            raise ValidationError("map is not a Leibniz homomorphism")
        theta = Character(pres, f.matrix)
        if not verify_character(theta, pres):
            raise ValidationError("homomorphism does not satisfy the relations (internal bug)")
        return theta
    if not is_hom(f, pres.g, current_algebra(pres.h, algebra)):
        raise ValidationError("map is not a homomorphism into the current algebra")
    if f.rows != n * algebra.dim:
        raise ValidationError("map target dimension does not match h⊗A")
    entries = [
        [[f.matrix[s * algebra.dim + c][i] for c in range(algebra.dim)] for i in range(m)]
        for s in range(n)
    ]
    point = AlgebraValuedPoint(pres, algebra, entries)
    if not verify_point(point):
        raise ValidationError("extracted point fails the relations (internal bug)")
    return point


# -- exhaustive enumeration over prime fields ---------------------------------


def _compiled_relations(pres: Presentation):
    relations = []
    for _, p in sorted(pres.universal_polys.items()):
        if p.is_zero():
            continue
        terms = []
        trigger = 0
        for e, c in p.sorted_terms(pres.order):
            vs = []
            for k, ek in enumerate(e):
                vs.extend([k] * ek)
            if vs:
                trigger = max(trigger, max(vs))
            terms.append((int(c), tuple(vs)))
        relations.append((trigger, terms))
    return relations


def _require_prime(pres: Presentation, p=None) -> int:
    fld = pres.field
    if not isinstance(fld, PrimeField):
        raise ValidationError("exhaustive enumeration needs a prime field")
    if p is not None and fld.p != p:
        raise ValidationError(f"presentation is over GF({fld.p}), not GF({p})")
    return fld.p


def enumerate_characters(pres: Presentation, p: int | None = None, budget=None):
    """All characters over GF(p), in row-major lexicographic matrix order.

    The search assigns matrix entries row by row and rules a subtree out as
    soon as every variable of some defining relation is fixed and the
    relation fails.
    """
    p = _require_prime(pres, p)
    n, m = pres.h.dim, pres.g.dim
    nvars = n * m
    budget = resolve_budget(budget)
    if p**nvars > budget:
        raise BudgetExceededError(p**nvars, budget)
    points = K.enumerate_points(nvars, p, _compiled_relations(pres))
    out = []
    for point in points:
        matrix = [list(point[r * m : (r + 1) * m]) for r in range(n)]
        out.append(Character(pres, matrix))
    return out


def enumerate_endomorphisms(h: LeibnizAlgebra, p: int | None = None, budget=None, pres=None):
    """gamma images of all characters of the square presentation."""
    if pres is None:
        pres = build_presentation(h, h)
    return [gamma(theta) for theta in enumerate_characters(pres, p, budget)]


def enumerate_automorphism_characters(pres: Presentation, p=None, budget=None):
    return [t for t in enumerate_characters(pres, p, budget) if linalg.is_invertible(t.matrix, pres.field)]


def enumerate_automorphisms(h: LeibnizAlgebra, p: int | None = None, budget=None, pres=None):
    """The invertible endomorphisms; returned as linear maps."""
    if pres is None:
        pres = build_presentation(h, h)
    return [gamma(t) for t in enumerate_automorphism_characters(pres, p, budget)]


def brute_force_homomorphisms(source: LeibnizAlgebra, target: LeibnizAlgebra, budget=None):
    """Independent oracle: test every matrix over GF(p) with is_hom.

    Deliberately shares no code with the character search; the two routes
    must produce identical sets.
    """
    require_same_field(source.field, target.field, "algebras")
    fld = source.field
    if not isinstance(fld, PrimeField):
        raise ValidationError("brute force enumeration needs a prime field")
    p = fld.p
    nvars = source.dim * target.dim
    budget = resolve_budget(budget)
    if p**nvars > budget:
        raise BudgetExceededError(p**nvars, budget)
    out = []
    for values in itertools.product(range(p), repeat=nvars):
        matrix = [
            values[r * source.dim : (r + 1) * source.dim] for r in range(target.dim)
        ]
        f = LinearMap(fld, matrix)
        if is_hom(f, source, target):
            out.append(f)
    return out


# -- convolution monoid --------------------------------------------------------


def convolution(t1: Character, t2: Character) -> Character:
    """(t1 ⋆ t2)[s][j] = sum_t t1[s][t] · t2[t][j]; matches map composition."""
    if t1.presentation is not t2.presentation and t1.presentation.to_json() != t2.presentation.to_json():
        raise ValidationError("characters belong to different presentations")
    pres = t1.presentation
    if not pres.is_square:
        raise ValidationError("convolution needs the square case")
    product = linalg.matmul(t1.matrix, t2.matrix, pres.field)
    result = Character(pres, product)
    if not verify_character(result, pres):
        raise ValidationError("convolution left the character variety (internal bug)")
    return result


def convolution_inverse(t: Character):
    """Inverse character when the matrix is invertible, else None."""
    pres = t.presentation
    if not pres.is_square:
        raise ValidationError("convolution inverse needs the square case")
    inv = linalg.invert(t.matrix, pres.field)
    if inv is None:
        return None
    result = Character(pres, inv)
    if not verify_character(result, pres):
        raise ValidationError("inverse matrix is not a character (internal bug)")
    return result


# -- representations ------------------------------------------------------------


@dataclass
class Representation:
    """An m-dimensional representation presented three equivalent ways."""

    character: Character
    linear_map: LinearMap
    matrices: list  # one m×m matrix per basis vector of the represented algebra

    def to_json(self):
        f = self.character.presentation.field
        return [[[f.format(c) for c in row] for row in mat] for mat in self.matrices]


def enumerate_representations(g: LeibnizAlgebra, m: int, p: int | None = None, budget=None):
    """All m-dimensional matrix representations of a Lie algebra over GF(p).

    These are the characters of the universal algebra of (gl(m), g); each one
    is converted to its family of representing matrices and double-checked to
    be a bracket homomorphism into gl(m).
    """
    from .algebras import check_lie

    if not check_lie(g):
        raise ValidationError("representation enumeration expects a Lie algebra")
    fld = g.field
    if not isinstance(fld, PrimeField):
        raise ValidationError("representation enumeration needs a prime field")
    glm = builtin("gl", fld, m=m)
    pres = build_presentation(glm, g)
    out = []
    for theta in enumerate_characters(pres, p, budget):
        f = gamma(theta)
        mats = []
        for i in range(g.dim):
            col = f.column(i)
            mats.append([[col[(a - 1) * m + (b - 1)] for b in range(1, m + 1)] for a in range(1, m + 1)])
        out.append(Representation(theta, f, mats))
    return out
