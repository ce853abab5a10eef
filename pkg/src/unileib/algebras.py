"""Leibniz/Lie algebras given by sparse structure constants.

The bracket is stored as tau[(i, j)][s] = coefficient of e_s in [e_i, e_j];
pairs and coordinates that never appear are zero.  Loading from a file always
re-checks the Leibniz identity — every downstream construction assumes it.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import linalg
from .errors import FieldMismatchError, InputError, ValidationError
from .fields import Field, QQ, field_from_json, require_same_field


def _clean_vector(field, vec: dict) -> dict:
    return {s: c for s, c in vec.items() if not field.is_zero(c)}


class LeibnizAlgebra:
    """Finite-dimensional Leibniz algebra over an exact field."""

    def __init__(self, dim: int, field: Field, tau: dict, name: str | None = None):
        if dim < 1:
            raise ValidationError("dimension must be positive")
        self.dim = dim
        self.field = field
        clean = {}
        for (i, j), vec in tau.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ValidationError(f"bracket pair ({i},{j}) outside 1..{dim}")
            if any(not 1 <= s <= dim for s in vec):
                raise ValidationError(f"bracket [{i},{j}] hits coordinates outside 1..{dim}")
            v = _clean_vector(field, vec)
            if v:
                clean[(i, j)] = v
        self.tau = clean
        self.name = name

    def bracket_basis(self, i: int, j: int) -> dict:
        """Sparse coordinates of [e_i, e_j]."""
        return self.tau.get((i, j), {})

    def bracket(self, x, y):
        """Bracket of two coordinate vectors (lists of field elements)."""
        f = self.field
        out = [f.zero] * self.dim
        for (i, j), vec in self.tau.items():
            c = f.mul(x[i - 1], y[j - 1])
            if f.is_zero(c):
                continue
            for s, t in vec.items():
                out[s - 1] = f.add(out[s - 1], f.mul(c, t))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, LeibnizAlgebra)
            and self.dim == other.dim
            and self.field == other.field
            and self.tau == other.tau
        )

    def __repr__(self):
        label = self.name or f"dim{self.dim}"
        return f"LeibnizAlgebra({label} over {self.field!r})"

    def to_json(self):
        brackets = []
        for (i, j) in sorted(self.tau):
            vec = self.tau[(i, j)]
            entry = [[s, str(self.field.format(vec[s]))] for s in sorted(vec)]
            brackets.append([i, j, entry])
        return {
            "name": self.name or "",
            "dim": self.dim,
            "field": self.field.to_json(),
            "lie_autocomplete": False,
            "brackets": brackets,
        }


def check_leibniz(alg: LeibnizAlgebra):
    """Verify [x,[y,z]] = [[x,y],z] - [[x,z],y] on all basis triples.

    Returns (ok, violations) with violations the list of failing (i, j, l).
    """
    f = alg.field
    n = alg.dim
    violations = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for l in range(1, n + 1):
                lhs = [f.zero] * n
                for u, cu in alg.bracket_basis(j, l).items():
                    for a, ca in alg.bracket_basis(i, u).items():
                        lhs[a - 1] = f.add(lhs[a - 1], f.mul(cu, ca))
                rhs = [f.zero] * n
                for u, cu in alg.bracket_basis(i, j).items():
                    for a, ca in alg.bracket_basis(u, l).items():
                        rhs[a - 1] = f.add(rhs[a - 1], f.mul(cu, ca))
                for u, cu in alg.bracket_basis(i, l).items():
                    for a, ca in alg.bracket_basis(u, j).items():
                        rhs[a - 1] = f.sub(rhs[a - 1], f.mul(cu, ca))
                if lhs != rhs:
                    violations.append((i, j, l))
    return not violations, violations


def check_lie(alg: LeibnizAlgebra) -> bool:
    """True when the bracket is alternating: [e_i,e_i] = 0 and antisymmetry."""
    f = alg.field
    for i in range(1, alg.dim + 1):
        if alg.bracket_basis(i, i):
            return False
        for j in range(1, alg.dim + 1):
            vij = alg.bracket_basis(i, j)
            vji = alg.bracket_basis(j, i)
            keys = set(vij) | set(vji)
            for s in keys:
                if vij.get(s, f.zero) != f.neg(vji.get(s, f.zero)):
                    return False
    return True


class CommutativeAlgebra:
    """Unital commutative associative algebra by structure constants.

    mu[(a, b)][c] is the coefficient of f_c in f_a · f_b; ``unit`` is the
    coordinate vector of 1.  Axioms are checked at construction.
    """

    def __init__(self, dim: int, field: Field, mu: dict, unit, name: str | None = None):
        if dim < 1:
            raise ValidationError("dimension must be positive")
        self.dim = dim
        self.field = field
        clean = {}
        for (a, b), vec in mu.items():
            v = _clean_vector(field, vec)
            if v:
                clean[(a, b)] = v
        self.mu = clean
        self.unit = list(unit)
        self.name = name
        self._validate()

    def _validate(self):
        f = self.field
        for (a, b), vec in self.mu.items():
            if vec != self.mu.get((b, a), {}):
                raise ValidationError(f"product not commutative at ({a},{b})")
        for a in range(1, self.dim + 1):
            for b in range(1, self.dim + 1):
                for c in range(1, self.dim + 1):
                    lhs = [f.zero] * self.dim
                    for u, cu in self.mu.get((a, b), {}).items():
                        for d, cd in self.mu.get((u, c), {}).items():
                            lhs[d - 1] = f.add(lhs[d - 1], f.mul(cu, cd))
                    rhs = [f.zero] * self.dim
                    for u, cu in self.mu.get((b, c), {}).items():
                        for d, cd in self.mu.get((a, u), {}).items():
                            rhs[d - 1] = f.add(rhs[d - 1], f.mul(cu, cd))
                    if lhs != rhs:
                        raise ValidationError(f"product not associative at ({a},{b},{c})")
        for a in range(1, self.dim + 1):
            basis = [f.one if k == a - 1 else f.zero for k in range(self.dim)]
            if self.multiply(self.unit, basis) != basis:
                raise ValidationError("unit vector is not a unit")

    def multiply(self, x, y):
        f = self.field
        out = [f.zero] * self.dim
        for (a, b), vec in self.mu.items():
            c = f.mul(x[a - 1], y[b - 1])
            if f.is_zero(c):
                continue
            for s, t in vec.items():
                out[s - 1] = f.add(out[s - 1], f.mul(c, t))
        return out

    def product_space_dim(self) -> int:
        """Dimension of A·A, the span of all pairwise products."""
        cols = []
        for a in range(1, self.dim + 1):
            for b in range(a, self.dim + 1):
                vec = self.mu.get((a, b), {})
                cols.append([vec.get(s, self.field.zero) for s in range(1, self.dim + 1)])
        return len(linalg.column_space_basis(cols, self.field))

    def __repr__(self):
        return f"CommutativeAlgebra({self.name or f'dim{self.dim}'} over {self.field!r})"


def field_algebra(field: Field) -> CommutativeAlgebra:
    """The base field as a 1-dimensional algebra."""
    return CommutativeAlgebra(1, field, {(1, 1): {1: field.one}}, [field.one], name="k")


def truncated_poly_algebra(field: Field, length: int) -> CommutativeAlgebra:
    """k[t]/(t^length) on the basis 1, t, ..., t^(length-1)."""
    if length < 1:
        raise ValidationError("truncation length must be >= 1")
    mu = {}
    for a in range(1, length + 1):
        for b in range(1, length + 1):
            if a + b - 1 <= length:
                mu[(a, b)] = {a + b - 1: field.one}
    unit = [field.one] + [field.zero] * (length - 1)
    return CommutativeAlgebra(length, field, mu, unit, name=f"k[t]/(t^{length})")


class LinearMap:
    """Linear map between coordinate spaces; column j is the image of e_j."""

    def __init__(self, field: Field, matrix):
        self.field = field
        self.matrix = tuple(tuple(row) for row in matrix)
        self.rows = len(self.matrix)
        self.cols = len(self.matrix[0]) if self.matrix else 0
        if any(len(r) != self.cols for r in self.matrix):
            raise ValidationError("ragged matrix")

    @classmethod
    def identity(cls, field, n):
        return cls(field, linalg.identity(n, field))

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(field, linalg.zeros(rows, cols, field))

    def column(self, j):
        return [self.matrix[r][j] for r in range(self.rows)]

    def apply(self, vec):
        if len(vec) != self.cols:
            raise ValidationError("vector length does not match map source")
        return linalg.mat_vec(self.matrix, vec, self.field)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self ∘ other."""
        require_same_field(self.field, other.field, "linear maps")
        if self.cols != other.rows:
            raise ValidationError("composition dimension mismatch")
        return LinearMap(self.field, linalg.matmul(self.matrix, other.matrix, self.field))

    def is_invertible(self) -> bool:
        return self.rows == self.cols and linalg.is_invertible(self.matrix, self.field)

    def inverse(self) -> "LinearMap | None":
        if self.rows != self.cols:
            return None
        inv = linalg.invert(self.matrix, self.field)
        return None if inv is None else LinearMap(self.field, inv)

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.field == other.field
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.field, self.matrix))

    def __repr__(self):
        return f"LinearMap({self.matrix})"

    def to_json(self):
        return [[self.field.format(c) for c in row] for row in self.matrix]


def is_hom(f: LinearMap, source: LeibnizAlgebra, target: LeibnizAlgebra) -> bool:
    """True when f([x,y]) = [f(x), f(y)] on all basis pairs of the source."""
    require_same_field(source.field, target.field, "algebras")
    require_same_field(f.field, source.field, "map and algebras")
    if f.cols != source.dim or f.rows != target.dim:
        raise ValidationError(
            f"map shape {f.rows}x{f.cols} does not match {target.dim}x{source.dim}"
        )
    fld = source.field
    for i in range(1, source.dim + 1):
        fi = f.column(i - 1)
        for j in range(1, source.dim + 1):
            fj = f.column(j - 1)
            lhs = [fld.zero] * target.dim
            for u, cu in source.bracket_basis(i, j).items():
                fu = f.column(u - 1)
                for r in range(target.dim):
                    lhs[r] = fld.add(lhs[r], fld.mul(cu, fu[r]))
            if lhs != target.bracket(fi, fj):
                return False
    return True


def current_algebra(h: LeibnizAlgebra, A: CommutativeAlgebra) -> LeibnizAlgebra:
    """The Leibniz algebra h⊗A with [x⊗a, y⊗b] = [x,y]⊗ab.

    Basis vector e_i⊗f_a gets index (i-1)·dim(A) + a.
    """
    require_same_field(h.field, A.field, "algebra factors")
    m = A.dim
    tau = {}
    for (i, j), vec in h.tau.items():
        for (a, b), prod in A.mu.items():
            entry = {}
            for s, cs in vec.items():
                for c, cc in prod.items():
                    entry[(s - 1) * m + c] = h.field.mul(cs, cc)
            if entry:
                key = ((i - 1) * m + a, (j - 1) * m + b)
                acc = tau.setdefault(key, {})
                for idx, val in entry.items():
                    acc[idx] = h.field.add(acc.get(idx, h.field.zero), val)
    name = f"{h.name or 'h'}⊗{A.name or 'A'}"
    return LeibnizAlgebra(h.dim * m, h.field, tau, name=name)


def derived_subalgebra(h: LeibnizAlgebra):
    """Canonical basis (list of coordinate vectors) of span{[e_i, e_j]}."""
    cols = []
    for (i, j) in sorted(h.tau):
        vec = h.tau[(i, j)]
        cols.append([vec.get(s, h.field.zero) for s in range(1, h.dim + 1)])
    return linalg.column_space_basis(cols, h.field)


# -- built-in algebras -------------------------------------------------------


def _antisymmetrize(field, brackets):
    tau = {}
    for (i, j), vec in brackets.items():
        tau[(i, j)] = dict(vec)
        tau[(j, i)] = {s: field.neg(c) for s, c in vec.items()}
    return tau


def builtin(name: str, field: Field = QQ, **params) -> LeibnizAlgebra:
    """Named example algebras: abelian(n), aff2, sl2, gl(m), heisenberg.

    Parameters may ride along in the name ("abelian(3)", "gl(2)") or be
    passed as keywords (n=3, m=2).
    """
    name = name.strip()
    if "(" in name and name.endswith(")"):
        base, arg = name[:-1].split("(", 1)
        base = base.strip()
        try:
            value = int(arg)
        except ValueError:
            raise InputError(f"bad parameter in builtin name {name!r}") from None
        if base == "abelian":
            params.setdefault("n", value)
        elif base == "gl":
            params.setdefault("m", value)
        else:
            raise InputError(f"builtin {base!r} takes no parameter")
        name = base

    f = field
    if name == "abelian":
        n = params.get("n")
        if not isinstance(n, int) or n < 1:
            raise InputError("abelian needs a positive dimension n")
        return LeibnizAlgebra(n, f, {}, name=f"abelian({n})")
    if name == "aff2":
        tau = _antisymmetrize(f, {(1, 2): {1: f.one}})
        return LeibnizAlgebra(2, f, tau, name="aff2")
    if name == "sl2":
        two = f.coerce(2)
        tau = _antisymmetrize(
            f, {(1, 2): {3: f.one}, (3, 2): {2: f.neg(two)}, (3, 1): {1: two}}
        )
        return LeibnizAlgebra(3, f, tau, name="sl2")
    if name == "heisenberg":
        tau = _antisymmetrize(f, {(1, 2): {3: f.one}})
        return LeibnizAlgebra(3, f, tau, name="heisenberg")
    if name == "gl":
        m = params.get("m")
        if not isinstance(m, int) or m < 1:
            raise InputError("gl needs a positive matrix size m")
        return _gl(f, m)
    raise InputError(f"unknown builtin algebra {name!r}")


def _gl(field, m):
    """gl(m): commutator bracket on elementary matrices E_ab, index (a-1)m + b."""
    idx = lambda a, b: (a - 1) * m + b
    tau = {}
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            for c in range(1, m + 1):
                for d in range(1, m + 1):
                    # [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
                    vec = {}
                    if b == c:
                        vec[idx(a, d)] = field.one
                    if d == a:
                        s = idx(c, b)
                        vec[s] = field.add(vec.get(s, field.zero), field.neg(field.one))
                    vec = _clean_vector(field, vec)
                    if vec:
                        tau[(idx(a, b), idx(c, d))] = vec
    return LeibnizAlgebra(m * m, field, tau, name=f"gl({m})")


BUILTIN_NAMES = ("abelian", "aff2", "sl2", "gl", "heisenberg")


# -- file format --------------------------------------------------------------


def algebra_from_dict(data: dict, validate: bool = True) -> LeibnizAlgebra:
    """Parse the JSON algebra format; rejects non-Leibniz tensors unless told not to."""
    try:
        dim = int(data["dim"])
        field = field_from_json(data["field"])
        raw = data.get("brackets", [])
        autoc = bool(data.get("lie_autocomplete", False))
        name = data.get("name") or None
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed algebra file: {exc}") from exc
    tau = {}
    for entry in raw:
        try:
            i, j, vec = entry
            coords = {int(s): field.parse(c) if isinstance(c, str) else field.coerce(c) for s, c in vec}
        except (TypeError, ValueError) as exc:
            raise InputError(f"malformed bracket entry {entry!r}") from exc
        if (i, j) in tau:
            raise InputError(f"duplicate bracket entry for ({i},{j})")
        tau[(int(i), int(j))] = coords
    if autoc:
        for (i, j) in list(tau):
            if i != j and (j, i) not in tau:
                tau[(j, i)] = {s: field.neg(c) for s, c in tau[(i, j)].items()}
    alg = LeibnizAlgebra(dim, field, tau, name=name)
    if validate:
        ok, violations = check_leibniz(alg)
        if not ok:
            raise ValidationError(
                f"bracket violates the Leibniz identity at triples {violations[:5]}"
            )
    return alg


def load_algebra(path: str, validate: bool = True) -> LeibnizAlgebra:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    return algebra_from_dict(data, validate=validate)


def coerce_algebra(alg: LeibnizAlgebra, field: Field) -> LeibnizAlgebra:
    """Reinterpret the structure constants over another exact field.

    Rational constants map through Fraction reduction mod p; a vanishing
    denominator is an input error.  The Leibniz identity transfers along any
    ring homomorphism, but we re-check for safety.
    """
    if alg.field == field:
        return alg
    tau = {}
    for key, vec in alg.tau.items():
        out = {}
        for s, c in vec.items():
            if isinstance(c, Fraction):
                out[s] = field.coerce(c)
            else:
                out[s] = field.coerce(int(c))
        tau[key] = out
    new = LeibnizAlgebra(alg.dim, field, tau, name=alg.name)
    ok, violations = check_leibniz(new)
    if not ok:
        raise ValidationError(f"coerced algebra violates the Leibniz identity: {violations[:5]}")
    return new
