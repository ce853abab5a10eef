"""Sparse multivariate polynomials on a rectangular variable grid.

Variables are doubly indexed X[s,i] with s a row (1..rows) and i a column
(1..cols); tensor powers of the same ring reuse the grid with ``copies`` > 1
(copy 0 is the leftmost tensor factor).  In memory a monomial is a dense
exponent tuple over all grid variables, ranked so that X[1,1] is the largest
variable; on the wire a monomial is the sparse ``[s, i, e]`` triple list.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernel as K
from .errors import GridMismatchError, InputError
from .fields import Field, require_same_field

DEGREVLEX = "degrevlex"
LEX = "lex"
ORDER_CODES = {DEGREVLEX: K.DEGREVLEX, LEX: K.LEX}

_COPY_LETTERS = "XYZ"


def order_code(order: str) -> int:
    try:
        return ORDER_CODES[order]
    except KeyError:
        raise InputError(f"unknown monomial order {order!r}") from None


def monomial_key(exp, order: str):
    """Sort key ascending in the given order (degrevlex or lex)."""
    if order == LEX:
        return exp
    return (sum(exp), tuple(-e for e in reversed(exp)))


@dataclass(frozen=True)
class VariableGrid:
    rows: int
    cols: int
    copies: int = 1

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1 or self.copies < 1:
            raise InputError(f"bad grid dimensions {self!r}")

    @property
    def nvars(self) -> int:
        return self.rows * self.cols * self.copies

    def flat(self, s: int, i: int, copy: int = 0) -> int:
        if not (1 <= s <= self.rows and 1 <= i <= self.cols and 0 <= copy < self.copies):
            raise InputError(f"variable ({s},{i}) copy {copy} outside grid {self}")
        return copy * self.rows * self.cols + (s - 1) * self.cols + (i - 1)

    def unflat(self, k: int):
        block = self.rows * self.cols
        copy, r = divmod(k, block)
        s, i = divmod(r, self.cols)
        return copy, s + 1, i + 1

    def var_name(self, k: int) -> str:
        copy, s, i = self.unflat(k)
        letter = _COPY_LETTERS[copy] if copy < len(_COPY_LETTERS) else f"T{copy}_"
        if s < 10 and i < 10:
            return f"{letter}{s}{i}"
        return f"{letter}{s}_{i}"

    def tensor_power(self, copies: int) -> "VariableGrid":
        return VariableGrid(self.rows, self.cols, copies)


class Polynomial:
    """Immutable sparse polynomial: ``terms`` maps exponent tuple -> coefficient.

    Zero coefficients are never stored.  Arithmetic delegates to the active
    kernel; operands must share grid and field.
    """

    __slots__ = ("grid", "field", "terms")

    def __init__(self, grid: VariableGrid, field: Field, terms: dict):
        self.grid = grid
        self.field = field
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, grid, field):
        return cls(grid, field, {})

    @classmethod
    def constant(cls, grid, field, value):
        c = field.coerce(value)
        if field.is_zero(c):
            return cls(grid, field, {})
        return cls(grid, field, {(0,) * grid.nvars: c})

    @classmethod
    def variable(cls, grid, field, s, i, copy=0):
        e = [0] * grid.nvars
        e[grid.flat(s, i, copy)] = 1
        return cls(grid, field, {tuple(e): field.one})

    @classmethod
    def from_terms(cls, grid, field, entries):
        """Build from (exponent_tuple, coefficient) pairs, merging duplicates."""
        terms = {}
        for e, c in entries:
            e = tuple(e)
            if len(e) != grid.nvars:
                raise GridMismatchError(f"exponent {e} has wrong arity for {grid}")
            c = field.coerce(c)
            v = field.add(terms.get(e, field.zero), c)
            if field.is_zero(v):
                terms.pop(e, None)
            else:
                terms[e] = v
        return cls(grid, field, terms)

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def total_degree(self) -> int:
        """Largest term degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def lead(self, order: str):
        """(exponent, coefficient) of the leading term under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = K.lead_exp(self.terms, order_code(order))
        return e, self.terms[e]

    def sorted_terms(self, order: str = DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0], order), reverse=True)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.grid == other.grid
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.grid, self.field, frozenset(self.terms.items())))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.grid != other.grid:
            raise GridMismatchError(f"grid mismatch: {self.grid} vs {other.grid}")
        require_same_field(self.field, other.field, "polynomials")

    def __add__(self, other):
        self._check(other)
        return Polynomial(self.grid, self.field, K.poly_add(self.terms, other.terms, self.field.char))

    def __sub__(self, other):
        self._check(other)
        return Polynomial(self.grid, self.field, K.poly_sub(self.terms, other.terms, self.field.char))

    def __neg__(self):
        return Polynomial(self.grid, self.field, K.poly_neg(self.terms, self.field.char))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return Polynomial(self.grid, self.field, K.poly_mul(self.terms, other.terms, self.field.char))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value):
        c = self.field.coerce(value)
        return Polynomial(self.grid, self.field, K.poly_scale(self.terms, c, self.field.char))

    def monic(self, order: str) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.lead(order)
        if c == self.field.one:
            return self
        return self.scale(self.field.inv(c))

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, values):
        """Evaluate at a flat list of field elements (one per grid variable)."""
        f = self.field
        acc = f.zero
        for e, c in self.terms.items():
            t = c
            for k, ek in enumerate(e):
                for _ in range(ek):
                    t = f.mul(t, values[k])
            acc = f.add(acc, t)
        return acc

    def evaluate_generic(self, values, ring):
        """Evaluate with values in any commutative ring.

        ``ring`` provides zero/one constants and add/mul/scale callables;
        ``scale(field_coeff, elem)`` multiplies by a base-field coefficient.
        """
        acc = ring.zero
        for e, c in self.terms.items():
            t = ring.one
            for k, ek in enumerate(e):
                for _ in range(ek):
                    t = ring.mul(t, values[k])
            acc = ring.add(acc, ring.scale(c, t))
        return acc

    def substitute(self, images: list["Polynomial"]) -> "Polynomial":
        """Algebra-map substitution: variable k goes to images[k]."""
        target = images[0]
        out = Polynomial.zero(target.grid, target.field)
        for e, c in self.terms.items():
            t = Polynomial.constant(target.grid, target.field, c)
            for k, ek in enumerate(e):
                for _ in range(ek):
                    t = t * images[k]
            out = out + t
        return out

    def contract_copy(self, copy: int, values) -> "Polynomial":
        """Evaluate one tensor factor at scalar values, keeping the others.

        ``values`` is a flat list over the base grid; the result lives on the
        grid with one copy fewer (factors keep their relative order).
        """
        if self.grid.copies < 2:
            raise GridMismatchError("contract_copy needs at least two tensor factors")
        block = self.grid.rows * self.grid.cols
        target = VariableGrid(self.grid.rows, self.grid.cols, self.grid.copies - 1)
        f = self.field
        out = {}
        for e, c in self.terms.items():
            seg = e[copy * block : (copy + 1) * block]
            for k, ek in enumerate(seg):
                for _ in range(ek):
                    c = f.mul(c, values[k])
            if f.is_zero(c):
                continue
            rest = e[: copy * block] + e[(copy + 1) * block :]
            v = f.add(out.get(rest, f.zero), c)
            if f.is_zero(v):
                out.pop(rest, None)
            else:
                out[rest] = v
        return Polynomial(target, f, out)

    def embed(self, target_grid: VariableGrid, copy: int) -> "Polynomial":
        """Reinterpret in a tensor power of the grid, landing in factor ``copy``."""
        if (target_grid.rows, target_grid.cols) != (self.grid.rows, self.grid.cols):
            raise GridMismatchError("tensor embedding needs the same base grid")
        if self.grid.copies != 1:
            raise GridMismatchError("can only embed single-copy polynomials")
        block = self.grid.nvars
        pad_left = (0,) * (copy * block)
        pad_right = (0,) * ((target_grid.copies - copy - 1) * block)
        terms = {pad_left + e + pad_right: c for e, c in self.terms.items()}
        return Polynomial(target_grid, self.field, terms)

    # -- rendering and serialization -----------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for k, ek in enumerate(e):
                if ek == 1:
                    factors.append(self.grid.var_name(k))
                elif ek > 1:
                    factors.append(f"{self.grid.var_name(k)}^{ek}")
            mono = "*".join(factors)
            cs = str(self.field.format(c))
            if mono:
                term = mono if cs == "1" else (f"-{mono}" if cs == "-1" else f"{cs}*{mono}")
            else:
                term = cs
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"Polynomial({self})"

    def to_json(self, order: str = DEGREVLEX):
        """Term list [[ [[s,i,e],...], coeff ], ...], largest term first."""
        if self.grid.copies != 1:
            raise InputError("wire format is defined for single-copy grids only")
        out = []
        for e, c in self.sorted_terms(order):
            mono = []
            for k, ek in enumerate(e):
                if ek:
                    _, s, i = self.grid.unflat(k)
                    mono.append([s, i, ek])
            out.append([mono, self.field.format(c)])
        return out

    @classmethod
    def from_json(cls, grid, field, data):
        entries = []
        try:
            for mono, coeff in data:
                e = [0] * grid.nvars
                for s, i, ek in mono:
                    if ek < 0:
                        raise InputError(f"negative exponent in {mono!r}")
                    e[grid.flat(s, i)] += ek
                entries.append((tuple(e), field.parse(coeff) if isinstance(coeff, str) else field.coerce(coeff)))
        except (TypeError, ValueError) as exc:
            raise InputError(f"malformed polynomial payload: {exc}") from exc
        return cls.from_terms(grid, field, entries)
