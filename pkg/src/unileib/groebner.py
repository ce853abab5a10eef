"""Buchberger's algorithm, reduced bases, normal forms, tensor-square reduction.

Pair selection uses the normal strategy (smallest lcm degree first) together
with Buchberger's coprimality and chain criteria.  Output bases are reduced
(monic, fully inter-reduced) and therefore canonical for a given ideal and
order, which keeps every downstream serialization byte-stable.
"""

from __future__ import annotations

import heapq

from . import _kernel as K
from .errors import GridMismatchError, ValidationError
from .fields import require_same_field
from .poly import DEGREVLEX, Polynomial, VariableGrid, monomial_key, order_code


class GroebnerBasis:
    """A reduced Gröbner basis over a fixed grid, field and monomial order.

    The zero ideal is the empty basis; the unit ideal is the basis {1} with
    ``is_unit`` set.  Instances are immutable.
    """

    def __init__(self, grid, field, order, generators):
        self.grid = grid
        self.field = field
        self.order = order
        self.generators = tuple(generators)
        self._compiled = None

    @property
    def is_unit(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)

    def compiled(self):
        """Kernel-format view: list of (lead_exp, terms) pairs."""
        if self._compiled is None:
            code = order_code(self.order)
            self._compiled = [(K.lead_exp(g.terms, code), g.terms) for g in self.generators]
        return self._compiled

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.grid == other.grid
            and self.field == other.field
            and self.order == other.order
            and self.generators == other.generators
        )

    def __repr__(self):
        return f"GroebnerBasis({self.order}, {[str(g) for g in self.generators]})"

    def to_json(self):
        return [g.to_json(self.order) for g in self.generators]


def _check_inputs(polys, grid, field):
    for p in polys:
        if p.grid != grid:
            raise GridMismatchError("generators live on different grids")
        require_same_field(p.field, field, "generators")


def normal_form(p: Polynomial, gb: GroebnerBasis, with_quotients: bool = False):
    """Unique remainder of ``p`` modulo the basis.

    With ``with_quotients`` also returns the cofactor polynomials q_i with
    p = sum(q_i * g_i) + remainder, an exact ideal-membership witness.
    """
    if p.grid != gb.grid:
        raise GridMismatchError("polynomial and basis grids differ")
    require_same_field(p.field, gb.field, "polynomial and basis")
    code = order_code(gb.order)
    if with_quotients:
        rem, quots = K.normal_form(p.terms, gb.compiled(), code, p.field.char, True)
        return (
            Polynomial(p.grid, p.field, rem),
            [Polynomial(p.grid, p.field, q) for q in quots],
        )
    rem = K.normal_form(p.terms, gb.compiled(), code, p.field.char)
    return Polynomial(p.grid, p.field, rem)


def _reduce_terms(terms, basis, code, char):
    return K.normal_form(terms, basis, code, char)


def s_polynomial(f: Polynomial, g: Polynomial, order: str) -> Polynomial:
    """S-polynomial of two monic polynomials."""
    ef, _ = f.lead(order)
    eg, _ = g.lead(order)
    lcm = K.exp_lcm(ef, eg)
    char = f.field.char
    a = K.poly_term_mul(f.terms, K.exp_quot(lcm, ef), f.field.one, char)
    b = K.poly_term_mul(g.terms, K.exp_quot(lcm, eg), g.field.one, char)
    return Polynomial(f.grid, f.field, K.poly_sub(a, b, char))


def buchberger(generators, order: str = DEGREVLEX, grid=None, field=None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal spanned by ``generators``.

    Deterministic: fixed input and order give an identical basis (the reduced
    basis of an ideal is unique up to the order of its elements, which we pin
    by sorting on leading monomials).
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        if grid is None or field is None:
            raise ValidationError("empty generator list needs explicit grid and field")
        return GroebnerBasis(grid, field, order, ())
    grid = gens[0].grid
    field = gens[0].field
    _check_inputs(gens, grid, field)
    code = order_code(order)
    char = field.char

    basis = []  # list of monic Polynomial
    leads = []  # parallel list of lead exponents
    compiled = []  # parallel kernel view

    def push(p: Polynomial):
        p = p.monic(order)
        basis.append(p)
        e, _ = p.lead(order)
        leads.append(e)
        compiled.append((e, p.terms))
        return len(basis) - 1

    pairs = []  # heap of (lcm degree, lcm key, i, j)
    processed = set()

    def queue_pairs(j):
        ej = leads[j]
        for i in range(j):
            lcm = K.exp_lcm(leads[i], ej)
            heapq.heappush(pairs, (sum(lcm), monomial_key(lcm, order), i, j))

    seed = sorted(gens, key=lambda g: monomial_key(g.lead(order)[0], order))
    for g in seed:
        red = _reduce_terms(g.terms, compiled, code, char)
        if red:
            queue_pairs(push(Polynomial(grid, field, red)))

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        if (i, j) in processed:
            continue
        processed.add((i, j))
        ei, ej = leads[i], leads[j]
        lcm = K.exp_lcm(ei, ej)
        # coprimality criterion: disjoint leads give an S-poly reducing to zero
        if lcm == K.exp_mul(ei, ej):
            continue
        # chain criterion: a third lead dividing the lcm, both side pairs done
        skip = False
        for t in range(len(basis)):
            if t in (i, j) or not K.exp_divides(leads[t], lcm):
                continue
            a = (min(i, t), max(i, t))
            b = (min(j, t), max(j, t))
            if a in processed and b in processed:
                skip = True
                break
        if skip:
            continue
        s = s_polynomial(basis[i], basis[j], order)
        red = _reduce_terms(s.terms, compiled, code, char)
        if red:
            queue_pairs(push(Polynomial(grid, field, red)))

    return GroebnerBasis(grid, field, order, _inter_reduce(basis, order))


def _inter_reduce(polys, order):
    """Minimalize then fully reduce; returns monic generators sorted by lead."""
    code = order_code(order)
    work = [p.monic(order) for p in polys if not p.is_zero()]
    # minimalize: drop any element whose lead is divisible by another lead
    work.sort(key=lambda p: monomial_key(p.lead(order)[0], order))
    minimal = []
    for p in work:
        e = p.lead(order)[0]
        if any(K.exp_divides(q.lead(order)[0], e) for q in minimal):
            continue
        minimal.append(p)
    # fully reduce each element against the others until stable
    changed = True
    while changed:
        changed = False
        for i, p in enumerate(minimal):
            others = [(q.lead(order)[0], q.terms) for k, q in enumerate(minimal) if k != i]
            red = K.normal_form(p.terms, others, code, p.field.char)
            q = Polynomial(p.grid, p.field, red).monic(order)
            if q.terms != p.terms:
                if q.is_zero():
                    del minimal[i]
                else:
                    minimal[i] = q
                changed = True
                break
    minimal.sort(key=lambda p: monomial_key(p.lead(order)[0], order))
    return minimal


def tensor_square_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """Gröbner basis of the ideal <q(x)⊗1, 1⊗q(x)> in the doubled ring.

    The two embedded copies use disjoint variable blocks, so running
    Buchberger on their union terminates immediately; the run doubles as a
    correctness check of the embedded generators.
    """
    doubled = gb.grid.tensor_power(2)
    gens = [g.embed(doubled, 0) for g in gb.generators]
    gens += [g.embed(doubled, 1) for g in gb.generators]
    return buchberger(gens, gb.order, grid=doubled, field=gb.field)


def reduce_in_tensor_square(p: Polynomial, j_generators, order: str = DEGREVLEX) -> Polynomial:
    """Normal form of a doubled-ring polynomial modulo both tensor copies of J."""
    if p.grid.copies != 2:
        raise GridMismatchError("expected a polynomial on a doubled grid")
    single = VariableGrid(p.grid.rows, p.grid.cols, 1)
    base = buchberger(list(j_generators), order, grid=single, field=p.field)
    return normal_form(p, tensor_square_basis(base))
