"""Pure-Python computation kernel.

This is the reference implementation of the hot operations; ``_speedups.pyx``
compiles the same algorithms.  Both must stay behaviourally identical — the
test suite cross-checks them whenever the compiled module is importable.

Conventions shared by both kernels:

* monomials are dense exponent tuples; position 0 is the highest-ranked
  variable,
* ``p == 0`` means rational coefficients (``fractions.Fraction``); ``p > 0``
  means residues mod the prime ``p`` stored as plain ints in ``[0, p)``,
* order codes: 0 = degrevlex, 1 = lex,
* a division basis is a list of ``(lead_exponent, terms_dict)`` pairs with
  monic terms.
"""

KERNEL = "pure"

DEGREVLEX = 0
LEX = 1


def exp_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_divides(a, b):
    """True when the monomial a divides the monomial b."""
    return all(x <= y for x, y in zip(a, b))


def exp_quot(b, a):
    """Exponent of b / a; caller guarantees divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def exp_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def exp_deg(a):
    return sum(a)


def exp_cmp(a, b, order):
    """-1, 0 or 1 comparing monomials under the given order code."""
    if order == LEX:
        if a == b:
            return 0
        return 1 if a > b else -1
    da = sum(a)
    db = sum(b)
    if da != db:
        return 1 if da > db else -1
    for k in range(len(a) - 1, -1, -1):
        if a[k] != b[k]:
            return 1 if a[k] < b[k] else -1
    return 0


def lead_exp(terms, order):
    """Largest exponent among the keys of a nonempty term dict."""
    best = None
    for e in terms:
        if best is None or exp_cmp(e, best, order) > 0:
            best = e
    return best


def poly_neg(a, p):
    if p:
        return {e: p - c for e, c in a.items()}
    return {e: -c for e, c in a.items()}


def poly_add(a, b, p):
    out = dict(a)
    if p:
        for e, c in b.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    else:
        for e, c in b.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def poly_sub(a, b, p):
    return poly_add(a, poly_neg(b, p), p)


def poly_scale(a, c, p):
    if p:
        c %= p
        if c == 0:
            return {}
        return {e: v * c % p for e, v in a.items()}
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def poly_term_mul(a, e, c, p):
    """a * (c · X^e)."""
    if p:
        c %= p
    if not c:
        return {}
    if p:
        return {exp_mul(k, e): v * c % p for k, v in a.items()}
    return {exp_mul(k, e): v * c for k, v in a.items()}


def poly_mul(a, b, p):
    out = {}
    if p:
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = exp_mul(ea, eb)
                v = (out.get(e, 0) + ca * cb) % p
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
    else:
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = exp_mul(ea, eb)
                v = out.get(e, 0) + ca * cb
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
    return out


def normal_form(a, basis, order, p, want_quotients=False):
    """Remainder of multivariate division of ``a`` by a monic basis.

    Deterministic rule: always reduce the largest remaining monomial by the
    first basis element whose lead divides it.  With ``want_quotients`` the
    return value is ``(remainder, quotients)`` and the exact identity
    ``a = sum(q_i * g_i) + remainder`` holds.
    """
    work = dict(a)
    rem = {}
    nb = len(basis)
    quots = [{} for _ in range(nb)] if want_quotients else None
    while work:
        e = lead_exp(work, order)
        c = work.pop(e)
        hit = -1
        for i in range(nb):
            if exp_divides(basis[i][0], e):
                hit = i
                break
        if hit < 0:
            rem[e] = c
            continue
        le, terms = basis[hit]
        q = exp_quot(e, le)
        if want_quotients:
            qd = quots[hit]
            prev = qd.get(q)
            qd[q] = c if prev is None else prev + c
        if p:
            for me, mc in terms.items():
                ke = exp_mul(q, me)
                v = (work.get(ke, 0) - c * mc) % p
                if v:
                    work[ke] = v
                else:
                    work.pop(ke, None)
        else:
            for me, mc in terms.items():
                ke = exp_mul(q, me)
                v = work.get(ke, 0) - c * mc
                if v:
                    work[ke] = v
                else:
                    work.pop(ke, None)
    if want_quotients:
        return rem, quots
    return rem


def enumerate_points(nvars, p, relations):
    """All assignments in GF(p)^nvars killing every relation.

    ``relations``: list of ``(trigger, terms)`` with ``trigger`` the largest
    variable index occurring in the relation and ``terms`` a list of
    ``(coeff, var_index_tuple)`` (repetition encodes powers).  Relations are
    evaluated as soon as their trigger variable is assigned, pruning the
    remaining subtree.  Output is sorted lexicographically.
    """
    by_trigger = [[] for _ in range(nvars)]
    for trig, terms in relations:
        by_trigger[trig].append(terms)
    assign = [0] * nvars
    out = []
    k = 0
    while k >= 0:
        if assign[k] >= p:
            assign[k] = 0
            k -= 1
            if k >= 0:
                assign[k] += 1
            continue
        ok = True
        for terms in by_trigger[k]:
            s = 0
            for c, vs in terms:
                t = c
                for v in vs:
                    t = t * assign[v] % p
                s = (s + t) % p
            if s:
                ok = False
                break
        if not ok:
            assign[k] += 1
            continue
        if k == nvars - 1:
            out.append(tuple(assign))
            assign[k] += 1
            continue
        k += 1
    return out
