"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Elements are stored raw for speed: ``fractions.Fraction`` over the rationals,
plain ``int`` residues in ``[0, p)`` over a prime field.  A ``Field`` object
supplies the arithmetic; containers (polynomials, algebras) carry exactly one
field and refuse to mix two of them.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError, ValidationError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n below 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface; see RationalField and PrimeField."""

    kind = None  # "rational" | "prime"
    char = 0  # prime kernel code: 0 means rationals

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def coerce(self, value):
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def format(self, a):
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError


class RationalField(Field):
    kind = "rational"
    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise InputError(f"cannot coerce {value!r} into the rational field")

    def parse(self, text):
        try:
            return Fraction(str(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {text!r}") from exc

    def format(self, a) -> str:
        return str(a)

    def to_json(self):
        return {"type": "rational"}

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(RationalField)


class PrimeField(Field):
    kind = "prime"
    zero = 0
    one = 1

    def __init__(self, p: int):
        p = int(p)
        if not is_prime(p):
            raise ValidationError(f"modulus {p} is not prime")
        self.p = p
        self.char = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return self.mul(value.numerator % self.p, self.inv(value.denominator % self.p))
        raise InputError(f"cannot coerce {value!r} into GF({self.p})")

    def parse(self, text):
        try:
            frac = Fraction(str(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad coefficient literal {text!r}") from exc
        if frac.denominator % self.p == 0:
            raise InputError(f"denominator of {text!r} vanishes mod {self.p}")
        return self.coerce(frac)

    def format(self, a) -> int:
        return a

    def to_json(self):
        return {"type": "prime", "p": self.p}

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))


QQ = RationalField()


def field_from_json(spec) -> Field:
    """Parse the {"type": ...} field descriptor used in algebra files."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise InputError(f"bad field descriptor {spec!r}")
    if spec["type"] == "rational":
        return QQ
    if spec["type"] == "prime":
        if "p" not in spec:
            raise InputError("prime field descriptor needs 'p'")
        return PrimeField(spec["p"])
    raise InputError(f"unknown field type {spec['type']!r}")


def require_same_field(a: Field, b: Field, what: str = "operands"):
    from .errors import FieldMismatchError

    if a != b:
        raise FieldMismatchError(f"{what} live over different fields: {a!r} vs {b!r}")
