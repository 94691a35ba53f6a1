"""Exact coefficient fields: the rationals and prime fields GF(p).

Rational scalars are `fractions.Fraction` (arbitrary precision, always in
lowest terms with positive denominator).  Prime-field scalars are `GFElement`
residues kept in [0, p).  Both are immutable and hashable, so polynomials can
share them freely across threads.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, ParseError


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin; exact for every p below 3.2e9."""
    if p < 2:
        return False
    for q in (2, 3, 5, 7):
        if p % q == 0:
            return p == q
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class GFElement:
    """A residue modulo a prime p, canonically represented in [0, p)."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _coerce(self, other) -> "GFElement":
        if not isinstance(other, GFElement):
            raise FieldMismatch(f"cannot combine GF({self.p}) element with {other!r}")
        if other.p != self.p:
            raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return GFElement(self.val + other.val, self.p)

    def __sub__(self, other):
        other = self._coerce(other)
        return GFElement(self.val - other.val, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        return GFElement(self.val * other.val, self.p)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.val == 0:
            raise DivisionByZero(f"division by zero in GF({self.p})")
        return GFElement(self.val * pow(other.val, -1, self.p), self.p)

    def __pow__(self, e: int):
        if e < 0 and self.val == 0:
            raise DivisionByZero(f"zero has no inverse in GF({self.p})")
        return GFElement(pow(self.val, e, self.p), self.p)

    def _mixed(self, other):
        raise FieldMismatch(f"cannot combine {other!r} with GF({self.p}) element")

    # reflected forms exist only to turn mixed rational/GF arithmetic
    # into FieldMismatch instead of TypeError
    __radd__ = _mixed
    __rsub__ = _mixed
    __rmul__ = _mixed
    __rtruediv__ = _mixed

    def __neg__(self):
        return GFElement(-self.val, self.p)

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        return (
            isinstance(other, GFElement) and self.p == other.p and self.val == other.val
        )

    def __hash__(self):
        return hash((self.val, self.p))

    def __repr__(self):
        return f"GF({self.p})[{self.val}]"

    def __str__(self):
        return str(self.val)


class RationalField:
    """The field of rational numbers."""

    characteristic = 0
    name = "QQ"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {text!r}") from exc

    def to_str(self, c: Fraction) -> str:
        return str(c)

    def is_one(self, c: Fraction) -> bool:
        return c == 1

    def is_negative(self, c: Fraction) -> bool:
        return c < 0

    def abs(self, c: Fraction) -> Fraction:
        return -c if c < 0 else c

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a prime p; construct through the `GF` factory."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ParseError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def zero(self) -> GFElement:
        return GFElement(0, self.p)

    def one(self) -> GFElement:
        return GFElement(1, self.p)

    def from_int(self, n: int) -> GFElement:
        return GFElement(n, self.p)

    def parse(self, text: str) -> GFElement:
        try:
            return GFElement(int(text.strip()), self.p)
        except ValueError as exc:
            raise ParseError(f"bad GF({self.p}) literal {text!r}") from exc

    def to_str(self, c: GFElement) -> str:
        return str(c.val)

    def is_one(self, c: GFElement) -> bool:
        return c.val == 1

    def is_negative(self, c: GFElement) -> bool:
        return False

    def abs(self, c: GFElement) -> GFElement:
        return c

    def elements(self):
        return (GFElement(i, self.p) for i in range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Return the (cached) prime field with p elements."""
    field = _gf_cache.get(p)
    if field is None:
        field = _gf_cache.setdefault(p, PrimeField(p))
    return field


def parse_field(text: str):
    """Parse a field spec string: ``QQ`` or ``GF(p)``."""
    s = text.strip()
    if s == "QQ":
        return QQ
    if s.startswith("GF(") and s.endswith(")"):
        body = s[3:-1].strip()
        if not body.isdigit():
            raise ParseError(f"bad field spec {text!r}")
        return GF(int(body))
    raise ParseError(f"bad field spec {text!r} (expected QQ or GF(p))")


def arith(a, b, op: str):
    """Dispatch one exact field operation; operands must share a field."""
    if isinstance(a, GFElement) != isinstance(b, GFElement):
        raise FieldMismatch(f"mixed operands {a!r} and {b!r}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def nat_embed(n: int, field):
    """Image of a natural number under the canonical map into the field."""
    if n < 0:
        raise ValueError("nat_embed takes a natural number")
    return field.from_int(n)
