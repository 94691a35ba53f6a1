"""Term orderings encoded as full-rank integer weight matrices.

A matrix defines a term ordering by comparing the images M·s and M·t
lexicographically.  Validity requires rank n and, so that 1 is minimal,
that the first nonzero entry of every column (read top-down) is positive.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch, InvalidOrdering

LESS, EQUAL, GREATER = -1, 0, 1


def _rank(rows: tuple[tuple[int, ...], ...]) -> int:
    mat = [[Fraction(x) for x in r] for r in rows]
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                c = mat[i][col]
                mat[i] = [a - c * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def _primitive(vec) -> tuple[int, ...]:
    """Scale a rational vector by a positive rational to coprime integers."""
    fracs = [Fraction(x) for x in vec]
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


class TermOrder:
    """A term ordering given by integer weight rows, compared row by row."""

    __slots__ = ("rows", "tag", "nvars", "_canon")

    def __init__(self, rows, tag: str = "matrix", validate: bool = True):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if not rows or not rows[0]:
            raise InvalidOrdering("empty weight matrix")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise InvalidOrdering("ragged weight matrix")
        if validate:
            for col in range(n):
                lead = next((r[col] for r in rows if r[col]), 0)
                if lead <= 0:
                    raise InvalidOrdering(
                        f"column {col}: first nonzero weight must be positive"
                    )
            if _rank(rows) != n:
                raise InvalidOrdering("weight matrix must have full column rank")
        self.rows = rows
        self.tag = tag
        self.nvars = n
        self._canon = None

    def key(self, exp: tuple[int, ...]) -> tuple[int, ...]:
        """Sort key: the weighted image of an exponent vector."""
        if len(exp) != self.nvars:
            raise DimensionMismatch(
                f"exponent length {len(exp)} != {self.nvars} variables"
            )
        return tuple(sum(w * e for w, e in zip(row, exp)) for row in self.rows)

    def compare(self, s: tuple[int, ...], t: tuple[int, ...]) -> int:
        """Return LESS, EQUAL, or GREATER for s versus t."""
        ks, kt = self.key(s), self.key(t)
        if ks < kt:
            return LESS
        if ks > kt:
            return GREATER
        return EQUAL

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        """Canonical form identifying matrices that define the same ordering.

        Each row is projected orthogonally to the span of the previous kept
        rows (a subtraction of earlier rows, which never changes the induced
        order) and positively scaled to a primitive integer vector.
        """
        if self._canon is not None:
            return self._canon
        kept: list[list[Fraction]] = []
        out: list[tuple[int, ...]] = []
        for row in self.rows:
            v = [Fraction(x) for x in row]
            for b in kept:
                num = sum(a * c for a, c in zip(v, b))
                if num:
                    den = sum(c * c for c in b)
                    f = num / den
                    v = [a - f * c for a, c in zip(v, b)]
            if any(v):
                out.append(_primitive(v))
                kept.append(v)
                if len(out) == self.nvars:
                    break
        self._canon = tuple(out)
        return self._canon

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        if self.tag in ("lex", "deglex", "degrevlex"):
            return self.tag
        return f"{self.tag}{list(map(list, self.rows))}"


def lex(n: int) -> TermOrder:
    rows = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    return TermOrder(rows, "lex", validate=False)


def deglex(n: int) -> TermOrder:
    rows = [[1] * n]
    rows += [[1 if j == i else 0 for j in range(n)] for i in range(n - 1)]
    return TermOrder(rows, "deglex", validate=False)


def degrevlex(n: int) -> TermOrder:
    rows = [[1] * n]
    rows += [[-1 if j == n - 1 - i else 0 for j in range(n)] for i in range(n - 1)]
    return TermOrder(rows, "degrevlex", validate=False)


def weight_order(weights, tiebreak: TermOrder | None = None) -> TermOrder:
    """Weight rows first, completed by a tiebreak ordering (degrevlex)."""
    weights = [list(map(int, w)) for w in (weights if isinstance(weights[0], (list, tuple)) else [weights])]
    n = len(weights[0])
    tb = tiebreak if tiebreak is not None else degrevlex(n)
    if tb.nvars != n:
        raise DimensionMismatch("tiebreak has wrong variable count")
    return TermOrder(weights + [list(r) for r in tb.rows], "weight")


def elimination_order(n: int, block) -> TermOrder:
    """Block ordering that eliminates the given variable indices first."""
    block = set(block)
    if not block:
        return degrevlex(n)
    head = [[1 if i in block else 0 for i in range(n)]]
    return TermOrder(head + [list(r) for r in degrevlex(n).rows], "elim")


def matrix_order(rows) -> TermOrder:
    return TermOrder(rows, "matrix")


_NAMED = {"lex": lex, "deglex": deglex, "degrevlex": degrevlex}


def parse_order(spec: str, n: int) -> TermOrder:
    """Parse an ordering spec: a preset name, ``weight:w1,...``, or
    ``matrix:r11,r12;r21,r22;...`` (rows separated by semicolons)."""
    from .errors import ParseError

    s = spec.strip()
    if s in _NAMED:
        return _NAMED[s](n)
    if s.startswith("weight:"):
        try:
            w = [int(x) for x in s[len("weight:"):].split(",")]
        except ValueError as exc:
            raise ParseError(f"bad weight spec {spec!r}") from exc
        if len(w) != n:
            raise ParseError(f"weight vector length {len(w)} != {n} variables")
        try:
            return weight_order(w)
        except InvalidOrdering as exc:
            raise ParseError(str(exc)) from exc
    if s.startswith("matrix:"):
        try:
            rows = [
                [int(x) for x in row.split(",")]
                for row in s[len("matrix:"):].split(";")
            ]
        except ValueError as exc:
            raise ParseError(f"bad matrix spec {spec!r}") from exc
        try:
            return matrix_order(rows)
        except InvalidOrdering as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown ordering {spec!r}")
