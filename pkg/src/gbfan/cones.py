"""Exact rational halfspace systems and polyhedral cones in the orthant.

Everything here is Fourier-Motzkin over the rationals: feasibility, explicit
solutions by back-substitution, and irredundancy pruning.  Strict systems
over cones reduce to closed ones by scaling: {A·w > 0, w > 0} is nonempty
exactly when {A·w >= 1, w >= 1} is.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvariantViolation

# One constraint is (coeffs, rhs) and means  sum(coeffs[i] * x_i) >= rhs.


def _normalize(coeffs, rhs):
    """Positively scale so the entries are coprime integers."""
    if all(type(x) is int for x in coeffs) and type(rhs) is int:
        g = 0
        for x in coeffs:
            g = gcd(g, x)
        g = gcd(g, rhs)
        if g > 1:
            return tuple(x // g for x in coeffs), rhs // g
        return tuple(coeffs), rhs
    fracs = [Fraction(x) for x in coeffs] + [Fraction(rhs)]
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints[:-1]), ints[-1]


def _clean(cons):
    """Normalize, drop dominated duplicates, and surface contradictions.

    Returns None when a constraint with zero coefficients is violated.
    """
    best: dict[tuple, object] = {}
    for coeffs, rhs in cons:
        coeffs, rhs = _normalize(coeffs, rhs)
        if not any(coeffs):
            if rhs > 0:
                return None
            continue
        cur = best.get(coeffs)
        if cur is None or rhs > cur:
            best[coeffs] = rhs
    return [(c, r) for c, r in best.items()]


def _eliminate(cons, j):
    """Project away variable j (coefficients beyond j are already zero)."""
    zero, pos, neg = [], [], []
    for c in cons:
        a = c[0][j]
        (zero if a == 0 else pos if a > 0 else neg).append(c)
    out = list(zero)
    for pc, pr in pos:
        for nc, nr in neg:
            ap, an = pc[j], nc[j]
            coeffs = tuple(-an * x + ap * y for x, y in zip(pc, nc))
            out.append((coeffs, -an * pr + ap * nr))
    return out


def solve_system(cons, n):
    """A rational point satisfying every constraint, or None.

    Constraints are (coeffs, rhs) pairs over n variables, read as
    coeffs·x >= rhs with exact rational arithmetic throughout.
    """
    stages = []
    cur = _clean(cons)
    if cur is None:
        return None
    for j in range(n - 1, 0, -1):
        stages.append(cur)
        cur = _clean(_eliminate(cur, j))
        if cur is None:
            return None
    stages.append(cur)
    values: list[Fraction] = []
    for j in range(n):
        stage = stages[n - 1 - j]
        lo = hi = None
        for coeffs, rhs in stage:
            a = coeffs[j]
            if a == 0:
                continue
            rest = Fraction(rhs) - sum(
                Fraction(coeffs[i]) * values[i] for i in range(j)
            )
            bound = rest / a
            if a > 0:
                lo = bound if lo is None or bound > lo else lo
            else:
                hi = bound if hi is None or bound < hi else hi
        if lo is None and hi is None:
            values.append(Fraction(0))
        elif hi is None:
            values.append(lo)
        elif lo is None:
            values.append(hi)
        else:
            if lo > hi:
                return None
            values.append((lo + hi) / 2)
    return tuple(values)


def feasible(cons, n) -> bool:
    cur = _clean(cons)
    if cur is None:
        return False
    for j in range(n - 1, -1, -1):
        cur = _clean(_eliminate(cur, j))
        if cur is None:
            return False
    return True


def _unit(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def strict_positive_solution(vectors, n, zeros=()):
    """w with w >= 1, v·w >= 1 for every v, and z·w = 0 for every z.

    By scaling, such w exists exactly when some strictly positive w has
    v·w > 0 and z·w = 0.  Returns None when the system is infeasible.
    """
    cons = [(tuple(v), 1) for v in vectors]
    cons += [(_unit(n, i), 1) for i in range(n)]
    for z in zeros:
        z = tuple(z)
        cons.append((z, 0))
        cons.append((tuple(-x for x in z), 0))
    return solve_system(cons, n)


def marking_realizable(vectors, n) -> bool:
    """True when a strictly positive weight makes every v·w strictly
    positive."""
    return strict_positive_solution(vectors, n) is not None


def primitive_vector(vec) -> tuple[int, ...]:
    coeffs, _ = _normalize(vec, 0)
    return coeffs


def fraction_point_to_weights(point) -> tuple[int, ...]:
    """Scale a rational point to a primitive integer vector (same ray)."""
    return primitive_vector(point)


def _redundant(v, others, n) -> bool:
    """Is v·w >= 0 implied by the others within the closed orthant?"""
    cons = [(tuple(u), 0) for u in others]
    cons += [(_unit(n, i), 0) for i in range(n)]
    cons.append((tuple(-x for x in v), 1))
    return not feasible(cons, n)


def canonical_inequalities(vectors, n) -> tuple[tuple[int, ...], ...]:
    """Irredundant, primitive, sorted inequality list relative to the
    orthant; the orthant constraints themselves stay implicit."""
    prim = set()
    for v in vectors:
        v = primitive_vector(v)
        if any(x < 0 for x in v):
            prim.add(v)
        # all-nonnegative vectors are implied by w >= 0
    lst = sorted(prim)
    i = 0
    while i < len(lst):
        if _redundant(lst[i], lst[:i] + lst[i + 1 :], n):
            lst.pop(i)
        else:
            i += 1
    return tuple(lst)


@dataclass(frozen=True)
class Cone:
    """A full-dimensional cone inside the nonnegative orthant, recorded by
    its canonical irredundant inequalities (orthant implicit)."""

    nvars: int
    ineqs: tuple[tuple[int, ...], ...]

    @classmethod
    def from_vectors(cls, vectors, n) -> "Cone":
        return cls(n, canonical_inequalities(vectors, n))

    def contains(self, w) -> bool:
        if len(w) != self.nvars:
            return False
        if any(x < 0 for x in w):
            return False
        return all(sum(a * b for a, b in zip(v, w)) >= 0 for v in self.ineqs)

    def interior_point(self) -> tuple[int, ...]:
        """A strictly positive integer weight in the cone interior."""
        sol = strict_positive_solution(self.ineqs, self.nvars)
        if sol is None:
            raise InvariantViolation("cone has empty interior")
        return fraction_point_to_weights(sol)

    def facet_interior_point(self, v):
        """A strictly positive rational point in the relative interior of
        the facet v·w = 0, or None when that facet avoids the open
        orthant."""
        others = [u for u in self.ineqs if u != tuple(v)]
        return strict_positive_solution(others, self.nvars, zeros=[v])

    def __str__(self):
        rows = " ".join("[" + " ".join(map(str, v)) + "]" for v in self.ineqs)
        return rows if rows else "[whole orthant]"
