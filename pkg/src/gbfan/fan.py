"""Gröbner fan enumeration restricted to the nonnegative weight orthant.

Two independent routes compute the fan:

* `enumerate_fan` walks marked reduced bases across shared facets, starting
  from the degrevlex basis; neighbors come from a matrix ordering whose first
  row is a facet-interior weight and whose second row points across the facet.
* `fan_oracle_zerodim` never flips: it enumerates all basic sets (order
  ideals whose normal-form matrix is invertible), builds each candidate
  reduced basis by linear algebra, and keeps the ones realizable by a
  strictly positive weight vector.

Cones are deduplicated by leading-term ideal, which is also what the fan
size counts: a single reduced basis can span several cones when different
markings of the same polynomials are realizable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cones import (
    Cone,
    fraction_point_to_weights,
    marking_realizable,
    strict_positive_solution,
)
from .errors import (
    BoundExceeded,
    InconsistentMarking,
    InvariantViolation,
    NotZeroDimensional,
    DimensionMismatch,
    UnsupportedIdealClass,
    ZeroIdeal,
)
from .groebner import Ideal, ReducedGB, normal_form
from .monomials import MonomialIdeal
from .orderings import TermOrder, degrevlex
from .ring import Polynomial


def marking_vectors(elements, markings):
    """Difference vectors lt - t' over every element and support term."""
    out = []
    for g, lt in zip(elements, markings):
        for exp in g.coeffs:
            if exp != lt:
                out.append(tuple(a - b for a, b in zip(lt, exp)))
    return out


def cone_of_marked(elements, markings, nvars: int) -> Cone:
    """Canonical cone of a marked basis; the marking must be achievable by
    a strictly positive weight vector."""
    for g, lt in zip(elements, markings):
        if tuple(lt) not in g.coeffs:
            raise InconsistentMarking(f"marked term not in support of {g!r}")
    vecs = marking_vectors(elements, markings)
    if not marking_realizable(vecs, nvars):
        raise InconsistentMarking("no positive weight realizes this marking")
    return Cone.from_vectors(vecs, nvars)


def cone_of(gb: ReducedGB) -> Cone:
    """Cone of a reduced basis marked by its own ordering."""
    return cone_of_marked(gb.elements, gb.lt_exps, gb.ring.nvars)


@dataclass(frozen=True)
class MarkedBasis:
    """A reduced basis together with its marking and fan cone."""

    basis: ReducedGB
    cone: Cone

    @property
    def markings(self) -> tuple:
        return self.basis.lt_exps

    def lt_key(self) -> tuple:
        return self.basis.lt_key()

    def identity(self):
        """Equality key independent of how the basis was discovered."""
        return (self.lt_key(), frozenset(self.basis.elements), self.cone)


class GroebnerFan:
    """All marked reduced bases of an ideal, one per leading-term ideal."""

    def __init__(self, ring, cones):
        self.ring = ring
        self.cones = tuple(sorted(cones, key=lambda mb: mb.lt_key()))

    @property
    def size(self) -> int:
        return len(self.cones)

    def lt_ideals(self) -> list[MonomialIdeal]:
        return [mb.basis.lt_ideal() for mb in self.cones]

    def cone_set(self) -> frozenset:
        return frozenset(mb.cone for mb in self.cones)

    def bases_as_sets(self) -> set[frozenset]:
        return {frozenset(mb.basis.elements) for mb in self.cones}

    def __iter__(self):
        return iter(self.cones)

    def __len__(self):
        return len(self.cones)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerFan)
            and self.ring == other.ring
            and tuple(mb.identity() for mb in self.cones)
            == tuple(mb.identity() for mb in other.cones)
        )

    def __hash__(self):
        return hash((self.ring, tuple(mb.identity() for mb in self.cones)))


def flip_order(weight, crossing, n: int) -> TermOrder:
    """Ordering for the neighbor across a facet: the facet-interior weight
    first, then the crossing direction, completed by degrevlex."""
    w = fraction_point_to_weights(weight)
    rows = [list(w), [-x for x in crossing]]
    rows += [list(r) for r in degrevlex(n).rows]
    return TermOrder(rows, "flip", validate=False)


def enumerate_fan(ideal: Ideal) -> GroebnerFan:
    """All distinct leading-term ideals with reduced bases and cones.

    Requires a zero-dimensional ideal, or one whose facet flips all stay
    inside the open orthant (principal and linear ideals qualify).
    """
    if ideal.is_zero():
        raise ZeroIdeal("the zero ideal has no Gröbner fan")
    zero_dim = ideal.is_zero_dimensional()
    n = ideal.ring.nvars
    start = ideal.groebner()
    visited: dict[tuple, MarkedBasis] = {}
    stack: list[ReducedGB] = [start]
    while stack:
        gb = stack.pop()
        key = gb.lt_key()
        if key in visited:
            continue
        cone = cone_of(gb)
        visited[key] = MarkedBasis(gb, cone)
        for v in cone.ineqs:
            w = cone.facet_interior_point(v)
            if w is None:
                if not zero_dim:
                    raise UnsupportedIdealClass(
                        "boundary-touching facet on a positive-dimensional ideal"
                    )
                continue
            neighbor = ideal.groebner(flip_order(w, v, n))
            if neighbor.lt_key() not in visited:
                stack.append(neighbor)
    return GroebnerFan(ideal.ring, visited.values())


def unique_gb_fast_check(ideal: Ideal) -> bool:
    """Exact test for a one-cone fan: the reduced basis of any single
    ordering consists of factor-closed polynomials iff the reduced basis
    is the same for every ordering."""
    return all(g.is_factor_closed() for g in ideal.groebner().elements)


def gfan_number(ideal: Ideal) -> int:
    """Number of cones (equivalently, leading-term ideals)."""
    if ideal.is_zero():
        raise ZeroIdeal("the zero ideal has no Gröbner fan")
    if unique_gb_fast_check(ideal):
        return 1
    return enumerate_fan(ideal).size


def fan_equal(f1: GroebnerFan, f2: GroebnerFan) -> bool:
    """Equality of the two cone subdivisions (bases are ignored)."""
    if f1.ring.nvars != f2.ring.nvars:
        raise DimensionMismatch("fans live in different dimensions")
    return f1.cone_set() == f2.cone_set()


def gbasic_sets(fan: GroebnerFan) -> list[list[tuple[int, ...]]]:
    """Per cone, the order ideal complementary to its leading-term ideal."""
    out = []
    for mb in fan.cones:
        lt = mb.basis.lt_ideal()
        if not lt.is_zero_dimensional():
            raise NotZeroDimensional("basic sets require a zero-dimensional ideal")
        out.append(lt.order_ideal())
    return out


def minimal_models(f: Polynomial, ideal: Ideal) -> set[Polynomial]:
    """Normal forms of f across every cone of the fan, deduplicated."""
    if not ideal.is_zero_dimensional():
        raise NotZeroDimensional("model selection requires a zero-dimensional ideal")
    return {normal_form(f, mb.basis) for mb in enumerate_fan(ideal)}


class _NFTable:
    """Normal-form coordinates of power products, in the quotient basis of
    a fixed reduced basis."""

    def __init__(self, ideal: Ideal):
        self.gb = ideal.groebner()
        self.quotient = ideal.quotient_basis(self.gb.order)
        self.index = {t: i for i, t in enumerate(self.quotient)}
        self.ring = ideal.ring
        self._cache: dict[tuple, tuple] = {}

    @property
    def size(self) -> int:
        return len(self.quotient)

    def coords(self, exp: tuple) -> tuple:
        vec = self._cache.get(exp)
        if vec is not None:
            return vec
        field = self.ring.field
        nf = self.gb.reduce(self.ring.monomial(exp))
        row = [field.zero()] * self.size
        for e, c in nf.coeffs.items():
            row[self.index[e]] = c
        vec = tuple(row)
        self._cache[exp] = vec
        return vec


def _candidate_terms(n: int, s: int) -> list[tuple[int, ...]]:
    """Exponents whose divisor closure fits inside an order ideal of size
    s: divisor count <= s (which also caps each exponent at s - 1)."""
    out: list[tuple[int, ...]] = []

    def rec(prefix, count):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        e = 0
        while count * (e + 1) <= s:
            rec(prefix + [e], count * (e + 1))
            e += 1

    rec([], 1)
    out.sort(key=lambda t: (sum(t), t))
    return out


def _reduce_against(rows, vec, field):
    """Reduce vec against echelon rows [(pivot, row)]; None when dependent."""
    v = list(vec)
    for pivot, row in rows:
        c = v[pivot]
        if c:
            f = c / row[pivot]
            v = [a - f * b for a, b in zip(v, row)]
    for i, x in enumerate(v):
        if x:
            return i, tuple(v)
    return None


def _basic_sets_data(ideal: Ideal, bound: int):
    """Yield (order_ideal, corner_terms) for every basic set of the ideal.

    A branch is extended only while the normal-form vectors stay linearly
    independent, so every completed order ideal of full size is basic.
    """
    table = _NFTable(ideal)
    s = table.size
    if s > bound:
        raise BoundExceeded(f"multiplicity {s} exceeds the bound {bound}")
    if s == 0:
        return table, iter(())
    field = ideal.ring.field
    candidates = _candidate_terms(ideal.ring.nvars, s)
    cand_index = {t: i for i, t in enumerate(candidates)}
    nvars = ideal.ring.nvars

    def divisors_present(t, chosen):
        for i in range(nvars):
            if t[i]:
                below = t[:i] + (t[i] - 1,) + t[i + 1 :]
                if below not in chosen:
                    return False
        return True

    def corners(chosen):
        found = set()
        for t in chosen:
            for i in range(nvars):
                up = t[:i] + (t[i] + 1,) + t[i + 1 :]
                if up in chosen:
                    continue
                if divisors_present(up, chosen):
                    found.add(up)
        return sorted(found)

    def walk(start, chosen, rows):
        if len(chosen) == s:
            yield sorted(chosen), corners(chosen)
            return
        for idx in range(start, len(candidates)):
            t = candidates[idx]
            if len(candidates) - idx < s - len(chosen):
                break
            if not divisors_present(t, chosen):
                continue
            reduced = _reduce_against(rows, table.coords(t), field)
            if reduced is None:
                continue
            chosen.add(t)
            yield from walk(idx + 1, chosen, rows + [reduced])
            chosen.remove(t)

    origin = (0,) * nvars
    if origin not in cand_index:
        return table, iter(())
    return table, walk(0, set(), [])


def enumerate_basic_sets(ideal: Ideal, bound: int = 12) -> list[list[tuple[int, ...]]]:
    """All order ideals whose residue classes form a vector-space basis of
    the quotient ring."""
    if not ideal.is_zero_dimensional():
        raise NotZeroDimensional("basic sets require a zero-dimensional ideal")
    table, gen = _basic_sets_data(ideal, bound)
    if table.size == 0:
        return []
    return [terms for terms, _ in gen]


def _solve_square(columns, target, field):
    """Solve M c = target for square M given by columns; M is invertible."""
    s = len(target)
    aug = [[columns[j][i] for j in range(s)] + [target[i]] for i in range(s)]
    for col in range(s):
        pivot = next((i for i in range(col, s) if aug[i][col]), None)
        if pivot is None:
            raise InvariantViolation("singular basic-set matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col] ** (-1)
        aug[col] = [x * inv for x in aug[col]]
        for i in range(s):
            if i != col and aug[i][col]:
                c = aug[i][col]
                aug[i] = [a - c * b for a, b in zip(aug[i], aug[col])]
    return [aug[i][s] for i in range(s)]


def fan_oracle_zerodim(ideal: Ideal, bound: int = 12) -> GroebnerFan:
    """Fan computed independently of facet flips, from basic sets.

    For each basic set, the candidate reduced basis couples every corner
    term with its normal form expressed in the basic set; the candidate is
    kept when some strictly positive weight makes every corner the leading
    term.
    """
    if ideal.is_zero():
        raise ZeroIdeal("the zero ideal has no Gröbner fan")
    if not ideal.is_zero_dimensional():
        raise NotZeroDimensional("the oracle requires a zero-dimensional ideal")
    ring = ideal.ring
    n = ring.nvars
    field = ring.field
    table, gen = _basic_sets_data(ideal, bound)
    found: dict[tuple, MarkedBasis] = {}
    if table.size == 0:
        one = ring.one()
        order = ring.default_order()
        gb = ReducedGB(ring, order, [one])
        return GroebnerFan(ring, [MarkedBasis(gb, Cone.from_vectors([], n))])
    for terms, corner_terms in gen:
        columns = [table.coords(t) for t in terms]
        elements = []
        markings = []
        vectors = []
        for u in corner_terms:
            coeffs = _solve_square(columns, table.coords(u), field)
            poly = {u: field.one()}
            for t, c in zip(terms, coeffs):
                if c:
                    poly[t] = -c
                    vectors.append(tuple(a - b for a, b in zip(u, t)))
            elements.append(Polynomial(ring, poly))
            markings.append(u)
        w = strict_positive_solution(vectors, n)
        if w is None:
            continue
        order = TermOrder(
            [list(fraction_point_to_weights(w))] + [list(r) for r in degrevlex(n).rows],
            "weight",
            validate=False,
        )
        okey = order.key
        pairs = sorted(zip(markings, elements), key=lambda p: okey(p[0]))
        gb = ReducedGB(ring, order, [g for _, g in pairs])
        if gb.lt_exps != tuple(m for m, _ in pairs):
            raise InvariantViolation("oracle marking disagrees with its ordering")
        key = gb.lt_key()
        if key in found:
            raise InvariantViolation("duplicate leading-term ideal in oracle")
        found[key] = MarkedBasis(gb, Cone.from_vectors(vectors, n))
    return GroebnerFan(ring, found.values())
