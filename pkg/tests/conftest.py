"""Shared helpers: rings, parsing shortcuts, and point construction."""

import sys
from pathlib import Path

_src = Path(__file__).resolve().parent.parent / "src"
if str(_src) not in sys.path:
    sys.path.insert(0, str(_src))

import pytest

from gbfan import (
    GF,
    QQ,
    Ideal,
    PointSet,
    PolyRing,
    TermOrder,
    degrevlex,
    enumerate_fan,
    fan_equal,
)


def qring(*names) -> PolyRing:
    return PolyRing(QQ, names)


def fring(p, *names) -> PolyRing:
    return PolyRing(GF(p), names)


def ideal(ring, *texts) -> Ideal:
    return Ideal.from_strings(ring, texts)


def points(ring, coords) -> PointSet:
    """Build a point set from tuples of ints or field-syntax strings."""
    field = ring.field
    pts = []
    for row in coords:
        pts.append(
            tuple(
                field.parse(c) if isinstance(c, str) else field.from_int(c)
                for c in row
            )
        )
    return PointSet(ring, pts)


def weight_refinement(w) -> TermOrder:
    """Ordering realizing a strictly positive weight, degrevlex-refined."""
    return TermOrder(
        [list(w)] + [list(r) for r in degrevlex(len(w)).rows],
        "weight",
        validate=False,
    )


def socle_bijection_holds(spec, first, second) -> bool:
    """Shared fans plus, cone by cone, the bijection t -> socle/t between
    the grid quotient terms missing from one ideal and the quotient basis
    of the other."""
    soc = spec.socle_term()
    grid_terms = set(spec.quotient_terms())
    fan1, fan2 = enumerate_fan(first), enumerate_fan(second)
    if not fan_equal(fan1, fan2):
        return False
    for mb in fan1:
        order = weight_refinement(mb.cone.interior_point())
        o1 = set(first.quotient_basis(order))
        o2 = set(second.quotient_basis(order))
        image = {tuple(s - t for s, t in zip(soc, u)) for u in grid_terms - o1}
        if image != o2:
            return False
    return True


@pytest.fixture
def rxy():
    return qring("x", "y")


@pytest.fixture
def rxyz():
    return qring("x", "y", "z")
