"""Monomial ideals: minimal generators, order ideals, set identities."""

from random import Random

import pytest

from gbfan import MonomialIdeal
from gbfan.errors import InfiniteOrderIdeal
from gbfan.random_ideals import random_zero_dim_monomial_ideal
from gbfan.terms import term_str


def test_minimal_generators():
    m = MonomialIdeal(2, [(2, 0), (2, 1), (0, 3), (1, 3)])
    assert m.gens == frozenset({(2, 0), (0, 3)})


def test_membership():
    m = MonomialIdeal(2, [(2, 0), (0, 3)])
    assert m.contains((2, 5))
    assert not m.contains((1, 2))


def test_order_ideal_block_example():
    m = MonomialIdeal(3, [(2, 0, 0), (1, 1, 2), (0, 2, 0), (0, 0, 3)])
    names = ("x", "y", "z")
    got = [term_str(t, names) for t in m.order_ideal()]
    assert got == ["1", "z", "z^2", "y", "y*z", "y*z^2", "x", "x*z", "x*z^2", "x*y", "x*y*z"]


def test_order_ideal_corner_cases():
    assert MonomialIdeal(2, [(1, 0), (0, 1)]).order_ideal() == [(0, 0)]
    assert MonomialIdeal(2, [(0, 0)]).order_ideal() == []
    with pytest.raises(InfiniteOrderIdeal):
        MonomialIdeal(2, [(1, 0)]).order_ideal()


def test_grid_lt_order_ideal_is_socle_divisors():
    m = MonomialIdeal(2, [(2, 0), (0, 2)])
    assert set(m.order_ideal()) == {(0, 0), (1, 0), (0, 1), (1, 1)}


def test_zero_dimensionality():
    assert MonomialIdeal(2, [(2, 0), (0, 2)]).is_zero_dimensional()
    assert not MonomialIdeal(2, [(2, 0)]).is_zero_dimensional()
    assert MonomialIdeal(2, [(0, 0)]).is_zero_dimensional()


def test_sum_and_intersection_complement_identities():
    # complement(I1+I2) = complement(I1) ∩ complement(I2) and
    # complement(I1∩I2) = complement(I1) ∪ complement(I2)
    rng = Random(5)
    for _ in range(60):
        n = rng.choice((2, 3))
        m1 = random_zero_dim_monomial_ideal(rng, n, max_degree=4)
        m2 = random_zero_dim_monomial_ideal(rng, n, max_degree=4)
        o1, o2 = set(m1.order_ideal()), set(m2.order_ideal())
        assert set((m1 + m2).order_ideal()) == o1 & o2
        assert set(m1.intersect(m2).order_ideal()) == o1 | o2


def test_intersection_generators():
    m1 = MonomialIdeal(2, [(1, 0)])
    m2 = MonomialIdeal(2, [(0, 1)])
    assert m1.intersect(m2).gens == frozenset({(1, 1)})
