"""Fan enumeration, the basic-set oracle, and model selection."""

from random import Random

import pytest

from gbfan import (
    Ideal,
    enumerate_basic_sets,
    enumerate_fan,
    fan_equal,
    fan_oracle_zerodim,
    gbasic_sets,
    gfan_number,
    minimal_models,
    natural_distraction,
    unique_gb_fast_check,
    vanishing_ideal,
)
from gbfan.errors import (
    BoundExceeded,
    NotZeroDimensional,
    DimensionMismatch,
    ZeroIdeal,
)
from gbfan.random_ideals import random_zero_dim_ideal, random_zero_dim_monomial_ideal
from gbfan.terms import term_str

from conftest import fring, ideal, points, qring


def test_principal_binomial_two_cones(rxy):
    fan = enumerate_fan(ideal(rxy, "x + y"))
    assert fan.size == 2
    assert {mb.basis.lt_key() for mb in fan} == {((1, 0),), ((0, 1),)}
    # one reduced basis spans both cones
    assert len(fan.bases_as_sets()) == 1
    assert gfan_number(ideal(rxy, "x + y")) == 2


def test_principal_trinomial_three_cones(rxyz):
    I = ideal(rxyz, "x + y + z")
    assert gfan_number(I) == 3
    fan = enumerate_fan(I)
    assert {mb.basis.lt_key() for mb in fan} == {
        ((1, 0, 0),),
        ((0, 1, 0),),
        ((0, 0, 1),),
    }


def test_symmetric_ideal_two_cones(rxy):
    I = ideal(rxy, "x^2 + x*y + y^2", "x^3", "x^2*y", "x*y^2", "y^3")
    fan = enumerate_fan(I)
    assert fan.size == 2
    assert gfan_number(I) == 2
    oracle = fan_oracle_zerodim(I)
    assert fan == oracle


def test_boolean_points_fan_and_models():
    R = fring(2, "x", "y", "z")
    I = vanishing_ideal(points(R, [(1, 0, 0), (0, 1, 0), (1, 0, 1)]))
    fan = enumerate_fan(I)
    assert fan.size == 2
    models = minimal_models(R.parse("y*z + y"), I)
    assert {m.to_str() for m in models} == {"x + 1", "y"}
    assert minimal_models(R.zero(), I) == {R.zero()}
    member = I.gens[0]
    assert minimal_models(member, I) == {R.zero()}


def test_unique_fast_check(rxy):
    R3 = qring("x", "y", "z")
    I = vanishing_ideal(points(R3, [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)]))
    assert unique_gb_fast_check(I)
    assert gfan_number(I) == 1
    sym = ideal(rxy, "x^2 + x*y + y^2", "x^3", "x^2*y", "x*y^2", "y^3")
    assert not unique_gb_fast_check(sym)


def test_unique_fast_check_mixed_constants(rxy):
    # wrong-order distraction-style generators still give one basis
    I = ideal(
        rxy,
        "x*(x - 1/5)*(x - 2)*(x + 1)",
        "y*(y - 1)*(y - 2)",
        "(x - 2)*(y - 1)*(y - 2)",
        "(x + 1)*(x - 1/5)*(y - 1)",
    )
    assert unique_gb_fast_check(I)
    gb = I.groebner()
    assert {g.to_str(gb.order) for g in gb} == {
        "x^4 - 6/5*x^3 - 9/5*x^2 + 2/5*x",
        "y^2 - 3*y + 2",
        "x^2*y - x^2 + 4/5*x*y - 4/5*x - 1/5*y + 1/5",
    }
    assert gfan_number(I) == 1
    # the same ideal is the distraction of a different monomial ideal,
    # with the constants consumed in a different order
    from gbfan import QQ, MonomialIdeal, distraction_ideal

    other = MonomialIdeal(2, [(4, 0), (0, 2), (2, 1)])
    pi = (
        tuple(QQ.parse(c) for c in ("-1", "1/5", "0", "2")),
        tuple(QQ.parse(c) for c in ("1", "2")),
    )
    assert distraction_ideal(rxy, other, pi).equals(I)


def test_zero_ideal_rejected(rxy):
    with pytest.raises(ZeroIdeal):
        enumerate_fan(Ideal(rxy, []))
    with pytest.raises(ZeroIdeal):
        gfan_number(Ideal(rxy, []))


def test_unit_ideal_single_cone(rxy):
    I = ideal(rxy, "1")
    fan = enumerate_fan(I)
    assert fan.size == 1 and fan.cones[0].cone.ineqs == ()
    assert gfan_number(I) == 1


def test_gbasic_sets(rxy):
    I = ideal(rxy, "(x^2+1)*(x-1)*(x-2)", "(y^2-2)*(y+2)", "x - 1 + y^2 - 2")
    sets = gbasic_sets(enumerate_fan(I))
    assert sets == [[(0, 0), (0, 1)]]
    grid = ideal(rxy, "x^2 - x", "y^2 - y")
    assert gbasic_sets(enumerate_fan(grid)) == [[(0, 0), (0, 1), (1, 0), (1, 1)]]
    with pytest.raises(NotZeroDimensional):
        gbasic_sets(enumerate_fan(ideal(rxy, "x + y")))


def test_gbasic_sets_boolean_demo():
    R = fring(2, "x", "y", "z")
    I = vanishing_ideal(points(R, [(1, 0, 0), (0, 1, 0), (1, 0, 1)]))
    sets = {tuple(s) for s in gbasic_sets(enumerate_fan(I))}
    assert sets == {
        ((0, 0, 0), (0, 0, 1), (1, 0, 0)),  # 1, z, x
        ((0, 0, 0), (0, 0, 1), (0, 1, 0)),  # 1, z, y
    }


def test_fan_equal_basics(rxy):
    f1 = enumerate_fan(ideal(rxy, "x + y"))
    assert fan_equal(f1, f1)
    f2 = enumerate_fan(ideal(rxy, "x - 2*y"))
    assert fan_equal(f1, f2)  # same cones, different bases
    f3 = enumerate_fan(ideal(rxy, "x + y^2"))
    assert not fan_equal(f1, f3)
    with pytest.raises(DimensionMismatch):
        fan_equal(f1, enumerate_fan(ideal(qring("x", "y", "z"), "x + y + z")))


def test_enumerate_basic_sets_symmetric_example(rxy):
    I = ideal(rxy, "x^2 + x*y + y^2", "x^3", "x^2*y", "x*y^2", "y^3")
    sets = {tuple(s) for s in enumerate_basic_sets(I)}
    names = lambda s: [term_str(t, rxy.vars) for t in s]
    as_names = {tuple(names(s)) for s in sets}
    assert ("1", "y", "y^2", "x", "x^2") in as_names  # the symmetric one
    g_basic = {tuple(s) for s in gbasic_sets(enumerate_fan(I))}
    assert g_basic <= sets
    assert len(sets) == 3


def test_single_basic_set_when_fan_is_one_cone(rxy):
    grid = ideal(rxy, "x^2 - x", "y^2 - y")
    sets = enumerate_basic_sets(grid)
    assert len(sets) == 1
    assert sets[0] == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_enumerate_basic_sets_bound(rxy):
    grid = ideal(rxy, "(x^4 - x)*(x-2)*(x-3)*(x+1)", "(y^4 - y)*(y-2)*(y-3)*(y+1)")
    with pytest.raises(BoundExceeded):
        enumerate_basic_sets(grid, bound=12)


def test_oracle_requires_zero_dimensional(rxy):
    with pytest.raises(NotZeroDimensional):
        fan_oracle_zerodim(ideal(rxy, "x + y"))
    with pytest.raises(NotZeroDimensional):
        enumerate_basic_sets(ideal(rxy, "x + y"))


def test_fan_matches_oracle_on_random_ideals():
    rng = Random(17)
    rings = [qring("x", "y"), fring(5, "x", "y"), qring("x", "y", "z")]
    for _ in range(12):
        R = rng.choice(rings)
        I = random_zero_dim_ideal(rng, R, max_mult=7)
        fan = enumerate_fan(I)
        oracle = fan_oracle_zerodim(I)
        assert fan == oracle
        assert unique_gb_fast_check(I) == (fan.size == 1)


def test_natural_distraction_has_one_cone():
    rng = Random(23)
    R = qring("x", "y")
    for _ in range(5):
        M = random_zero_dim_monomial_ideal(rng, 2, max_degree=3)
        D = natural_distraction(R, M)
        assert gfan_number(D) == 1


def test_fan_cones_cover_orthant_by_sampling(rxy):
    rng = Random(31)
    I = ideal(rxy, "x^2 + x*y + y^2", "x^3", "x^2*y", "x*y^2", "y^3")
    fan = enumerate_fan(I)
    for _ in range(25):
        w = (rng.randint(1, 30), rng.randint(1, 30))
        assert any(mb.cone.contains(w) for mb in fan)
