"""Polynomials: parsing, printing, leading terms, shifts, factor-closed."""

from random import Random

import pytest

from gbfan import GF, QQ, LinearShift, PolyRing, deglex, degrevlex, lex, matrix_order
from gbfan.errors import ParseError, RingMismatch, ZeroPolynomial
from gbfan.random_ideals import random_linear_shift

from conftest import fring, qring


def test_parse_and_print_roundtrip(rxy):
    for text in [
        "x^2 + x*y + y^2",
        "x - 1",
        "-x + 1",
        "2*x*y^2 - 1/2*y + 5/6",
        "0",
        "1",
        "x^5 + 2*x^3 + 4/3*y^2 + x + 4/3*y - 8/3",
    ]:
        f = rxy.parse(text)
        assert rxy.parse(f.to_str()) == f


def test_canonical_printing(rxy):
    o = lex(2)
    f = rxy.parse("y^2 + x^2 - x*y")
    assert f.to_str(o) == "x^2 - x*y + y^2"
    assert rxy.parse("-x - 1").to_str(o) == "-x - 1"
    assert rxy.parse("(4/3)*y - x").to_str(o) == "-x + 4/3*y"
    assert rxy.zero().to_str() == "0"


def test_print_gf_residues():
    R = PolyRing(GF(3), ("x", "y"))
    # -1 normalizes to 2 and prints with plus separators only
    f = R.parse("y^2 - x*y - y")
    assert f.to_str(lex(2)) == "2*x*y + y^2 + 2*y"


def test_parse_rejects_implicit_products(rxy):
    with pytest.raises(ParseError):
        rxy.parse("xy^2")  # unknown variable: explicit '*' is required
    with pytest.raises(ParseError):
        rxy.parse("x + ")
    with pytest.raises(ParseError):
        rxy.parse("x / y")


def test_parse_parenthesized_products(rxy):
    f = rxy.parse("(x - 1)*(x - 2)")
    assert f == rxy.parse("x^2 - 3*x + 2")
    g = rxy.parse("(y - 1)*(y - 2)")
    assert g == rxy.parse("y^2 - 3*y + 2")


def test_leading_term_symmetric_poly(rxy):
    f = rxy.parse("x^2 + x*y + y^2")
    e1, c1 = f.leading_term(lex(2))
    assert e1 == (2, 0) and c1 == QQ.one()
    ylex = matrix_order([[0, 1], [1, 0]])
    e2, _ = f.leading_term(ylex)
    assert e2 == (0, 2)


def test_leading_term_linear(rxy):
    f = rxy.parse("x + y")
    for order in (lex(2), deglex(2), degrevlex(2), matrix_order([[3, 1], [0, 1]])):
        assert f.leading_term(order)[0] == (1, 0)
    with pytest.raises(ZeroPolynomial):
        rxy.zero().leading_term(lex(2))


def test_factor_closed_examples():
    R = qring("x", "y", "z")
    assert R.parse("y*z - z").is_factor_closed()
    assert R.parse("x - 1").is_factor_closed()
    assert not R.parse("x^2 + x*y + y^2").is_factor_closed()
    assert R.zero().is_factor_closed()
    assert R.parse("5").is_factor_closed()


def test_factor_closed_leading_term_is_order_free():
    R = qring("x", "y", "z")
    rng = Random(7)
    orders = [lex(3), deglex(3), degrevlex(3)]
    for _ in range(5):
        first = [rng.randint(1, 6) for _ in range(3)]
        rest = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(2)]
        orders.append(matrix_order([first] + [r for r in rest] + list(degrevlex(3).rows)))
    for text in ["y*z - z", "x^2*y + x*y + y + 1", "x^3*y^2*z - x*y*z + z - 2"]:
        f = R.parse(text)
        assert f.is_factor_closed()
        lts = {f.leading_term(o)[0] for o in orders}
        assert len(lts) == 1


def test_poly_arith(rxy):
    f = rxy.parse("x + y")
    assert (f - f).is_zero()
    assert rxy.parse("(x-1)*(x-2)") == rxy.parse("x^2 - 3*x + 2")
    assert f + rxy.zero() == f
    with pytest.raises(RingMismatch):
        f + qring("a", "b").parse("a")


def test_lt_multiplicative(rxy):
    rng = Random(3)
    orders = [lex(2), deglex(2), degrevlex(2)]
    polys = [
        rxy.parse(t)
        for t in ("x^2 + x*y + y^2", "x - 1", "y^3 - 2*y + 5", "x*y + 2", "3*x^2*y - y")
    ]
    for _ in range(40):
        f, g = rng.choice(polys), rng.choice(polys)
        o = rng.choice(orders)
        ef, cf = f.leading_term(o)
        eg, cg = g.leading_term(o)
        eh, ch = (f * g).leading_term(o)
        assert eh == tuple(a + b for a, b in zip(ef, eg))
        assert ch == cf * cg


def test_linear_shift_expansion(rxy):
    one = QQ.one()
    shift = LinearShift((one, one), (QQ.from_int(1), QQ.from_int(-2)))
    assert shift.apply(rxy.parse("x^2")) == rxy.parse("x^2 + 2*x + 1")
    f = rxy.parse("x^2 + x*y + y^2")
    assert shift.apply(f) == rxy.parse("(x+1)^2 + (x+1)*(y-2) + (y-2)^2")
    ident = LinearShift.identity(rxy)
    assert ident.apply(f) == f


def test_linear_shift_roundtrip_and_lt_invariance():
    R = qring("x", "y")
    rng = Random(11)
    orders = [lex(2), deglex(2), degrevlex(2)]
    polys = ["x^2 + x*y + y^2", "x^3 - 2*x*y + 1", "y^4 - y", "x*y^2 + x - 7"]
    for _ in range(25):
        shift = random_linear_shift(rng, R)
        f = R.parse(rng.choice(polys))
        g = shift.apply(f)
        assert shift.inverse().apply(g) == f
        for o in orders:
            assert g.leading_term(o)[0] == f.leading_term(o)[0]


def test_linear_shift_gf():
    R = fring(5, "x", "y")
    F = R.field
    shift = LinearShift((F.from_int(2), F.from_int(3)), (F.from_int(1), F.from_int(4)))
    f = R.parse("x^2 + y")
    g = shift.apply(f)
    assert shift.inverse().apply(g) == f


def test_linear_shift_field_mismatch(rxy):
    from gbfan.errors import FieldMismatch

    F = GF(5)
    gf_shift = LinearShift((F.one(), F.one()), (F.from_int(1), F.zero()))
    with pytest.raises(FieldMismatch):
        gf_shift.apply(rxy.parse("x + y"))


def test_evaluate(rxy):
    f = rxy.parse("x^2 - y + 3")
    assert f.evaluate((QQ.from_int(2), QQ.from_int(1))) == QQ.from_int(6)


def _poly_strategy(ring):
    from hypothesis import strategies as st

    def build(items):
        coeffs = {}
        for e1, e2, c in items:
            coeffs[(e1, e2)] = ring.field.from_int(c)
        return ring.poly(coeffs)

    triple = st.tuples(
        st.integers(min_value=0, max_value=4),
        st.integers(min_value=0, max_value=4),
        st.integers(min_value=-5, max_value=5),
    )
    return st.lists(triple, max_size=5).map(build)


def test_ring_axioms_and_roundtrip_qq():
    from hypothesis import given

    R = qring("x", "y")
    strat = _poly_strategy(R)

    @given(strat, strat, strat)
    def check(f, g, h):
        assert f + g == g + f
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert R.parse(f.to_str()) == f

    check()


def test_ring_axioms_and_roundtrip_gf5():
    from hypothesis import given

    R = fring(5, "x", "y")
    strat = _poly_strategy(R)

    @given(strat, strat)
    def check(f, g):
        assert f * g == g * f
        assert (f - g) + g == f
        assert R.parse(f.to_str()) == f

    check()


def test_hash_and_eq(rxy):
    a = rxy.parse("x + y")
    b = rxy.parse("y + x")
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
