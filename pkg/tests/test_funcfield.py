from fractions import Fraction
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkcert.errors import NegativeValue, NotExactDivision
from linkcert.funcfield.frobenius import ep_coordinates, is_pth_power
from linkcert.funcfield.poly import BiPoly, poly_gcd
from linkcert.funcfield.ratfunc import RatFunc, clear_denominators
from linkcert.funcfield.valuation import (Coset2, Value2, gauss_residue, gauss_valuation,
                                          rank2_valuation)
from linkcert.scalars import INFINITY, CycloNum, CyclotomicField, PrimeField, RationalField

Q = RationalField()
F3, F5 = PrimeField(3), PrimeField(5)


def poly_strategy(dom, coeffs=st.integers(-3, 3), maxdeg=3):
    exps = st.tuples(st.integers(0, maxdeg), st.integers(0, maxdeg))
    return st.dictionaries(exps, coeffs, max_size=4).map(lambda d: BiPoly(dom, d))


def ratfunc_strategy(dom):
    return st.tuples(poly_strategy(dom), poly_strategy(dom)).filter(
        lambda t: bool(t[1])).map(lambda t: RatFunc(t[0], t[1]))


# -- polynomials -----------------------------------------------------------


def test_gcd_frozen_oracle():
    a, b = BiPoly.alpha(Q), BiPoly.beta(Q)
    f = (a ** 2 - b) * (a + b + 1) ** 2
    g = (a ** 2 - b) * (a - b) * (a + b + 1)
    # gcd computed independently
    expected = a ** 3 + a ** 2 * b + a ** 2 - a * b - b ** 2 - b
    assert poly_gcd(f, g) == expected


@settings(max_examples=60)
@given(poly_strategy(F5), poly_strategy(F5), poly_strategy(F5))
def test_gcd_contains_common_factor(f, g, h):
    if not h or not (f or g):
        return
    d = poly_gcd(f * h, g * h)
    assert d.divides(f * h) and d.divides(g * h)
    assert h.divides(d)


def test_exact_div():
    a = BiPoly.alpha(F3)
    assert (a ** 3 - 1).exact_div(a - 1) == a ** 2 + a + 1
    with pytest.raises(NotExactDivision):
        (a ** 2 + 1).exact_div(a - 1)


def test_fmt_descending_order():
    a, b = BiPoly.alpha(F3), BiPoly.beta(F3)
    assert (a ** 2 * b + a ** 5).fmt() == "a^5 + a^2*b"


def test_inflate_is_frobenius_over_fp():
    a, b = BiPoly.alpha(F5), BiPoly.beta(F5)
    f = a * b + 2 * a + 3
    assert f ** 5 == f.inflate(5)


# -- rational functions ----------------------------------------------------


def test_ratfunc_is_reduced():
    a, b = BiPoly.alpha(Q), BiPoly.beta(Q)
    r = RatFunc((a ** 2 - b) * (a + b + 1) ** 2, (a ** 2 - b) * (a - b) * (a + b + 1))
    assert r == RatFunc(a + b + 1, a - b)
    with pytest.raises(ZeroDivisionError):
        RatFunc(a, BiPoly.zero(Q))


@settings(max_examples=60)
@given(ratfunc_strategy(F5), ratfunc_strategy(F5), ratfunc_strategy(F5))
def test_ratfunc_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    if x:
        assert x * x.inverse() == 1


@settings(max_examples=40)
@given(ratfunc_strategy(Q), ratfunc_strategy(Q))
def test_ratfunc_over_q(x, y):
    if y:
        assert (x / y) * y == x
    assert x - x == 0


def test_clear_denominators_scales_each_row():
    a, b = RatFunc.alpha(F3), RatFunc.beta(F3)
    row = [a / b, 1 / (a + 1), b]
    polys, den = clear_denominators(row)
    assert [RatFunc(p) for p in polys] == [x * RatFunc(den) for x in row]


def test_cyclotomic_coefficients():
    cf = CyclotomicField(3)
    z = RatFunc.const(cf, CycloNum.zeta(3))
    a = RatFunc.alpha(cf)
    assert (a - z) * (a - z * z) * (a - 1) == a ** 3 - 1


# -- valuations ------------------------------------------------------------


def test_rank2_valuation_examples():
    a, b = RatFunc.alpha(F3), RatFunc.beta(F3)
    assert rank2_valuation(a * b) == Value2(-1, -1)
    assert rank2_valuation(b) == Value2(0, -1)
    assert rank2_valuation(a ** 2 * b + a ** 5) == Value2(-2, -1)  # beta dominates
    assert rank2_valuation(a * b / (b ** 2 + a ** 7)) == Value2(-1, 1)
    assert rank2_valuation(RatFunc.zero(F3)).infinite


@settings(max_examples=60)
@given(ratfunc_strategy(F5), ratfunc_strategy(F5))
def test_rank2_valuation_axioms(x, y):
    if not x or not y:
        return
    assert rank2_valuation(x * y) == rank2_valuation(x) + rank2_valuation(y)
    if x + y:
        assert rank2_valuation(x + y) >= min(rank2_valuation(x), rank2_valuation(y))


def test_value_order_is_beta_first():
    assert Value2(5, -1) < Value2(-5, 0)
    assert Value2(-1, 0) < Value2(0, 0)
    assert Value2(0, 0) < Value2.infinity()


def test_coset():
    v = Value2(Fraction(-1, 3), Fraction(-2, 3))
    assert v.coset(3) == Coset2(3, 2, 1)
    assert str(v.coset(3)) == "(2/3,1/3)"
    with pytest.raises(ValueError):
        Value2(Fraction(1, 2), 0).coset(3)


def test_gauss_valuation_and_residue():
    cf = CyclotomicField(3)
    z = CycloNum.zeta(3)
    a = BiPoly.alpha(cf)
    f = a * (1 - z) + BiPoly.const(cf, 3) + BiPoly.beta(cf) * z
    assert gauss_valuation(f) == 0
    assert gauss_residue(f) == BiPoly.beta(F3)
    assert gauss_valuation(BiPoly.const(cf, 9) * a) == 2
    assert gauss_valuation(BiPoly.zero(cf)) is INFINITY
    g = RatFunc(f, a - 1)
    assert gauss_residue(g) == RatFunc(BiPoly.beta(F3), BiPoly.alpha(F3) - 1)
    with pytest.raises(NegativeValue):
        gauss_residue(RatFunc(f, BiPoly.const(cf, 3) * a + 3))


# -- E^p coordinates -------------------------------------------------------


@settings(max_examples=40)
@given(ratfunc_strategy(F3))
def test_ep_coordinates_reassemble(f):
    assert ep_coordinates(f).reassemble() == f


@settings(max_examples=40)
@given(poly_strategy(F3))
def test_pth_power_lives_in_one_coordinate(g):
    ev = ep_coordinates(g ** 3)
    assert all(not ev[m, n] for m in range(3) for n in range(3) if (m, n) != (0, 0))
    assert ev[0, 0] == RatFunc(g)  # read in the variables A, B
    ok, root = is_pth_power(RatFunc(g ** 3))
    assert ok and root == RatFunc(g)


def test_ep_coordinates_example():
    a, b = BiPoly.alpha(F3), BiPoly.beta(F3)
    ev = ep_coordinates(a ** 4 * b + 2 * b ** 3)
    assert ev.support() == [(0, 0), (1, 1)]
    assert ev[1, 1] == RatFunc.alpha(F3)
    assert ev[0, 0] == 2 * RatFunc.beta(F3)
    assert not is_pth_power(a)[0]


def random_poly(rng, dom, terms=3, maxdeg=3):
    return BiPoly(dom, {(rng.randint(0, maxdeg), rng.randint(0, maxdeg)): rng.randint(-3, 3)
                        for _ in range(terms)})


def random_ratfunc(rng, dom):
    while True:
        den = random_poly(rng, dom, 2)
        if den:
            return RatFunc(random_poly(rng, dom), den)


@pytest.mark.parametrize("p", [3, 5])
def test_rank2_valuation_axioms_seeded(p):
    rng = random.Random(500 + p)
    dom = PrimeField(p)
    checked = 0
    while checked < 500:
        x, y = random_ratfunc(rng, dom), random_ratfunc(rng, dom)
        if not x or not y:
            continue
        vx, vy = rank2_valuation(x), rank2_valuation(y)
        assert rank2_valuation(x * y) == vx + vy
        if x + y:
            assert rank2_valuation(x + y) >= min(vx, vy)
        checked += 1


def test_gauss_residue_is_a_homomorphism():
    cf = CyclotomicField(3)
    rng = random.Random(7)
    z = BiPoly.const(cf, CycloNum.zeta(3))
    for _ in range(60):
        f = random_poly(rng, cf) + z * random_poly(rng, cf)
        g = random_poly(rng, cf) * z + random_poly(rng, cf)
        if gauss_valuation(f) < 0 or gauss_valuation(g) < 0:
            continue
        assert gauss_residue(f + g) == gauss_residue(f) + gauss_residue(g)
        assert gauss_residue(f * g) == gauss_residue(f) * gauss_residue(g)


@pytest.mark.parametrize("p", [3, 5])
def test_ep_coordinates_are_ep_linear(p):
    dom = PrimeField(p)
    rng = random.Random(p)
    for _ in range(15):
        f = random_ratfunc(rng, dom)
        g = random_poly(rng, dom, 2, 2)
        if not g:
            continue
        lhs, rhs = ep_coordinates(g ** p * f), ep_coordinates(f)
        for m in range(p):
            for n in range(p):
                assert lhs[m, n] == RatFunc(g) * rhs[m, n]
