from fractions import Fraction
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linkcert.errors import BadPrime, NegativeValue
from linkcert.scalars import (INFINITY, CycloNum, CyclotomicField, FpScalar, PrimeField,
                              PrimeParam, RationalField, cyclo_residue, cyclo_valuation,
                              fp_linear_independence, vp)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_prime_param_accepts_odd_primes(p):
    assert PrimeParam(p) == p


@pytest.mark.parametrize("bad", [2, 4, 9, 15, 1, 0, -3, 2.5, "x"])
def test_prime_param_rejects(bad):
    with pytest.raises(BadPrime):
        PrimeParam(bad)


def test_prime_param_ceiling():
    with pytest.raises(BadPrime):
        PrimeParam(17)
    assert PrimeParam(17, allow_large=True) == 17


def test_vp():
    assert vp(Fraction(50, 3), 5) == 2
    assert vp(Fraction(2, 25), 5) == -2
    assert vp(0, 5) is INFINITY


def test_fp_arithmetic():
    a, b = FpScalar(7, 5), FpScalar(3, 5)
    assert a == 2
    assert a * b == 1
    assert a / b == 4  # 2 * 3^-1 = 2 * 2
    assert -a == 3
    assert a ** 4 == 1
    with pytest.raises(ZeroDivisionError):
        FpScalar(0, 5).inverse()


residues = st.integers(-50, 50)


@given(residues, residues, residues)
def test_fp_distributive(a, b, c):
    a, b, c = FpScalar(a, 7), FpScalar(b, 7), FpScalar(c, 7)
    assert a * (b + c) == a * b + a * c


def cyclo(p):
    return st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4),
                    min_size=p - 1, max_size=p - 1).map(lambda c: CycloNum(p, c))


def test_zeta_has_order_p():
    z = CycloNum.zeta(5)
    assert z ** 5 == 1
    assert z ** 2 != 1
    assert sum((z ** k for k in range(5)), CycloNum(5)) == 0


def test_inverse_frozen():
    # (1 + zeta)^-1 = -zeta - zeta^3 in Q(zeta_5)
    z = CycloNum.zeta(5)
    assert (1 + z).inverse() == -z - z ** 3


@pytest.mark.parametrize("coeffs,norm", [([2, 1], 11), ([1, -1], 5), ([3, 2, 0, -1], 31)])
def test_norms_match_resultants(coeffs, norm):
    # resultants with Phi_5 computed independently
    assert CycloNum(5, coeffs).norm() == norm


@given(cyclo(5), cyclo(5), cyclo(5))
def test_cyclotomic_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == 1


def test_valuation_and_residue():
    z = CycloNum.zeta(5)
    assert cyclo_valuation(1 - z) == Fraction(1, 4)
    assert cyclo_valuation(CycloNum.from_rational(5, 25)) == 2
    assert cyclo_valuation(CycloNum(5)) is INFINITY
    assert cyclo_residue(3 + z) == 4
    assert cyclo_residue(1 - z) == 0
    with pytest.raises(NegativeValue):
        cyclo_residue(CycloNum.from_rational(5, Fraction(1, 5)))


@given(cyclo(3), cyclo(3))
def test_residue_is_multiplicative(a, b):
    if cyclo_valuation(a) >= 0 and cyclo_valuation(b) >= 0:
        assert cyclo_residue(a * b) == cyclo_residue(a) * cyclo_residue(b)


def test_fp_linear_independence():
    assert fp_linear_independence([[2, 2], [0, 2]], 3)
    assert not fp_linear_independence([[1, 2], [2, 1]], 3)
    assert fp_linear_independence([[FpScalar(1, 5), FpScalar(0, 5)]])


def test_field_descriptors_compare_by_value():
    assert PrimeField(5) == PrimeField(5)
    assert PrimeField(5) != PrimeField(7)
    assert CyclotomicField(3) != PrimeField(3)
    assert RationalField() == RationalField()


def random_cyclo(rng, p):
    coeffs = [Fraction(rng.randint(-6, 6), rng.choice([1, 1, 2, p])) * rng.choice([1, p]) for _ in range(p - 1)]
    return CycloNum(p, coeffs)


@pytest.mark.parametrize("p", [3, 5])
def test_cyclo_valuation_axioms_seeded(p):
    rng = random.Random(1000 + p)
    checked = 0
    while checked < 200:
        z, w = random_cyclo(rng, p), random_cyclo(rng, p)
        if not z or not w:
            continue
        vz, vw = cyclo_valuation(z), cyclo_valuation(w)
        assert cyclo_valuation(z * w) == vz + vw
        if z + w:
            assert cyclo_valuation(z + w) >= min(vz, vw)
        if vz >= 0 and vw >= 0:
            assert cyclo_residue(z + w) == cyclo_residue(z) + cyclo_residue(w)
            assert cyclo_residue(z * w) == cyclo_residue(z) * cyclo_residue(w)
        checked += 1


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_zeta_minus_one_is_uniformizer(p):
    assert cyclo_valuation((CycloNum.zeta(p) - 1) ** (p - 1)) == 1


@pytest.mark.parametrize("p", [3, 5, 7])
def test_fp_agrees_with_integers_on_all_pairs(p):
    for a in range(p):
        for b in range(p):
            x, y = FpScalar(a, p), FpScalar(b, p)
            assert x + y == (a + b) % p
            assert x - y == (a - b) % p
            assert x * y == (a * b) % p
            if b:
                assert (x / y) * y == x
