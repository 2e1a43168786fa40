import random

import pytest

from linkcert.algebra import KMatrix, additive_spec, make_algebra, multiplicative_spec
from linkcert.errors import BadPrime, InvalidParameter, SpecMismatch, UnsupportedVariant
from linkcert.expressions import parse_element
from linkcert.funcfield.ratfunc import RatFunc
from linkcert.linalg import span_dim
from linkcert.scalars import CycloNum, CyclotomicField, PrimeField


def additive(a="a", b="b", p=3):
    return make_algebra(additive_spec(a, b, p))


def multiplicative(a="a", b="b", p=3):
    return make_algebra(multiplicative_spec(a, b, p))


def el(alg, text):
    return parse_element(text, alg)


# reduced norms computed independently as determinants of the splitting matrices
FROZEN_NORMS = [
    (additive, ("a", "b"), "x + y", "a + b"),
    (additive, ("a", "b"), "a*x + y + (b+1)*x^2*y", "a^4 + a^2*b^4 + a^2*b + b^3 + b^2 + b"),
    (multiplicative, ("a", "b"), "x + y", "a + b"),
    (multiplicative, ("a - 1", "b"), "x + y + z*x*y", "a*b + a - 1"),
]


@pytest.mark.parametrize("make,params,elem,norm", FROZEN_NORMS)
def test_frozen_norms(make, params, elem, norm):
    alg = make(*params)
    assert alg.reduced_norm(el(alg, elem)) == parse_element(norm, alg.base)


@pytest.mark.parametrize("make", [additive, multiplicative])
@pytest.mark.parametrize("p", [3, 5])
def test_generator_norms(make, p):
    alg = make("a^2*b - 1", "b + a", p)
    assert alg.reduced_norm(alg.x()) == alg.a
    assert alg.reduced_norm(alg.y()) == alg.b
    assert alg.reduced_norm(alg.one()) == 1


@pytest.mark.parametrize("p", [3, 5])
def test_additive_relations(p):
    alg = additive("a*b", "b", p)
    x, y = alg.x(), alg.y()
    assert x ** p - x == alg.scalar(alg.a)
    assert y ** p == alg.scalar(alg.b)
    assert y * x == (x + 1) * y


@pytest.mark.parametrize("p", [3, 5])
def test_multiplicative_relations(p):
    alg = multiplicative("a - 1", "b", p)
    x, y = alg.x(), alg.y()
    z = RatFunc.const(CyclotomicField(p), CycloNum.zeta(p))
    assert x ** p == alg.scalar(alg.a)
    assert y ** p == alg.scalar(alg.b)
    assert y * x == (x * y).scale(z)


def test_trace_formula_examples():
    alg = additive("a*b", "b", 3)
    assert alg.reduced_trace(alg.monomial(2, 0)) == 2
    assert alg.reduced_trace(alg.monomial(1, 1)) == 0
    u = el(alg, "a + 2*x^2 + b*x*y")
    assert alg.reduced_trace(u) == -alg.field.convert(2)
    m = multiplicative("a", "b", 3)
    assert m.reduced_trace(el(m, "a + x + y")) == 3 * RatFunc.alpha(m.base)


CASES = [
    (additive, ("a^2*b - 1", "b + a")),
    (multiplicative, ("a^2*b - 1", "b + a")),
    (additive, ("a/(b + 1)", "b")),  # non-polynomial parameter: general path
    (multiplicative, ("a", "(b + z)/a")),
]


@pytest.mark.parametrize("make,params", CASES)
@pytest.mark.parametrize("p", [3, 5])
def test_two_multiplication_routes_agree(make, params, p):
    if p == 5 and make is multiplicative and "/" in "".join(params):
        pytest.skip("rational parameters over Q(zeta_5) are covered at p = 3")
    alg = make(*params, p=p)
    rng = random.Random(7)
    for _ in range(3):
        u, w = alg.random_element(rng, 1), alg.random_element(rng, 1)
        direct = alg.multiply(u, w)
        assert direct == alg._multiply_general(u, w)
        assert direct == alg.multiply_via_embedding(u, w)


@pytest.mark.parametrize("make", [additive, multiplicative])
def test_axioms_p3(make):
    alg = make("a^2*b - 1", "b + a", 3)
    rng = random.Random(11)
    for _ in range(4):
        u, v, w = (alg.random_element(rng, 1) for _ in range(3))
        assert (u * v) * w == u * (v * w)
        assert alg.embed(u * v) == alg.embed(u) @ alg.embed(v)
        assert alg.reduced_norm(u * v) == alg.reduced_norm(u) * alg.reduced_norm(v)
        c = RatFunc.alpha(alg.base) + 2
        assert alg.reduced_trace(u.scale(c) + v) == c * alg.reduced_trace(u) + alg.reduced_trace(v)


def test_embedding_identity_and_power():
    alg = additive()
    one = KMatrix.identity(alg)
    assert alg.embed(alg.one()) == one
    assert alg.embed(alg.x()) ** 3 == alg.embed(alg.x() ** 3)
    assert alg.decode(alg.embed(alg.y())) == alg.y()


def test_invalid_parameters():
    with pytest.raises(InvalidParameter):
        additive("a", "0")
    with pytest.raises(InvalidParameter):
        multiplicative("0", "b")
    with pytest.raises(BadPrime):
        additive(p=4)
    with pytest.raises(InvalidParameter):
        # additive symbols live over F_p, not Q(zeta_p)
        make_algebra(type(additive_spec("a", "b", 3))(
            additive_spec("a", "b", 3).variant, 3,
            RatFunc.alpha(CyclotomicField(3)), RatFunc.beta(CyclotomicField(3))))


def test_mixing_algebras_is_rejected():
    a1, a2 = additive("a", "b"), additive("b", "a")
    with pytest.raises(SpecMismatch):
        a1.x() * a2.x()
    with pytest.raises(SpecMismatch):
        a1.element({(0, 0): RatFunc.alpha(CyclotomicField(3))})


def test_trace_zero_basis():
    alg = additive()
    basis = alg.trace_zero_basis()
    assert len(basis) == 8
    assert all(alg.reduced_trace(u) == 0 for u in basis)
    with pytest.raises(UnsupportedVariant):
        multiplicative().trace_zero_basis()


def test_pow_and_scalars():
    alg = additive()
    x = alg.x()
    assert x ** 0 == alg.one()
    assert 2 * x == x + x
    assert x - 1 == -(1 - x)
    with pytest.raises(ValueError):
        x ** -1
    assert str(el(alg, "(a*b)*x*y^2")) == "a*b*x*y^2"
    assert PrimeField(3) == alg.base


@pytest.mark.parametrize("make,p", [(additive, 3), (multiplicative, 3), (additive, 5)])
def test_embed_is_injective(make, p):
    alg = make("a^2*b - 1", "b + a", p)
    vectors = []
    for k in range(p):
        for l in range(p):
            m = alg.embed(alg.monomial(k, l))
            vectors.append([c for row in m.rows for ent in row for c in ent])
    assert span_dim(vectors) == p * p


@pytest.mark.parametrize("make", [additive, multiplicative])
def test_norm_of_scalar_is_pth_power(make):
    alg = make("a - 1", "b", 3)
    lam = RatFunc.alpha(alg.base) * RatFunc.beta(alg.base) + 2
    assert alg.reduced_norm(alg.scalar(lam)) == lam ** 3


def test_embed_is_additive():
    alg = multiplicative("a^2*b - 1", "b + a", 3)
    rng = random.Random(5)
    for _ in range(10):
        u, v = alg.random_element(rng), alg.random_element(rng)
        assert alg.embed(u + v) == alg.embed(u) + alg.embed(v)
