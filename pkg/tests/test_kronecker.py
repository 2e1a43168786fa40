"""Packed-integer products and determinants against naive expansions."""

from itertools import permutations

from hypothesis import given, settings
from hypothesis import strategies as st

from linkcert import _kronecker


def naive_mul(f, g):
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def naive_add(f, g):
    out = dict(f)
    for e, c in g.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def sign(perm):
    s = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            s = -s
    return s


def leibniz(rows, nvars):
    n = len(rows)
    total = {}
    for perm in permutations(range(n)):
        term = {(0,) * nvars: sign(perm)}
        for r, c in enumerate(perm):
            term = naive_mul(term, rows[r][c])
        total = naive_add(total, term)
    return total


def wrap(f, period):
    out = {}
    for e, c in f.items():
        e = e[:-1] + (e[-1] % period,)
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def polys(nvars, maxdeg=3, coeff=40):
    exps = st.tuples(*[st.integers(0, maxdeg)] * nvars)
    return st.dictionaries(exps, st.integers(-coeff, coeff), max_size=4).map(
        lambda d: {e: c for e, c in d.items() if c})


@given(polys(2), polys(2))
def test_mul_matches_schoolbook(f, g):
    assert _kronecker.mul(f, g) == naive_mul(f, g)


def test_mul_handles_large_and_negative_coefficients():
    f = {(0, 0): -(10 ** 30), (2, 1): 7}
    g = {(1, 0): 3, (0, 3): -(10 ** 25)}
    assert _kronecker.mul(f, g) == naive_mul(f, g)


@st.composite
def square(draw, nvars):
    n = draw(st.integers(1, 4))
    return [[draw(polys(nvars)) for _ in range(n)] for _ in range(n)]


@settings(max_examples=60)
@given(square(2))
def test_det_matches_leibniz(rows):
    assert _kronecker.det(rows) == leibniz(rows, 2)


@settings(max_examples=60)
@given(square(3), st.sampled_from([3, 5]))
def test_det_with_period_matches_wrapped_leibniz(rows, period):
    assert _kronecker.det(rows, period) == wrap(leibniz(rows, 3), period)


def test_det_of_identity_and_zero_row():
    one = {(0, 0): 1}
    assert _kronecker.det([[one, {}], [{}, one]]) == {(0, 0): 1}
    assert _kronecker.det([[{}, {}], [one, one]]) == {}
