"""Cyclic algebras of odd prime degree p in both presentations.

``[a, b)``  (additive / Artin-Schreier, over F_p(alpha, beta)):
    x^p - x = a,  y^p = b,  y x y^-1 = x + 1
``(a, b)``  (multiplicative / Kummer, over Q(zeta_p)(alpha, beta)):
    x^p = a,  y^p = b,  y x y^-1 = zeta x

Elements are coordinate arrays over the basis x^k y^l.  Reduced trace and
norm come from the splitting representation over K = F[xbar]:

    x -> diag(xbar, xbar + 1, ..., xbar + p - 1)      (additive)
    x -> diag(xbar, zeta xbar, ..., zeta^(p-1) xbar)  (multiplicative)
    y -> cyclic shift with b in the bottom-left corner
"""

from dataclasses import dataclass
from enum import Enum
from math import comb

from . import _kronecker
from .errors import InvalidParameter, NotInBaseField, SpecMismatch, UnsupportedVariant
from .funcfield.poly import BiPoly
from .funcfield.ratfunc import RatFunc, RationalFunctionField, common_denominator
from .scalars import CycloNum, CyclotomicField, FpScalar, PrimeField, PrimeParam


class Variant(str, Enum):
    ADDITIVE = "additive"
    MULTIPLICATIVE = "multiplicative"


@dataclass(frozen=True)
class AlgebraSpec:
    variant: Variant
    p: int
    a: RatFunc
    b: RatFunc

    @property
    def base(self):
        return self.a.dom

    def expected_base(self):
        if self.variant is Variant.ADDITIVE:
            return PrimeField(self.p)
        return CyclotomicField(self.p)

    def __str__(self):
        if self.variant is Variant.ADDITIVE:
            return f"[{self.a}, {self.b})"
        return f"({self.a}, {self.b})"


def _as_ratfunc(v, dom):
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, BiPoly):
        return RatFunc(v)
    if isinstance(v, str):
        from .expressions import parse_element

        return parse_element(v, dom)
    return RatFunc.const(dom, v)


def additive_spec(a, b, p):
    """Descriptor of [a, b)_p over F_p(alpha, beta)."""
    dom = PrimeField(p)
    return AlgebraSpec(Variant.ADDITIVE, p, _as_ratfunc(a, dom), _as_ratfunc(b, dom))


def multiplicative_spec(a, b, p):
    """Descriptor of (a, b)_p over Q(zeta_p)(alpha, beta)."""
    dom = CyclotomicField(p)
    return AlgebraSpec(Variant.MULTIPLICATIVE, p, _as_ratfunc(a, dom), _as_ratfunc(b, dom))


def make_algebra(spec, *, allow_large=False):
    """Validate a spec and return the algebra handle."""
    p = PrimeParam(spec.p, allow_large=allow_large)
    if spec.a.dom != spec.expected_base() or spec.b.dom != spec.expected_base():
        raise InvalidParameter(f"{spec.variant.value} symbols need parameters over {spec.expected_base()!r}")
    if not spec.b:
        raise InvalidParameter("b must be nonzero")
    if spec.variant is Variant.MULTIPLICATIVE and not spec.a:
        raise InvalidParameter("a must be nonzero in a multiplicative symbol")
    return CyclicAlgebra(spec, int(p))


class CyclicAlgebra:
    """Validated algebra handle; build it with :func:`make_algebra`."""

    def __init__(self, spec, p):
        self.spec = spec
        self.p = p
        self.variant = spec.variant
        self.base = spec.expected_base()
        self.field = RationalFunctionField(self.base)
        self.a = spec.a
        self.b = spec.b
        self._zero = RatFunc.zero(self.base)
        # _twist[r][k][j]: coefficient of xbar^j in sigma^r(xbar)^k
        base = self.base
        if self.variant is Variant.ADDITIVE:
            self._twist = [
                [[base.convert(comb(k, j) * pow(r, k - j, p)) if j <= k else base.zero for j in range(p)]
                 for k in range(p)]
                for r in range(p)
            ]
        else:
            self._twist = [
                [[CycloNum.zeta(p, r * k) if j == k else base.zero for j in range(p)] for k in range(p)]
                for r in range(p)
            ]
        # same twist on the integer encoding: binomial weights, or a zeta shift
        self._int_twist = [[[comb(k, j) * r ** (k - j) for j in range(k + 1)] for k in range(p)]
                           for r in range(p)]
        self._polynomial_ab = self.a.is_polynomial() and self.b.is_polynomial()

    def __repr__(self):
        return f"CyclicAlgebra({self.spec})"

    # -- elements ---------------------------------------------------------

    def element(self, coeffs):
        """Element from {(k, l): coefficient} or a p x p nested sequence."""
        p = self.p
        grid = [[self._zero] * p for _ in range(p)]
        items = coeffs.items() if isinstance(coeffs, dict) else (
            ((k, l), c) for k, row in enumerate(coeffs) for l, c in enumerate(row))
        for (k, l), c in items:
            grid[k][l] = self._scalar(c)
        return AlgElem(self, tuple(tuple(r) for r in grid))

    def _scalar(self, c):
        if isinstance(c, RatFunc):
            if c.dom != self.base:
                raise SpecMismatch(f"coefficient over {c.dom!r}, algebra over {self.base!r}")
            return c
        if isinstance(c, BiPoly):
            return RatFunc(c)
        return RatFunc.const(self.base, c)

    def zero(self):
        return self.element({})

    def one(self):
        return self.element({(0, 0): 1})

    def scalar(self, c):
        return self.element({(0, 0): c})

    def monomial(self, k, l, c=1):
        return self.element({(k, l): c})

    def x(self):
        return self.monomial(1, 0)

    def y(self):
        return self.monomial(0, 1)

    def random_element(self, rng, degree=2, zero_constant=False):
        """Coefficients: random polynomials of total degree <= degree, small entries."""
        p = self.p
        base = self.base
        grid = []
        for k in range(p):
            row = []
            for l in range(p):
                if zero_constant and k == 0 and l == 0:
                    row.append(self._zero)
                    continue
                terms = {}
                for m in range(degree + 1):
                    for n in range(degree + 1 - m):
                        terms[(m, n)] = base.random_small(rng)
                row.append(RatFunc(BiPoly(base, terms)))
            grid.append(tuple(row))
        return AlgElem(self, tuple(grid))

    def trace_zero_basis(self):
        """The p^2 - 1 monomials x^k y^l with (k, l) != (p - 1, 0)."""
        if self.variant is not Variant.ADDITIVE:
            raise UnsupportedVariant("trace-zero monomial basis is only defined for [a, b)")
        p = self.p
        return [self.monomial(k, l) for k in range(p) for l in range(p) if (k, l) != (p - 1, 0)]

    # -- K = F[xbar] arithmetic --------------------------------------------

    def _twisted(self, coeffs, r):
        """x-polynomial sum c_k sigma^r(x)^k, as xbar-coefficients."""
        if r == 0:
            return list(coeffs)
        twist = self._twist[r]
        out = [self._zero] * self.p
        for k, c in enumerate(coeffs):
            if not c.num.terms:
                continue
            row = twist[k]
            for j in range(self.p):
                t = row[j]
                if not self.base.is_zero(t):
                    out[j] = out[j] + RatFunc(c.num.scale(t), c.den, reduced=True)
        return out

    def _kmul_raw(self, u, v):
        """Unreduced product of two xbar-polynomials with RatFunc coefficients."""
        n = len(u) + len(v) - 1
        if all(c.den.is_one() for c in u) and all(c.den.is_one() for c in v):
            U = {(m, nn, e): c for e, f in enumerate(u) for (m, nn), c in f.num.terms.items()}
            V = {(m, nn, e): c for e, f in enumerate(v) for (m, nn), c in f.num.terms.items()}
            if not U or not V:
                return [self._zero] * n
            W = self.base.poly_mul(U, V)
            parts = [{} for _ in range(n)]
            for (m, nn, e), c in W.items():
                parts[e][(m, nn)] = c
            return [RatFunc(BiPoly._raw(self.base, t)) for t in parts]
        out = [self._zero] * n
        for i, c1 in enumerate(u):
            if not c1:
                continue
            for j, c2 in enumerate(v):
                if c2:
                    out[i + j] = out[i + j] + c1 * c2
        return out

    def _kreduce(self, coeffs):
        """Reduce modulo xbar^p - xbar - a (additive) or xbar^p - a (multiplicative)."""
        p = self.p
        c = list(coeffs) + [self._zero] * max(0, p - len(coeffs))
        additive = self.variant is Variant.ADDITIVE
        for e in range(len(c) - 1, p - 1, -1):
            t = c[e]
            if not t.num.terms:
                continue
            c[e - p] = c[e - p] + t * self.a
            if additive:
                c[e - p + 1] = c[e - p + 1] + t
        return tuple(c[:p])

    def _kmul(self, u, v):
        return self._kreduce(self._kmul_raw(u, v))

    # -- integer fast paths ------------------------------------------------
    #
    # With polynomial coefficients everywhere, products are done on sparse
    # dicts keyed (m, n, k, l) in one Kronecker product per y-degree, then
    # reduced with x^p = x + a (or a) and y^p = b.

    def _twist_ints(self, terms, r):
        """sigma^r applied to the x-variable (key slot 2) of an integer encoding."""
        if r == 0:
            return terms
        out = {}
        if self.variant is Variant.ADDITIVE:
            table = self._int_twist[r]
            for key, c in terms.items():
                k = key[2]
                for j, t in enumerate(table[k]):
                    kk = key[:2] + (j,) + key[3:]
                    out[kk] = out.get(kk, 0) + c * t
        else:
            p = self.p
            for key, c in terms.items():
                kk = key[:-1] + ((key[-1] + r * key[2]) % p,)
                out[kk] = out.get(kk, 0) + c
        return out

    def _add_into(self, dst, key, c):
        base = self.base
        if key in dst:
            v = base.add(dst[key], c)
            if base.is_zero(v):
                del dst[key]
            else:
                dst[key] = v
        else:
            dst[key] = c

    def _times_param(self, terms, param):
        """terms (keys (m, n, ...)) times a polynomial parameter of F."""
        width = len(next(iter(terms)))
        pad = (0,) * (width - 2)
        ptimes = {(m, n) + pad: c for (m, n), c in param.num.terms.items()}
        return self.base.poly_mul(terms, ptimes)

    def _fold_axis(self, terms, axis, relation):
        """Reduce exponents >= p on one key slot by x^p = x + a / a, or y^p = b."""
        p = self.p
        low, high = {}, {}
        for key, c in terms.items():
            e = key[axis]
            if e >= p:
                high[key[:axis] + (e - p,) + key[axis + 1:]] = c
            else:
                low[key] = c
        if not high:
            return low
        if relation == "x" and self.variant is Variant.ADDITIVE:
            for key, c in high.items():
                self._add_into(low, key[:axis] + (key[axis] + 1,) + key[axis + 1:], c)
        param = self.b if relation == "y" else self.a
        for key, c in self._times_param(high, param).items():
            self._add_into(low, key, c)
        return self._fold_axis(low, axis, relation) if any(k[axis] >= p for k in low) else low

    def _multiply_poly(self, u, w):
        p, base = self.p, self.base
        uall, wall = {}, {}
        for k in range(p):
            for l in range(p):
                for (m, n), c in u.coeffs[k][l].num.terms.items():
                    uall[(m, n, k, l)] = c
                for (m, n), c in w.coeffs[k][l].num.terms.items():
                    wall[(m, n, k, l)] = c
        if not uall or not wall:
            return self.zero()
        ui, du = base.to_ints(uall)
        wi, dw = base.to_ints(wall)
        ucols = {}
        for key, c in ui.items():
            ucols.setdefault(key[3], {})[key[:3] + (0,) + key[4:]] = c
        acc = {}
        for l1, col in ucols.items():
            for key, c in _kronecker.mul(col, self._twist_ints(wi, l1)).items():
                kk = key[:3] + (key[3] + l1,) + key[4:]
                acc[kk] = acc.get(kk, 0) + c
        terms = base.from_ints(acc, du * dw)
        if terms:
            terms = self._fold_axis(terms, 2, "x")
        if terms:
            terms = self._fold_axis(terms, 3, "y")
        return self._from_klterms(terms)

    def _from_klterms(self, terms):
        p, base = self.p, self.base
        grid = [[{} for _ in range(p)] for _ in range(p)]
        for (m, n, k, l), c in terms.items():
            grid[k][l][(m, n)] = c
        return AlgElem(self, tuple(tuple(RatFunc(BiPoly._raw(base, t)) if t else self._zero for t in row)
                                   for row in grid))

    # -- products -----------------------------------------------------------

    def multiply(self, u, w):
        """Product from the commutation rule y^l x^k = sigma^l(x)^k y^l."""
        self._check(u)
        self._check(w)
        if self._polynomial_ab and u.is_polynomial() and w.is_polynomial():
            return self._multiply_poly(u, w)
        return self._multiply_general(u, w)

    def _multiply_general(self, u, w):
        p = self.p
        ucols = [[u.coeffs[k][l] for k in range(p)] for l in range(p)]
        wcols = [[w.coeffs[k][l] for k in range(p)] for l in range(p)]
        acc = [[self._zero] * p for _ in range(p)]  # acc[l][k]
        for l1 in range(p):
            if not any(ucols[l1]):
                continue
            for l2 in range(p):
                if not any(wcols[l2]):
                    continue
                prod = self._kmul(ucols[l1], self._twisted(wcols[l2], l1))
                slot = l1 + l2
                if slot >= p:
                    slot -= p
                    prod = [c * self.b for c in prod]
                col = acc[slot]
                for k in range(p):
                    if prod[k]:
                        col[k] = col[k] + prod[k]
        return AlgElem(self, tuple(tuple(acc[l][k] for l in range(p)) for k in range(p)))

    def multiply_via_embedding(self, u, w):
        """Second multiplication path: embed, multiply over K, decode."""
        return self.decode(self.embed(u) @ self.embed(w))

    def _check(self, u):
        if not isinstance(u, AlgElem):
            raise TypeError(f"expected an algebra element, got {type(u).__name__}")
        if u.algebra is not self and u.algebra.spec != self.spec:
            raise SpecMismatch(f"element of {u.algebra.spec} used in {self.spec}")

    # -- splitting representation -----------------------------------------

    def embed(self, u):
        """p x p matrix over K representing u."""
        self._check(u)
        p = self.p
        cols = [[u.coeffs[k][l] for k in range(p)] for l in range(p)]
        rows = []
        for r in range(p):
            row = []
            for s in range(p):
                l = (s - r) % p
                entry = self._twisted(cols[l], r)
                if r + l >= p:
                    entry = [c * self.b for c in entry]
                row.append(tuple(entry))
            rows.append(tuple(row))
        return KMatrix(self, tuple(rows))

    def decode(self, mat):
        """Inverse of embed on its image: c_{k,l} is the xbar^k coefficient of entry (0, l)."""
        p = self.p
        return AlgElem(self, tuple(tuple(mat.rows[0][l][k] for l in range(p)) for k in range(p)))

    def _land_in_base(self, kelem, what):
        for j in range(1, self.p):
            if kelem[j]:
                raise NotInBaseField(f"{what} has a nonzero xbar^{j} coordinate: {kelem[j]}")
        return kelem[0]

    def reduced_trace(self, u):
        self._check(u)
        p = self.p
        diag = [u.coeffs[k][0] for k in range(p)]
        total = [self._zero] * p
        for r in range(p):
            for j, c in enumerate(self._twisted(diag, r)):
                if c:
                    total[j] = total[j] + c
        return self._land_in_base(total, "reduced trace")

    def reduced_norm(self, u):
        """Determinant of embed(u), returned as an element of F."""
        mat = self.embed(u)
        return self._land_in_base(mat.det(), "reduced norm")


class KMatrix:
    """p x p matrix over K = F[xbar]; entries are reduced xbar-coefficient tuples."""

    def __init__(self, algebra, rows):
        self.algebra = algebra
        self.rows = rows

    @property
    def p(self):
        return self.algebra.p

    def __eq__(self, other):
        if not isinstance(other, KMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        rows = tuple(
            tuple(tuple(x + y for x, y in zip(e1, e2)) for e1, e2 in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows))
        return KMatrix(self.algebra, rows)

    def is_polynomial(self):
        return all(c.den.is_one() for row in self.rows for ent in row for c in ent)

    def __matmul__(self, other):
        alg = self.algebra
        if alg._polynomial_ab and self.is_polynomial() and other.is_polynomial():
            return self._matmul_poly(other)
        p = alg.p
        zero = alg._zero
        rows = []
        for i in range(p):
            row = []
            for j in range(p):
                acc = [zero] * p
                for k in range(p):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if any(a) and any(b):
                        for t, c in enumerate(alg._kmul(a, b)):
                            if c:
                                acc[t] = acc[t] + c
                row.append(tuple(acc))
            rows.append(tuple(row))
        return KMatrix(alg, tuple(rows))

    def _matmul_poly(self, other):
        # row i of the product is the t^(p-1) coefficient of
        # (sum_k A_ik t^k) * (sum_{k,j} B_kj t^(p-1-k) s^j)
        alg = self.algebra
        p, base = alg.p, alg.base
        ball = {}
        for k in range(p):
            for j in range(p):
                for e, c in enumerate(other.rows[k][j]):
                    for (m, n), v in c.num.terms.items():
                        ball[(m, n, e, p - 1 - k, j)] = v
        zero = alg._zero
        nil = (zero,) * p
        rows = []
        if not ball:
            return KMatrix(alg, tuple((nil,) * p for _ in range(p)))
        bi, db = base.to_ints(ball)
        for i in range(p):
            aall = {}
            for k in range(p):
                for e, c in enumerate(self.rows[i][k]):
                    for (m, n), v in c.num.terms.items():
                        aall[(m, n, e, k, 0)] = v
            if not aall:
                rows.append((nil,) * p)
                continue
            ai, da = base.to_ints(aall)
            picked = {}
            for key, c in _kronecker.mul(ai, bi).items():
                if key[3] == p - 1:
                    kk = key[:3] + (key[4],) + key[5:]
                    picked[kk] = picked.get(kk, 0) + c
            terms = base.from_ints(picked, da * db)
            if terms:
                terms = alg._fold_axis(terms, 2, "x")
            grid = [[{} for _ in range(p)] for _ in range(p)]  # grid[j][e]
            for (m, n, e, j), c in terms.items():
                grid[j][e][(m, n)] = c
            rows.append(tuple(tuple(RatFunc(BiPoly._raw(base, t)) if t else zero for t in ent) for ent in grid))
        return KMatrix(alg, tuple(rows))

    def __pow__(self, n):
        result = self.identity(self.algebra)
        for _ in range(n):
            result = result @ self
        return result

    @staticmethod
    def identity(algebra):
        p = algebra.p
        zero, one = algebra._zero, RatFunc.one(algebra.base)
        unit = (one,) + (zero,) * (p - 1)
        nil = (zero,) * p
        return KMatrix(algebra, tuple(tuple(unit if i == j else nil for j in range(p)) for i in range(p)))

    def scalar_matrix(self, c):
        """c * identity for c in F."""
        p = self.p
        zero = self.algebra._zero
        ent = (c,) + (zero,) * (p - 1)
        nil = (zero,) * p
        return KMatrix(self.algebra, tuple(tuple(ent if i == j else nil for j in range(p)) for i in range(p)))

    def trace(self):
        alg = self.algebra
        total = [alg._zero] * alg.p
        for i in range(alg.p):
            for j, c in enumerate(self.rows[i][i]):
                total[j] = total[j] + c
        return tuple(total)

    def det(self):
        """Determinant in K, via a division-free Kronecker determinant in F[xbar]."""
        alg = self.algebra
        base = alg.base
        p = alg.p
        entries = []
        denom = None
        for row in self.rows:
            flat = [c for ent in row for c in ent]
            d = common_denominator(flat)
            if not d.is_one():
                denom = d if denom is None else denom * d
            polys = []
            for ent in row:
                t = {}
                for e, c in enumerate(ent):
                    num = c.num if d.is_one() else c.num * d.exact_div(c.den)
                    for (m, n), v in num.terms.items():
                        t[(m, n, e)] = v
                polys.append(t)
            entries.append(polys)
        D = base.poly_det(entries)
        deg = max((e for (_, _, e) in D), default=0)
        parts = [{} for _ in range(deg + 1)]
        for (m, n, e), c in D.items():
            parts[e][(m, n)] = c
        coeffs = [RatFunc(BiPoly._raw(base, t)) if denom is None else RatFunc(BiPoly._raw(base, t), denom)
                  for t in parts]
        return alg._kreduce(coeffs)


class AlgElem:
    """sum c_{k,l} x^k y^l; ``coeffs[k][l]`` are RatFunc values."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = coeffs

    @property
    def spec(self):
        return self.algebra.spec

    def is_polynomial(self):
        return all(c.den.is_one() for row in self.coeffs for c in row)

    def __getitem__(self, kl):
        k, l = kl
        return self.coeffs[k][l]

    def is_zero(self):
        return not any(c for row in self.coeffs for c in row)

    def __bool__(self):
        return not self.is_zero()

    def _lift(self, other):
        if isinstance(other, AlgElem):
            self.algebra._check(other)
            return other
        if isinstance(other, (RatFunc, BiPoly, int, FpScalar, CycloNum)) or hasattr(other, "denominator"):
            return self.algebra.scalar(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return AlgElem(self.algebra, tuple(
            tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.algebra, tuple(tuple(-x for x in r) for r in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def scale(self, c):
        c = self.algebra._scalar(c)
        return AlgElem(self.algebra, tuple(tuple(x * c for x in r) for r in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgElem):
            return self.algebra.multiply(self, other)
        if isinstance(other, (RatFunc, BiPoly, int, FpScalar, CycloNum)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        # scalars are central
        return self.__mul__(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = self.algebra.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, AlgElem):
            return self.algebra.spec == other.algebra.spec and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def fmt(self):
        parts = []
        p = self.algebra.p
        for k in range(p):
            for l in range(p):
                c = self.coeffs[k][l]
                if not c:
                    continue
                mono = [s for s in ((("x" if k == 1 else f"x^{k}") if k else ""),
                                    (("y" if l == 1 else f"y^{l}") if l else "")) if s]
                mono = "*".join(mono)
                if not mono:
                    parts.append(c.fmt_factor())
                elif c == 1:
                    parts.append(mono)
                else:
                    parts.append(f"{c.fmt_factor()}*{mono}")
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return self.fmt()

    def __repr__(self):
        return f"AlgElem({self.fmt()})"
