"""Sparse bivariate polynomials in alpha (first exponent) and beta (second).

Coefficients live in one of the field descriptors from :mod:`linkcert.scalars`;
printing uses the CLI letters ``a`` and ``b`` unless other names are passed
(the E^p coordinates use ``A`` and ``B``).
"""

from fractions import Fraction

from ..errors import NotExactDivision
from ..scalars import CycloNum, FpScalar


def _grlex_key(e):
    return (e[0] + e[1], e[0], e[1])


class BiPoly:
    __slots__ = ("dom", "terms", "_hash")

    def __init__(self, dom, terms=None):
        self.dom = dom
        if terms:
            is_zero, convert = dom.is_zero, dom.convert
            self.terms = {}
            for e, c in terms.items():
                c = convert(c)
                if not is_zero(c):
                    self.terms[(int(e[0]), int(e[1]))] = c
        else:
            self.terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, dom, terms):
        obj = cls.__new__(cls)
        obj.dom = dom
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, dom, c):
        c = dom.convert(c)
        return cls._raw(dom, {} if dom.is_zero(c) else {(0, 0): c})

    @classmethod
    def zero(cls, dom):
        return cls._raw(dom, {})

    @classmethod
    def one(cls, dom):
        return cls._raw(dom, {(0, 0): dom.one})

    @classmethod
    def monomial(cls, dom, m, n, c=None):
        c = dom.one if c is None else dom.convert(c)
        return cls._raw(dom, {} if dom.is_zero(c) else {(m, n): c})

    @classmethod
    def alpha(cls, dom):
        return cls.monomial(dom, 1, 0)

    @classmethod
    def beta(cls, dom):
        return cls.monomial(dom, 0, 1)

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def is_one(self):
        return len(self.terms) == 1 and self.terms.get((0, 0)) == self.dom.one

    def constant_value(self):
        return self.terms.get((0, 0), self.dom.zero)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.dom == other.dom and self.terms == other.terms
        if isinstance(other, (int, Fraction, FpScalar, CycloNum)):
            try:
                return self == BiPoly.const(self.dom, other)
            except (ValueError, ZeroDivisionError):
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            if other.dom != self.dom:
                raise ValueError(f"cannot combine polynomials over {self.dom} and {other.dom}")
            return other
        if isinstance(other, (int, Fraction, FpScalar, CycloNum)):
            return BiPoly.const(self.dom, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.terms:
            return self
        if not self.terms:
            return o
        dom = self.dom
        out = dict(self.terms)
        for e, c in o.terms.items():
            if e in out:
                s = dom.add(out[e], c)
                if dom.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return BiPoly._raw(dom, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.dom.neg
        return BiPoly._raw(self.dom, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def scale(self, c):
        dom = self.dom
        if dom.is_zero(c):
            return BiPoly._raw(dom, {})
        mul = dom.mul
        return BiPoly._raw(dom, {e: mul(v, c) for e, v in self.terms.items()})

    def shift(self, dm, dn):
        return BiPoly._raw(self.dom, {(e[0] + dm, e[1] + dn): c for e, c in self.terms.items()})

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.terms or not o.terms:
            return BiPoly._raw(self.dom, {})
        if o.is_constant():
            return self.scale(o.terms[(0, 0)])
        if self.is_constant():
            return o.scale(self.terms[(0, 0)])
        return BiPoly._raw(self.dom, self.dom.poly_mul(self.terms, o.terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of a polynomial are rational functions")
        result = BiPoly.one(self.dom)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        from .ratfunc import RatFunc

        if isinstance(other, (int, Fraction, FpScalar, CycloNum)):
            return self.scale(self.dom.inv(self.dom.convert(other)))
        return RatFunc(self, other)

    def __rtruediv__(self, other):
        from .ratfunc import RatFunc

        return RatFunc(BiPoly.const(self.dom, other), self)

    def exact_div(self, g):
        """Quotient self / g; raises NotExactDivision if g does not divide self."""
        if not g.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        dom = self.dom
        if g.is_constant():
            return self.scale(dom.inv(g.terms[(0, 0)]))
        lg = max(g.terms)
        ginv = dom.inv(g.terms[lg])
        gitems = [(e, c) for e, c in g.terms.items() if e != lg]
        r = dict(self.terms)
        q = {}
        sub, mul, is_zero = dom.sub, dom.mul, dom.is_zero
        while r:
            lr = max(r)
            dm, dn = lr[0] - lg[0], lr[1] - lg[1]
            if dm < 0 or dn < 0:
                raise NotExactDivision("polynomial division is not exact")
            c = mul(r.pop(lr), ginv)
            q[(dm, dn)] = c
            for e, gc in gitems:
                key = (e[0] + dm, e[1] + dn)
                if key in r:
                    v = sub(r[key], mul(c, gc))
                    if is_zero(v):
                        del r[key]
                    else:
                        r[key] = v
                else:
                    r[key] = dom.neg(mul(c, gc))
        return BiPoly._raw(dom, q)

    def divides(self, f):
        try:
            f.exact_div(self)
        except NotExactDivision:
            return False
        return True

    # -- structure --------------------------------------------------------

    def degree(self, var):
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(e[0] + e[1] for e in self.terms)

    def leading_exponent(self):
        """Leading exponent in graded-lex order with alpha > beta."""
        return max(self.terms, key=_grlex_key)

    def leading_coefficient(self):
        return self.terms[self.leading_exponent()]

    def monic(self):
        if not self.terms:
            return self
        lc = self.leading_coefficient()
        if lc == self.dom.one:
            return self
        return self.scale(self.dom.inv(lc))

    def coeff(self, m, n):
        return self.terms.get((m, n), self.dom.zero)

    def coeff_alpha(self, k):
        """Coefficient of alpha^k, as a polynomial in beta alone."""
        return BiPoly._raw(self.dom, {(0, e[1]): c for e, c in self.terms.items() if e[0] == k})

    def map_coeffs(self, fn, dom):
        return BiPoly(dom, {e: fn(c) for e, c in self.terms.items()})

    def inflate(self, p):
        """Substitute alpha -> alpha^p, beta -> beta^p."""
        return BiPoly._raw(self.dom, {(e[0] * p, e[1] * p): c for e, c in self.terms.items()})

    def substitute(self, a, b):
        """Evaluate at alpha = a, beta = b (BiPoly or RatFunc values)."""
        result = None
        for (m, n), c in self.terms.items():
            t = (a ** m) * (b ** n) * BiPoly.const(self.dom, c) if (m or n) else BiPoly.const(self.dom, c)
            result = t if result is None else result + t
        return result if result is not None else BiPoly.zero(self.dom)

    # -- printing ---------------------------------------------------------

    def fmt(self, names=("a", "b")):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = []
            for name, k in zip(names, e):
                if k == 1:
                    mono.append(name)
                elif k > 1:
                    mono.append(f"{name}^{k}")
            mono = "*".join(mono)
            cs = self.dom.fmt(c)
            if not mono:
                parts.append(cs)
            elif c == self.dom.one:
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)

    def __str__(self):
        return self.fmt()

    def __repr__(self):
        return f"BiPoly({self.fmt()})"


class PolynomialRing:
    """The ring K[alpha, beta] as a linear-algebra domain (exact division)."""

    is_field = False

    def __init__(self, coeff_field):
        self.coeff_field = coeff_field
        self.zero = BiPoly.zero(coeff_field)
        self.one = BiPoly.one(coeff_field)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.coeff_field == self.coeff_field

    def __hash__(self):
        return hash(("PolynomialRing", self.coeff_field))

    def __repr__(self):
        return f"PolynomialRing({self.coeff_field!r})"

    def convert(self, x):
        if isinstance(x, BiPoly):
            return x
        return BiPoly.const(self.coeff_field, x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return a.exact_div(b)

    def is_zero(self, a):
        return not a.terms

    def size(self, a):
        return (a.total_degree(), len(a.terms))

    def gcd(self, a, b):
        return poly_gcd(a, b)

    def normalize_vector(self, vec):
        """Divide a vector by the gcd of its entries; first nonzero entry monic."""
        g = None
        for v in vec:
            if v.terms:
                g = v.monic() if g is None else poly_gcd(g, v)
                if g.is_constant():
                    break
        if g is None:
            return vec
        if not g.is_constant():
            vec = [v.exact_div(g) for v in vec]
        lead = next(v for v in vec if v.terms)
        inv = self.coeff_field.inv(lead.leading_coefficient())
        return [v.scale(inv) for v in vec]


# ---------------------------------------------------------------------------
# gcd: content in beta, primitive pseudo-remainder sequence in alpha


def _to_dense_beta(f):
    out = [f.dom.zero] * (f.degree(1) + 1)
    for (_, n), c in f.terms.items():
        out[n] = c
    return out


def _from_dense_beta(dom, coeffs):
    return BiPoly(dom, {(0, n): c for n, c in enumerate(coeffs)})


def _trim(dom, a):
    while a and dom.is_zero(a[-1]):
        a.pop()
    return a


def _urem(dom, a, b):
    a = _trim(dom, list(a))
    db = len(b) - 1
    inv = dom.inv(b[-1])
    while len(a) > db:
        q = dom.mul(a[-1], inv)
        shift = len(a) - 1 - db
        for k in range(db):
            a[shift + k] = dom.sub(a[shift + k], dom.mul(q, b[k]))
        a.pop()
        _trim(dom, a)
    return a


def _ugcd_beta(f, g):
    """Monic gcd of two polynomials in beta alone."""
    dom = f.dom
    if not f.terms:
        return g.monic()
    if not g.terms:
        return f.monic()
    if f.is_constant() or g.is_constant():
        return BiPoly.one(dom)
    a, b = _to_dense_beta(f), _to_dense_beta(g)
    while b:
        a, b = b, _urem(dom, a, b)
    return _from_dense_beta(dom, a).monic()


def content_alpha(f):
    """(content, primitive part) of f viewed in K[beta][alpha]."""
    dom = f.dom
    coeffs = {}
    for (m, n), c in f.terms.items():
        coeffs.setdefault(m, {})[(0, n)] = c
    cont = None
    for part in coeffs.values():
        if len(part) == 1 and (0, 0) in part:
            cont = BiPoly.one(dom)
            break
        poly = BiPoly._raw(dom, part)
        cont = poly.monic() if cont is None else _ugcd_beta(cont, poly)
        if cont.is_constant():
            break
    if cont is None or cont.is_constant():
        return BiPoly.one(dom), f
    return cont, f.exact_div(cont)


def _prem_alpha(f, g):
    dg = g.degree(0)
    lcg = g.coeff_alpha(dg)
    r = f
    while r.terms and r.degree(0) >= dg:
        dr = r.degree(0)
        lr = r.coeff_alpha(dr)
        r = r * lcg - (g * lr).shift(dr - dg, 0)
    return r


def poly_gcd(f, g):
    """Monic (graded-lex) gcd of two bivariate polynomials over a field."""
    dom = f.dom
    if not f.terms:
        return g.monic()
    if not g.terms:
        return f.monic()
    if f.is_constant() or g.is_constant():
        return BiPoly.one(dom)
    cf, pf = content_alpha(f)
    cg, pg = content_alpha(g)
    c = _ugcd_beta(cf, cg)
    if pf.degree(0) < pg.degree(0):
        pf, pg = pg, pf
    while True:
        if not pg.terms:
            h = pf
            break
        if pg.degree(0) == 0:
            h = BiPoly.one(dom)
            break
        r = _prem_alpha(pf, pg)
        pf = pg
        pg = content_alpha(r)[1] if r.terms else r
    return (c * h).monic()


def poly_lcm(f, g):
    if not f.terms or not g.terms:
        return BiPoly.zero(f.dom)
    return (f * g).exact_div(poly_gcd(f, g)).monic()
