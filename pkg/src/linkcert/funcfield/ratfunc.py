"""Elements of the function field K(alpha, beta) in canonical reduced form."""

from fractions import Fraction

from ..scalars import CycloNum, FpScalar
from .poly import BiPoly, PolynomialRing, poly_gcd, poly_lcm

_SCALARS = (int, Fraction, FpScalar, CycloNum)


class RatFunc:
    """num / den with gcd(num, den) = 1 and den monic in graded-lex order.

    Two RatFunc values are equal iff numerators and denominators agree
    termwise.  Polynomial inputs (den = 1) skip gcd work entirely.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced=False):
        if not isinstance(num, BiPoly):
            raise TypeError(f"numerator must be a BiPoly, got {type(num).__name__}")
        dom = num.dom
        if den is None:
            self.num, self.den = num, BiPoly.one(dom)
            return
        den = _as_poly(den, dom)
        if den.is_one():
            self.num, self.den = num, den
            return
        if not den.terms:
            raise ZeroDivisionError("rational function with zero denominator")
        if den.is_constant():
            inv = dom.inv(den.terms[(0, 0)])
            self.num, self.den = num.scale(inv), BiPoly.one(dom)
            return
        if not num.terms:
            self.num, self.den = num, BiPoly.one(dom)
            return
        if not reduced:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.leading_coefficient()
        if lc != dom.one:
            inv = dom.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def const(cls, dom, c):
        return cls(BiPoly.const(dom, c))

    @classmethod
    def zero(cls, dom):
        return cls(BiPoly.zero(dom))

    @classmethod
    def one(cls, dom):
        return cls(BiPoly.one(dom))

    @classmethod
    def alpha(cls, dom):
        return cls(BiPoly.alpha(dom))

    @classmethod
    def beta(cls, dom):
        return cls(BiPoly.beta(dom))

    @property
    def dom(self):
        return self.num.dom

    def is_zero(self):
        return not self.num.terms

    def is_polynomial(self):
        return self.den.is_one()

    def is_constant(self):
        return self.den.is_one() and self.num.is_constant()

    def __bool__(self):
        return bool(self.num.terms)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, BiPoly):
            return self.den.is_one() and self.num == other
        if isinstance(other, _SCALARS):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.den.is_one():
            return hash(self.num)
        return hash((self.num, self.den))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.dom != self.dom:
                raise ValueError(f"cannot combine functions over {self.dom} and {other.dom}")
            return other
        if isinstance(other, BiPoly):
            return RatFunc(other)
        if isinstance(other, _SCALARS):
            return RatFunc(BiPoly.const(self.dom, other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num + o.num)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduced=True)

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

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den.is_one() and o.den.is_one():
            return RatFunc(self.num * o.num)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.terms:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num, reduced=True)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, reduced=True)

    def fmt(self, names=("a", "b")):
        if self.den.is_one():
            return self.num.fmt(names)
        return f"({self.num.fmt(names)})/({self.den.fmt(names)})"

    def fmt_factor(self, names=("a", "b")):
        """Text safe to use as one factor of a product."""
        if self.den.is_one() and len(self.num.terms) <= 1:
            text = self.num.fmt(names)
            if "+" not in text and not text.startswith("-"):
                return text
        return f"({self.fmt(names)})"

    def __str__(self):
        return self.fmt()

    def __repr__(self):
        return f"RatFunc({self.fmt()})"


def _as_poly(x, dom):
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, RatFunc):
        if not x.den.is_one():
            raise TypeError("expected a polynomial")
        return x.num
    if dom is None:
        raise TypeError("cannot infer the coefficient field of a scalar")
    return BiPoly.const(dom, x)


def common_denominator(funcs):
    """lcm of the denominators of a sequence of rational functions."""
    funcs = list(funcs)
    if not funcs:
        raise ValueError("empty sequence")
    den = None
    for f in funcs:
        if f.den.is_one():
            continue
        den = f.den if den is None else poly_lcm(den, f.den)
    return den if den is not None else BiPoly.one(funcs[0].dom)


def clear_denominators(funcs):
    """Polynomials num_i * (D / den_i) for the common denominator D."""
    funcs = list(funcs)
    den = common_denominator(funcs)
    if den.is_one():
        return [f.num for f in funcs], den
    return [f.num * den.exact_div(f.den) for f in funcs], den


class RationalFunctionField:
    """K(alpha, beta) as a linear-algebra domain."""

    is_field = True

    def __init__(self, coeff_field):
        self.coeff_field = coeff_field
        self.zero = RatFunc.zero(coeff_field)
        self.one = RatFunc.one(coeff_field)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.coeff_field == self.coeff_field

    def __hash__(self):
        return hash(("RationalFunctionField", self.coeff_field))

    def __repr__(self):
        return f"RationalFunctionField({self.coeff_field!r})"

    def ring(self):
        return PolynomialRing(self.coeff_field)

    def convert(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, BiPoly):
            return RatFunc(x)
        return RatFunc.const(self.coeff_field, x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return a / b

    def inv(self, a):
        return a.inverse()

    def is_zero(self, a):
        return not a.num.terms

    def size(self, a):
        return (a.num.total_degree() + a.den.total_degree(), len(a.num.terms))
