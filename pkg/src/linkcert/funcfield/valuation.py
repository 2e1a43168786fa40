"""Valuations on K(alpha, beta).

* the rank-2 right-to-left (alpha^-1, beta^-1)-adic valuation, value group
  Z x Z ordered with the beta-component dominant;
* the Gauss extension of the p-adic valuation of Q(zeta_p) to polynomials,
  with residues in F_p[alpha, beta].
"""

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NegativeValue
from ..scalars import INFINITY, CyclotomicField, PrimeField, cyclo_residue, cyclo_valuation
from .poly import BiPoly
from .ratfunc import RatFunc


@dataclass(frozen=True)
class Value2:
    """Element of (1/p)Z x (1/p)Z, or +infinity.

    Ordered right-to-left lexicographically: beta-component first.
    """

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    infinite: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def infinity(cls):
        return cls(0, 0, True)

    def _key(self):
        return (self.infinite, self.b, self.a)

    def __lt__(self, other):
        return self._key() < other._key()

    def __le__(self, other):
        return self._key() <= other._key()

    def __gt__(self, other):
        return self._key() > other._key()

    def __ge__(self, other):
        return self._key() >= other._key()

    def __add__(self, other):
        if self.infinite or other.infinite:
            return Value2.infinity()
        return Value2(self.a + other.a, self.b + other.b)

    def __neg__(self):
        if self.infinite:
            raise ArithmeticError("cannot negate infinity")
        return Value2(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if self.infinite:
            return self
        return Value2(self.a * k, self.b * k)

    __rmul__ = __mul__

    def __truediv__(self, k):
        if self.infinite:
            return self
        return Value2(self.a / k, self.b / k)

    @property
    def denom(self):
        return max(self.a.denominator, self.b.denominator) if not self.infinite else 1

    @property
    def a_num(self):
        return self.a * self.denom

    @property
    def b_num(self):
        return self.b * self.denom

    def is_negative(self):
        return self < Value2()

    def coset(self, p):
        """Class modulo Z x Z, as a point of (Z/p)^2 over denominator p."""
        if self.infinite:
            raise ArithmeticError("infinity has no coset")
        ap, bp = self.a * p, self.b * p
        if ap.denominator != 1 or bp.denominator != 1:
            raise ValueError(f"{self} does not lie in (1/{p})Z x (1/{p})Z")
        return Coset2(p, int(ap) % p, int(bp) % p)

    def as_list(self):
        return [str(self.a), str(self.b)]

    def __str__(self):
        if self.infinite:
            return "+inf"
        return f"({self.a},{self.b})"


@dataclass(frozen=True, order=True)
class Coset2:
    """Class of a value modulo Z x Z: (a/p, b/p) with a, b in Z/p."""

    p: int
    a: int
    b: int

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def __str__(self):
        return f"({Fraction(self.a, self.p)},{Fraction(self.b, self.p)})"


def _poly_value(f):
    if not f.terms:
        return Value2.infinity()
    n_star = max(e[1] for e in f.terms)
    m_star = max(e[0] for e in f.terms if e[1] == n_star)
    return Value2(-m_star, -n_star)


def rank2_valuation(f):
    """Right-to-left (alpha^-1, beta^-1)-adic value of a polynomial or rational function.

    The leading monomial is the one with the largest beta-exponent, ties
    broken by the largest alpha-exponent; its negated exponent is the value.
    """
    if isinstance(f, BiPoly):
        return _poly_value(f)
    if not f.num.terms:
        return Value2.infinity()
    return _poly_value(f.num) - _poly_value(f.den)


def gauss_valuation(f):
    """min over coefficients of the p-adic value on Q(zeta_p); INFINITY for 0."""
    if isinstance(f, RatFunc):
        if not f.num.terms:
            return INFINITY
        return gauss_valuation(f.num) - gauss_valuation(f.den)
    if not isinstance(f.dom, CyclotomicField):
        raise TypeError("the Gauss valuation is defined over Q(zeta_p)")
    if not f.terms:
        return INFINITY
    return min(cyclo_valuation(c) for c in f.terms.values())


def gauss_residue(f):
    """Coefficientwise residue of a polynomial over Q(zeta_p) into F_p[alpha, beta].

    Rational functions are accepted when numerator and denominator both
    have value 0.
    """
    if isinstance(f, RatFunc):
        if f.den.is_one():
            return RatFunc(gauss_residue(f.num))
        num, den = gauss_residue(f.num), gauss_residue(f.den)
        if gauss_valuation(f.num) != 0 or gauss_valuation(f.den) != 0 or not den.terms:
            raise NegativeValue("residue of a quotient needs numerator and denominator of value 0")
        return RatFunc(num, den)
    dom = f.dom
    if not isinstance(dom, CyclotomicField):
        raise TypeError("the Gauss residue is defined over Q(zeta_p)")
    fp = PrimeField(dom.p)
    out = {}
    for e, c in f.terms.items():
        r = cyclo_residue(c).value
        if r:
            out[e] = r
    return BiPoly(fp, out)
