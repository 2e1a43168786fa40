"""Exact scalars: the prime field F_p, the rationals and the cyclotomic field Q(zeta_p).

Elements of F_p are plain ``int`` residues inside polynomials and matrices (the
:class:`PrimeField` descriptor does the arithmetic); :class:`FpScalar` is the
boxed, operator-friendly version used at API boundaries.  Elements of
Q(zeta_p) are :class:`CycloNum` values in the power basis 1, zeta, ...,
zeta^(p-2).

No floating point is used anywhere: valuations are ``Fraction`` or the
:data:`INFINITY` sentinel.
"""

from fractions import Fraction
from math import lcm

from . import _kronecker
from .errors import BadPrime, DimensionMismatch, NegativeValue

DEFAULT_PRIME_CEILING = 13


class _Infinity:
    """+infinity for extended-rational valuations; larger than every Fraction."""

    __slots__ = ()

    def __repr__(self):
        return "INFINITY"

    __str__ = __repr__

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("linkcert-infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


INFINITY = _Infinity()


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class PrimeParam(int):
    """An odd prime 3 <= p <= ceiling.

    Primes above the ceiling need ``allow_large=True``; the heavier
    computations grow like p**4 to p**6.
    """

    def __new__(cls, p, *, ceiling=DEFAULT_PRIME_CEILING, allow_large=False):
        try:
            value = int(p)
        except (TypeError, ValueError):
            raise BadPrime(f"p must be an integer, got {p!r}") from None
        if value != p:
            raise BadPrime(f"p must be an integer, got {p!r}")
        if value == 2:
            raise BadPrime("p = 2 is not supported: p must be an odd prime")
        if not is_prime(value):
            raise BadPrime(f"p = {value} is not prime")
        if value > ceiling and not allow_large:
            raise BadPrime(f"p = {value} exceeds the ceiling {ceiling}; pass allow_large=True to override")
        return super().__new__(cls, value)


def vp(q, p):
    """p-adic valuation of a nonzero rational; INFINITY for 0."""
    q = Fraction(q)
    if q == 0:
        return INFINITY
    v = 0
    n, d = q.numerator, q.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


# ---------------------------------------------------------------------------
# F_p


class FpScalar:
    """Element of the prime field F_p."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.p = int(p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in F_{self.p}")
            value = value.numerator * pow(value.denominator, -1, self.p)
        self.value = int(value) % self.p

    def _coerce(self, other):
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise ValueError(f"cannot combine F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpScalar(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpScalar(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpScalar(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpScalar(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.p)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return FpScalar(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FpScalar(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpScalar(o, self.p) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return FpScalar(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpScalar({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


# ---------------------------------------------------------------------------
# Q(zeta_p)


def _q(c):
    """Rational coordinate, stored as int when integral."""
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _fold_cyclo(p, full):
    """Reduce coefficients of sum full[k] zeta^k modulo Phi_p."""
    acc = [0] * p
    for k, c in enumerate(full):
        if c:
            acc[k % p] += c
    top = acc[p - 1]
    if top:
        return tuple(_q(acc[i] - top) for i in range(p - 1))
    return tuple(_q(acc[i]) for i in range(p - 1))


def _fraction_det(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        pv = m[c][c]
        det *= pv
        for i in range(c + 1, n):
            f = m[i][c]
            if f:
                f /= pv
                for j in range(c, n):
                    m[i][j] -= f * m[c][j]
    return det


def _fraction_solve(rows, rhs):
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        m[c] = [v / pv for v in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]


class CycloNum:
    """Element sum q_i zeta^i (0 <= i <= p-2) of Q(zeta_p), canonical modulo Phi_p.

    Coordinates are ints when integral and Fractions otherwise.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs=()):
        self.p = int(p)
        coeffs = [_q(c) for c in coeffs]
        if len(coeffs) == p - 1:
            self.coeffs = tuple(coeffs)
        else:
            self.coeffs = _fold_cyclo(self.p, coeffs)

    @classmethod
    def _raw(cls, p, coeffs):
        # trusted: coeffs already normalised, length p - 1
        z = object.__new__(cls)
        z.p = p
        z.coeffs = coeffs
        return z

    @classmethod
    def zeta(cls, p, k=1):
        full = [0] * p
        full[k % p] = 1
        return cls(p, _fold_cyclo(p, full))

    @classmethod
    def from_rational(cls, p, q):
        return cls._raw(p, (_q(q),) + (0,) * (p - 2))

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.p != self.p:
                raise ValueError(f"cannot combine Q(zeta_{self.p}) and Q(zeta_{other.p})")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rational(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycloNum._raw(self.p, tuple(_q(a + b) for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycloNum._raw(self.p, tuple(_q(a - b) for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return CycloNum._raw(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum._raw(self.p, tuple(_q(a * other) for a in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        full = [0] * (2 * self.p - 3)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        full[i + j] += a * b
        return CycloNum._raw(self.p, _fold_cyclo(self.p, full))

    __rmul__ = __mul__

    def _mult_matrix(self):
        # column j holds the coordinates of self * zeta^j
        cols = [(self * CycloNum.zeta(self.p, j)).coeffs for j in range(self.p - 1)]
        return [[cols[j][i] for j in range(self.p - 1)] for i in range(self.p - 1)]

    def norm(self):
        """Field norm N_{Q(zeta_p)/Q}, as an exact rational."""
        return _fraction_det(self._mult_matrix())

    def inverse(self):
        if not self:
            raise ZeroDivisionError("0 has no inverse in Q(zeta_p)")
        if not any(self.coeffs[1:]):
            return CycloNum.from_rational(self.p, Fraction(1) / self.coeffs[0])
        rhs = [Fraction(1)] + [Fraction(0)] * (self.p - 2)
        return CycloNum(self.p, _fraction_solve(self._mult_matrix(), rhs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum._raw(self.p, tuple(_q(Fraction(a) / other) for a in self.coeffs))
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
        result = CycloNum.from_rational(self.p, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.p, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"CycloNum({self.p}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        return _fmt_cyclo(self, "z")


def _fmt_rational(q):
    """Format a rational so it is safe as a factor in a product."""
    q = Fraction(q)
    if q.denominator == 1 and q >= 0:
        return str(q.numerator)
    return f"({q})"


def _fmt_cyclo(z, name):
    parts = []
    for i, q in enumerate(z.coeffs):
        if not q:
            continue
        mono = "" if i == 0 else (name if i == 1 else f"{name}^{i}")
        if not mono:
            parts.append(str(q))
        elif q == 1:
            parts.append(mono)
        else:
            parts.append(f"{_fmt_rational(q)}*{mono}")
    if not parts:
        return "0"
    text = " + ".join(parts)
    if len(parts) == 1 and not text.startswith("-") and "/" not in text:
        return text
    return f"({text})"


def cyclo_valuation(z):
    """p-adic valuation on Q(zeta_p), normalised so v(p) = 1.

    Computed as v_p(N(z)) / (p - 1); Q(zeta_p)/Q is totally ramified at p,
    so this is the unique extension.  Returns INFINITY for 0.
    """
    if not z:
        return INFINITY
    return Fraction(vp(z.norm(), z.p), z.p - 1)


def cyclo_residue(z):
    """Residue in F_p of an element of nonnegative value.

    1, zeta, ..., zeta^(p-2) is an integral basis, so nonnegative value means
    every coordinate is p-integral; the residue map sends zeta to 1.
    """
    p = z.p
    total = 0
    for q in z.coeffs:
        if q and vp(q, p) < 0:
            raise NegativeValue(f"{z} has a coefficient of negative {p}-adic value")
        total += q.numerator * pow(q.denominator, -1, p)
    return FpScalar(total, p)


def fp_linear_independence(rows, p=None):
    """True iff the rows (vectors over F_p) are linearly independent."""
    rows = [list(r) for r in rows]
    if not rows:
        return True
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("all rows must have the same length")
    if p is None:
        p = next((x.p for r in rows for x in r if isinstance(x, FpScalar)), None)
        if p is None:
            raise ValueError("p must be given when rows contain no FpScalar entries")
    from .linalg import ExactMatrix, rank

    field = PrimeField(p)
    mat = ExactMatrix(field, [[field.convert(x) for x in r] for r in rows]) if n else None
    if mat is None:
        return False
    return rank(mat) == len(rows)


# ---------------------------------------------------------------------------
# field descriptors


def _schoolbook(dom, f, g):
    out = {}
    add, mul, is_zero = dom.add, dom.mul, dom.is_zero
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            if e in out:
                out[e] = add(out[e], mul(c1, c2))
            else:
                out[e] = mul(c1, c2)
    return {e: c for e, c in out.items() if not is_zero(c)}


class _Field:
    """Arithmetic descriptor for one coefficient field.

    Polynomial kernels use ``poly_mul`` / ``poly_det`` on sparse dicts mapping
    exponent tuples to elements; large inputs go through Kronecker
    substitution via the ``to_ints`` / ``from_ints`` integer encoding.
    """

    is_field = True
    kron_threshold = 24
    det_period = None

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()

    def size(self, a):
        return 0

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def poly_mul(self, f, g):
        if len(f) * len(g) <= self.kron_threshold:
            return _schoolbook(self, f, g)
        fi, df = self.to_ints(f)
        gi, dg = self.to_ints(g)
        return self.from_ints(_kronecker.mul(fi, gi), df * dg)

    def poly_det(self, entries):
        rows = []
        denom = 1
        for row in entries:
            d = self.common_denominator(row)
            rows.append([self.to_ints(t, d)[0] for t in row])
            denom *= d
        return self.from_ints(_kronecker.det(rows, self.det_period), denom)

    def common_denominator(self, polys):
        return 1


class PrimeField(_Field):
    """F_p with elements stored as ints in [0, p)."""

    def __init__(self, p):
        self.p = int(p)
        self.characteristic = self.p
        self.zero = 0
        self.one = 1

    def _key(self):
        return (self.p,)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def convert(self, x):
        if isinstance(x, FpScalar):
            if x.p != self.p:
                raise ValueError(f"F_{x.p} element given where F_{self.p} expected")
            return x.value
        if isinstance(x, Fraction):
            return FpScalar(x, self.p).value
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def pow(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def is_zero(self, a):
        return a == 0

    def fmt(self, a):
        return str(a)

    def random_small(self, rng):
        return rng.randint(-2, 2) % self.p

    def to_ints(self, terms, denom=None):
        return terms, 1

    def from_ints(self, terms, denom):
        p = self.p
        out = {}
        for e, c in terms.items():
            c %= p
            if c:
                out[e] = c
        return out

    def box(self, a):
        return FpScalar(a, self.p)


class RationalField(_Field):
    """The rationals, elements stored as ``Fraction``."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "RationalField()"

    def convert(self, x):
        if isinstance(x, CycloNum):
            raise ValueError("cyclotomic element given where a rational was expected")
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return Fraction(1) / a

    def div(self, a, b):
        return Fraction(a) / b

    def is_zero(self, a):
        return a == 0

    def fmt(self, a):
        return _fmt_rational(a)

    def random_small(self, rng):
        return Fraction(rng.randint(-2, 2))

    def common_denominator(self, polys):
        return lcm(1, *(c.denominator for t in polys for c in t.values()))

    def to_ints(self, terms, denom=None):
        if denom is None:
            denom = lcm(1, *(c.denominator for c in terms.values()))
        return {e: (c.numerator * (denom // c.denominator)) for e, c in terms.items()}, denom

    def from_ints(self, terms, denom):
        return {e: Fraction(c, denom) for e, c in terms.items() if c}


class CyclotomicField(_Field):
    """Q(zeta_p) with CycloNum elements; the letter ``z`` denotes zeta."""

    characteristic = 0

    def __init__(self, p):
        self.p = int(p)
        self.det_period = self.p  # zeta^p = 1 keeps determinants compact
        self.zero = CycloNum(self.p, (0,) * (self.p - 1))
        self.one = CycloNum.from_rational(self.p, 1)

    def _key(self):
        return (self.p,)

    def __repr__(self):
        return f"CyclotomicField({self.p})"

    def zeta(self, k=1):
        return CycloNum.zeta(self.p, k)

    def convert(self, x):
        if isinstance(x, CycloNum):
            if x.p != self.p:
                raise ValueError(f"Q(zeta_{x.p}) element given where Q(zeta_{self.p}) expected")
            return x
        if isinstance(x, FpScalar):
            raise ValueError("F_p element given where a cyclotomic number was expected")
        return CycloNum.from_rational(self.p, x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return a.inverse()

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return not a

    def fmt(self, a):
        return _fmt_cyclo(a, "z")

    def random_small(self, rng):
        return CycloNum.from_rational(self.p, rng.randint(-2, 2))

    def common_denominator(self, polys):
        return lcm(1, *(q.denominator for t in polys for c in t.values() for q in c.coeffs))

    def to_ints(self, terms, denom=None):
        if denom is None:
            denom = self.common_denominator([terms])
        out = {}
        for e, c in terms.items():
            for k, q in enumerate(c.coeffs):
                if q:
                    out[e + (k,)] = q.numerator * (denom // q.denominator)
        return out, denom

    def from_ints(self, terms, denom):
        p = self.p
        grouped = {}
        for e, c in terms.items():
            key = e[:-1]
            acc = grouped.get(key)
            if acc is None:
                acc = grouped[key] = [0] * p
            acc[e[-1] % p] += c
        out = {}
        for key, acc in grouped.items():
            top = acc[p - 1]
            if denom == 1:
                coords = tuple(acc[i] - top for i in range(p - 1))
            else:
                coords = tuple(_q(Fraction(acc[i] - top, denom)) for i in range(p - 1))
            if any(coords):
                out[key] = CycloNum._raw(p, coords)
        return out
