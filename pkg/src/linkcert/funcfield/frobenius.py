"""Coordinates over E^p for E = F_p(alpha, beta).

E is a p^2-dimensional vector space over E^p = F_p(A, B), A = alpha^p and
B = beta^p, with basis alpha^m beta^n (0 <= m, n < p).  Coordinates are
rational functions in A and B; they print with the letters ``A`` and ``B``.
"""

from dataclasses import dataclass

from ..scalars import PrimeField
from .poly import BiPoly
from .ratfunc import RatFunc

EP_NAMES = ("A", "B")


@dataclass(frozen=True)
class EpVector:
    p: int
    coords: tuple  # RatFunc in (A, B); index m * p + n

    def __getitem__(self, mn):
        m, n = mn
        return self.coords[m * self.p + n]

    def support(self):
        return [(k // self.p, k % self.p) for k, c in enumerate(self.coords) if c.num.terms]

    def vector(self):
        return list(self.coords)

    def reassemble(self):
        """sum coords[m, n](alpha^p, beta^p) * alpha^m beta^n, as a RatFunc in alpha, beta."""
        p = self.p
        total = None
        for k, c in enumerate(self.coords):
            if not c.num.terms:
                continue
            term = RatFunc(c.num.inflate(p).shift(k // p, k % p), c.den.inflate(p))
            total = term if total is None else total + term
        return total if total is not None else RatFunc.zero(PrimeField(p))

    def __str__(self):
        parts = [f"[{m},{n}]: {self[m, n].fmt(EP_NAMES)}" for m, n in self.support()]
        return "{" + ", ".join(parts) + "}"


def _poly_coords(f, p):
    buckets = [{} for _ in range(p * p)]
    for (m, n), c in f.terms.items():
        buckets[(m % p) * p + n % p][(m // p, n // p)] = c
    return [BiPoly._raw(f.dom, b) for b in buckets]


def _frobenius_image(h, p):
    """h^p written as a polynomial in A, B (coefficients c^p = c over F_p)."""
    return BiPoly._raw(h.dom, dict(h.terms))


def ep_coordinates(f):
    """E^p-coordinates of a polynomial or rational function over F_p.

    A quotient g/h is rewritten g * h^(p-1) / h^p; h^p is a polynomial in
    A, B, which becomes the common denominator of the coordinates.
    """
    if isinstance(f, BiPoly):
        num, den = f, None
    else:
        num, den = f.num, (None if f.den.is_one() else f.den)
    dom = num.dom
    if not isinstance(dom, PrimeField):
        raise TypeError("E^p-coordinates are defined over F_p")
    p = dom.p
    if den is not None:
        num = num * den ** (p - 1)
        den = _frobenius_image(den, p)
    coords = tuple(RatFunc(c) if den is None else RatFunc(c, den) for c in _poly_coords(num, p))
    return EpVector(p, coords)


def is_pth_power(f):
    """(True, root) if f is a p-th power in F_p(alpha, beta), else (False, None)."""
    if isinstance(f, BiPoly):
        f = RatFunc(f)
    dom = f.dom
    if not isinstance(dom, PrimeField):
        raise TypeError("p-th power test is defined over F_p")
    p = dom.p
    parts = []
    for g in (f.num, f.den):
        if any(m % p or n % p for m, n in g.terms):
            return False, None
        # Frobenius is the identity on F_p, so the root of c is c itself
        parts.append(BiPoly._raw(dom, {(m // p, n // p): c for (m, n), c in g.terms.items()}))
    return True, RatFunc(parts[0], parts[1], reduced=True)
