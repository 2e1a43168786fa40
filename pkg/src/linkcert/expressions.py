"""Text syntax for field and algebra elements.

Grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"

Names: ``a`` (alpha), ``b`` (beta), ``z`` (zeta, cyclotomic fields only),
and ``x``, ``y`` when parsing into an algebra.  Exponents are nonnegative
integers.  Errors carry the 0-based character offset.
"""

import re
from fractions import Fraction

from .errors import ExpressionError
from .funcfield.poly import BiPoly
from .funcfield.ratfunc import RatFunc, RationalFunctionField
from .scalars import CycloNum, CyclotomicField, PrimeField, RationalField

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos and not m.group(0):
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExpressionError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        else:
            break
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Scope:
    """What the names mean for one target."""

    def __init__(self, target):
        from .algebra import AlgebraSpec, CyclicAlgebra, make_algebra

        if isinstance(target, AlgebraSpec):
            target = make_algebra(target)
        self.algebra = target if isinstance(target, CyclicAlgebra) else None
        if self.algebra is not None:
            coeff = self.algebra.base
        elif isinstance(target, RationalFunctionField):
            coeff = target.coeff_field
        elif isinstance(target, (PrimeField, RationalField, CyclotomicField)):
            coeff = target
        else:
            raise TypeError(f"cannot parse into {target!r}")
        self.coeff = coeff
        self.names = {"a": RatFunc.alpha(coeff), "b": RatFunc.beta(coeff)}
        if isinstance(coeff, CyclotomicField):
            self.names["z"] = RatFunc.const(coeff, CycloNum.zeta(coeff.p))
        if self.algebra is not None:
            self.names["x"] = self.algebra.x()
            self.names["y"] = self.algebra.y()

    def const(self, n):
        return RatFunc.const(self.coeff, n)


class _Parser:
    def __init__(self, text, scope):
        self.tokens = _tokenize(text)
        self.i = 0
        self.scope = scope

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ExpressionError(message, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in "+-" and self.peek()[0] != "end":
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] in ("*", "/"):
            op_tok = self.take()
            rhs = self.unary()
            if op_tok[0] == "*":
                value = _mul(value, rhs)
            else:
                value = self._div(value, rhs, op_tok)
        return value

    def _div(self, lhs, rhs, tok):
        if not isinstance(rhs, RatFunc):
            self.fail("only division by field elements is supported", tok)
        if not rhs:
            self.fail("division by zero", tok)
        if isinstance(lhs, RatFunc):
            return lhs / rhs
        return lhs.scale(rhs.inverse())

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                self.fail("expected a nonnegative integer exponent")
            self.take()
            return base ** tok[1]
        return base

    def atom(self):
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.take()
            return self.scope.const(tok[1])
        if kind == "name":
            self.take()
            value = self.scope.names.get(tok[1])
            if value is None:
                self.fail(f"unknown symbol {tok[1]!r}", tok)
            return value
        if kind == "(":
            self.take()
            value = self.expr()
            if self.peek()[0] != ")":
                self.fail("expected ')'")
            self.take()
            return value
        if kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {tok[1]!r}")


def _mul(lhs, rhs):
    if isinstance(lhs, RatFunc) and not isinstance(rhs, RatFunc):
        return rhs.scale(lhs)
    return lhs * rhs


def parse_element(text, target):
    """Parse text into a RatFunc (field targets) or an AlgElem (algebra targets).

    ``target`` is a coefficient field (F_p, Q, Q(zeta_p)), a
    RationalFunctionField, a CyclicAlgebra or an AlgebraSpec.
    """
    scope = _Scope(target)
    value = _Parser(text, scope).parse()
    if scope.algebra is not None and isinstance(value, RatFunc):
        value = scope.algebra.scalar(value)
    return value


def parse_polynomial(text, target):
    """Like parse_element, but insists on a polynomial and returns a BiPoly."""
    value = parse_element(text, target)
    if not isinstance(value, RatFunc) or not value.is_polynomial():
        raise ExpressionError("expected a polynomial", 0)
    return value.num


def format_element(value):
    """Inverse of parse_element on its image."""
    if isinstance(value, (RatFunc, BiPoly)):
        return value.fmt()
    if isinstance(value, Fraction):
        return str(value)
    return value.fmt()
