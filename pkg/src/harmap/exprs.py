"""Tiny expression grammar for rational functions of z.

Covers exactly what the command line needs for shear targets and
dilatations: polynomials and ratios of polynomials in z with rational
coefficients, e.g. ``z/(1-z)``, ``-z``, ``(z - z^5)/(1 - z)``, ``3/2*z^2``.
A recursive-descent parser evaluates into exact Fraction-coefficient
numerator/denominator pairs; ``expand`` turns those into a truncated series.

Grammar (juxtaposition multiplies, ^ is a nonnegative integer power):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/')? factor)*
    factor := ('+' | '-')* atom ('^' integer)?
    atom   := number | 'z' | '(' expr ')'
"""

from __future__ import annotations

from fractions import Fraction

from .series import PowerSeries, rational_expand

__all__ = ["parse_rational", "expand", "ExprError"]

_MAX_DEGREE = 256


class ExprError(ValueError):
    """Malformed or unsupported expression."""


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)])


def _pneg(a):
    return [-c for c in a]


def _pmul(a, b):
    if len(a) + len(b) - 1 > _MAX_DEGREE + 1:
        raise ExprError("expression degree too large")
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _trim(out)


class _Rational:
    """num/den with Fraction-coefficient polynomial entries."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = _trim([Fraction(c) for c in num])
        self.den = _trim([Fraction(c) for c in (den if den is not None else [1])])
        if all(c == 0 for c in self.den):
            raise ExprError("division by the zero polynomial")

    def __add__(self, o):
        return _Rational(_padd(_pmul(self.num, o.den), _pmul(o.num, self.den)), _pmul(self.den, o.den))

    def __sub__(self, o):
        return _Rational(_padd(_pmul(self.num, o.den), _pneg(_pmul(o.num, self.den))), _pmul(self.den, o.den))

    def __mul__(self, o):
        return _Rational(_pmul(self.num, o.num), _pmul(self.den, o.den))

    def __truediv__(self, o):
        if all(c == 0 for c in o.num):
            raise ExprError("division by zero")
        return _Rational(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __pow__(self, k):
        out = _Rational([1])
        base = self
        for _ in range(k):
            out = out * base
        return out


class _Parser:
    def __init__(self, text):
        self.toks = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text):
        toks = []
        i = 0
        while i < len(text):
            c = text[i]
            if c.isspace():
                i += 1
            elif c in "+-*/^()":
                toks.append(c)
                i += 1
            elif c in "zZ":
                toks.append("z")
                i += 1
            elif c.isdigit() or c == ".":
                j = i
                while j < len(text) and (text[j].isdigit() or text[j] == "."):
                    j += 1
                toks.append(text[i:j])
                i = j
            else:
                raise ExprError(f"unexpected character {c!r}")
        return toks

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.peek() is not None:
            raise ExprError(f"trailing input at token {self.peek()!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok in ("*", "/"):
                op = self.take()
                rhs = self.factor()
                value = value * rhs if op == "*" else value / rhs
            elif tok == "z" or tok == "(" or (tok is not None and tok[0].isdigit()) or (
                tok is not None and tok[0] == "."
            ):
                value = value * self.factor()  # juxtaposition
            else:
                return value

    def factor(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        value = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise ExprError("exponent must be a nonnegative integer")
            value = value ** int(tok)
        if sign < 0:
            value = _Rational([-1]) * value
        return value

    def atom(self):
        tok = self.take()
        if tok is None:
            raise ExprError("unexpected end of expression")
        if tok == "z":
            return _Rational([0, 1])
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise ExprError("missing closing parenthesis")
            return value
        if tok[0].isdigit() or tok[0] == ".":
            try:
                return _Rational([Fraction(tok)])
            except ValueError as exc:
                raise ExprError(f"bad number {tok!r}") from exc
        raise ExprError(f"unexpected token {tok!r}")


def parse_rational(text):
    """Parse into (num, den) lists of Fractions, constant term first."""
    r = _Parser(text).parse()
    return r.num, r.den

def expand(text, degree) -> PowerSeries:
    """Parse and Taylor-expand to the requested truncation degree."""
    num, den = parse_rational(text)
    if den[0] == 0:
        raise ExprError("expression has a pole at the origin")
    return rational_expand([float(c) for c in num], [float(c) for c in den], degree)
