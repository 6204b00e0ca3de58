"""Parser for the plain-text polynomial grammar.

::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*          juxtaposition multiplies
    factor := atom ['^' INT]
    atom   := NUMBER ['/' NUMBER] | NAME | '(' expr ')'

A run of one-letter variable names such as ``xy`` is read as their
product.  Examples: ``3/2 x^2 y - 1``, ``eps^2``, ``x u - 1``, ``(1 - e) y^2``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .polynomial import Polynomial


class ParseError(ValueError):
    """Syntax error with a 1-based column and the set of expected tokens."""

    def __init__(self, message, column, expected=(), line=None):
        self.message = message
        self.column = column
        self.line = line
        self.expected = tuple(expected)
        where = f"line {line}, column {column}" if line is not None else f"column {column}"
        exp = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{where}: {message}{exp}")


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^/()]))"
)


def _tokenize(text):
    pos = 0
    tokens = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos + 1,
                             ("number", "name", "operator"))
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start + 1))
        pos = m.end()
    tokens.append(("end", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, text, variables):
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = tuple(variables)

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, col = self.peek()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", col, (op,))
        self.advance()

    def parse(self):
        p = self.expr()
        kind, val, col = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", col, ("+", "-", "end of input"))
        return p

    def expr(self):
        kind, val, col = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.advance()
            sign = -1 if val == "-" else 1
        acc = self.term() * sign
        while True:
            kind, val, col = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def _starts_atom(self, tok):
        kind, val, _ = tok
        return kind in ("num", "name") or (kind == "op" and val == "(")

    def term(self):
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.advance()
                acc = acc * self.factor()
            elif self._starts_atom(tok):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        base = self.atom()
        kind, val, col = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            kind, val, col = self.peek()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer", col, ("integer",))
            self.advance()
            return base ** int(val)
        return base

    def atom(self):
        kind, val, col = self.advance()
        if kind == "num":
            k2, v2, c2 = self.peek()
            if k2 == "op" and v2 == "/":
                self.advance()
                k3, v3, c3 = self.advance()
                if k3 != "num":
                    raise ParseError("expected denominator", c3, ("integer",))
                if int(v3) == 0:
                    raise ParseError("zero denominator", c3)
                return Polynomial.constant(self.vars, Fraction(int(val), int(v3)))
            return Polynomial.constant(self.vars, int(val))
        if kind == "name":
            if val in self.vars:
                return Polynomial.var(self.vars, val)
            # "xy" reads as x y when every letter is a one-letter variable
            if len(val) > 1 and all(ch in self.vars for ch in val):
                acc = Polynomial.one(self.vars)
                for ch in val:
                    acc = acc * Polynomial.var(self.vars, ch)
                return acc
            raise ParseError(f"unknown variable {val!r}", col, self.vars)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        shown = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {shown}", col, ("number", "name", "("))


def parse_polynomial(text, variables):
    """Parse ``text`` as a polynomial in ``variables``.

    Raises :class:`ParseError` with the 1-based column of the offending token.
    """
    return _Parser(text, variables).parse()
