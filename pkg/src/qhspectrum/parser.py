"""Recursive-descent parser for polynomial expressions.

Grammar (precedence ``^`` > unary minus > ``*`` > binary ``+``/``-``)::

    expr     := term (("+" | "-") term)*
    term     := unary ("*" unary)*
    unary    := ("-" | "+") unary | power
    power    := atom ("^" exponent)?
    exponent := INT ("^" exponent)?          # right-associative
    atom     := NUMBER | IDENT | "(" expr ")"

NUMBER is an integer or a fraction literal ``p/q``.  Juxtaposition
(``2xy``, ``2 x``) is rejected.
"""

import re
from fractions import Fraction
from typing import NamedTuple

from .errors import PolySyntaxError, UnknownVariable
from .poly import Polynomial

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>\d+(?:\s*/\s*\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*^()])
""", re.VERBOSE)


class Token(NamedTuple):
    kind: str  # "number", "ident", "op", "end"
    text: str
    pos: int


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos,
                                  ("number", "identifier", "+", "-", "*", "^", "(", ")"), text)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, variables):
        self.text = text
        self.variables = tuple(variables)
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, expected):
        t = self.tok
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise PolySyntaxError(f"unexpected {what}", t.pos, expected, self.text)

    def accept(self, op):
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def parse(self):
        result = self.expr()
        if self.tok.kind != "end":
            self.error(("+", "-", "*", "^", "end of input"))
        return result

    def expr(self):
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.unary()
        while self.accept("*"):
            value = value * self.unary()
        return value

    def unary(self):
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.accept("^"):
            return base ** self.exponent()
        return base

    def exponent(self):
        t = self.tok
        if t.kind != "number" or "/" in t.text:
            self.error(("integer exponent",))
        self.i += 1
        e = int(t.text)
        if self.accept("^"):
            e = e ** self.exponent()
        return e

    def atom(self):
        t = self.tok
        if t.kind == "number":
            self.i += 1
            num, _, den = t.text.replace(" ", "").partition("/")
            if den and int(den) == 0:
                raise PolySyntaxError("zero denominator", t.pos, (), self.text)
            value = Fraction(int(num), int(den)) if den else Fraction(int(num))
            return Polynomial.constant(value, self.variables)
        if t.kind == "ident":
            if t.text not in self.variables:
                raise UnknownVariable(t.text, t.pos)
            self.i += 1
            return Polynomial.variable(t.text, self.variables)
        if self.accept("("):
            value = self.expr()
            if not self.accept(")"):
                self.error((")",))
            return value
        self.error(("number", "identifier", "(", "-"))


def parse_polynomial(text, variables):
    """Parse ``text`` into a canonical :class:`Polynomial` over ``variables``."""
    variables = list(variables)
    if len(set(variables)) != len(variables):
        raise ValueError(f"duplicate variable names in {variables}")
    return _Parser(text, variables).parse()
