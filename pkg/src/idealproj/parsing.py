"""Recursive-descent parser for polynomial expressions like ``1 + (1-x1)^4``.

Grammar (explicit ``*`` required, so ``2x1`` is rejected)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ['-'] base ['^' uint]
    base   := rational | 'x' uint | '(' expr ')'
    rational := uint ['/' uint]
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .poly import Polynomial

__all__ = ["parse_polynomial"]

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x\d+)|(?P<op>[-+*/^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", col)
        kind = m.lastgroup
        start = m.start(kind) + 1
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, dim: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.dim = dim

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, text, pos = self.take()
        if text != value:
            found = "end of input" if kind == "end" else repr(text)
            raise ParseError(f"expected {value!r}, found {found}", pos)

    def expr(self) -> Polynomial:
        result = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[1] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        negate = False
        if self.peek()[1] == "-":
            self.take()
            negate = True
        value = self.base()
        if self.peek()[1] == "^":
            self.take()
            kind, text, pos = self.take()
            if text == "-":
                raise ParseError("negative exponent", pos)
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", pos)
            value = value ** int(text)
        return -value if negate else value

    def base(self) -> Polynomial:
        kind, text, pos = self.take()
        if kind == "num":
            num = int(text)
            if self.peek()[1] == "/":
                self.take()
                dkind, dtext, dpos = self.take()
                if dkind != "num":
                    raise ParseError("expected a denominator", dpos)
                if int(dtext) == 0:
                    raise ParseError("zero denominator", dpos)
                return Polynomial.constant(Fraction(num, int(dtext)), self.dim)
            return Polynomial.constant(num, self.dim)
        if kind == "var":
            k = int(text[1:])
            if not 1 <= k <= self.dim:
                raise ParseError(f"variable {text} out of range x1..x{self.dim}", pos)
            return Polynomial.var(k - 1, self.dim)
        if text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        found = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"unexpected {found}", pos)


def parse_polynomial(text: str, dim: int) -> Polynomial:
    """Parse and expand ``text`` into a Polynomial in ``x1..x{dim}``."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    parser = _Parser(text, dim)
    result = parser.expr()
    kind, tok, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected {tok!r}", pos)
    return result
