"""Parser for the ASCII polynomial format used by table data and the cache.

Grammar (whitespace ignored):
    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := nat | ident | '(' expr ')'

Identifiers resolve through an environment mapping names to ring
variables, integers, or polynomials; ring variable names are always
available.
"""

from __future__ import annotations

import re

from .ring import Polynomial, Ring

_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+|[-+*^()])")


class ParseError(ValueError):
    pass


def tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"bad character at {text[pos:pos+10]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, ring: Ring, env):
        self.toks = tokens
        self.i = 0
        self.ring = ring
        self.env = env or {}

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def eat(self, tok=None):
        t = self.peek()
        if t is None or (tok is not None and t != tok):
            raise ParseError(f"expected {tok!r}, got {t!r}")
        self.i += 1
        return t

    def parse(self) -> Polynomial:
        e = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input at {self.peek()!r}")
        return e

    def expr(self) -> Polynomial:
        neg = False
        if self.peek() == "-":
            self.eat()
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.eat()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek() == "*":
            self.eat()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        a = self.atom()
        if self.peek() == "^":
            self.eat()
            e = int(self.eat())
            a = a ** e
        return a

    def atom(self) -> Polynomial:
        t = self.eat()
        if t == "(":
            e = self.expr()
            self.eat(")")
            return e
        if t.isdigit():
            return self.ring.const(int(t))
        if t in self.env:
            v = self.env[t]
            return self.ring.const(v) if isinstance(v, int) else v
        if t in self.ring.index:
            return self.ring.var(t)
        raise ParseError(f"unknown symbol {t!r}")


def parse_poly(text: str, ring: Ring, env: dict | None = None) -> Polynomial:
    return _Parser(tokenize(text), ring, env).parse()
