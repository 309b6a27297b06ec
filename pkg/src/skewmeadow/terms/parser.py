"""Recursive-descent parser for closed terms.

Grammar (``*`` binds tighter than ``+``/``-``; unary minus and ``inv`` bind
tighter than ``*``; postfix ``^-1`` is an alias for ``inv``)::

    expr    := expr ('+' | '-') mulexp | mulexp
    mulexp  := mulexp '*' unexp | unexp
    unexp   := '-' unexp | postfix
    postfix := postfix '^-1' | atom
    atom    := INT | 'i' | 'j' | 'k' | '(' expr ')'
             | ('inv' | 'c' | 'unit' | 'z') '(' expr ')'
"""
from __future__ import annotations

import re
from typing import NamedTuple

from .ast import (Add, Conj, ConstI, ConstJ, ConstK, Inv, LocalUnit, Mul, Neg,
                  Numeral, One, Sub, Term, Zero, ZOf)


class ParseError(ValueError):
    def __init__(self, offset: int, expected, found: str):
        self.offset = offset
        self.expected = frozenset(expected)
        self.found = found
        want = ", ".join(sorted(self.expected))
        super().__init__(f"syntax error at byte {offset}: expected one of {want}; found {found}")


class Token(NamedTuple):
    kind: str   # INT, NAME, or the punctuation itself; EOF at end
    text: str
    offset: int


_TOKEN = re.compile(r"\s*(?:(?P<INT>[0-9]+)|(?P<NAME>[A-Za-z_][A-Za-z_0-9]*)|(?P<PUNCT>[-+*()^]))")
_FUNCTIONS = {"inv": Inv, "c": Conj, "unit": LocalUnit, "z": ZOf}
_CONSTS = {"i": ConstI, "j": ConstJ, "k": ConstK}
_ATOM_START = {"INT", "i", "j", "k", "(", "inv", "c", "unit", "z"}


def _byte_offset(src: str, pos: int) -> int:
    return len(src[:pos].encode("utf-8"))


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(src, pos)
        if m is None:
            rest = src[pos:]
            if not rest.strip():
                break
            bad = pos + len(rest) - len(rest.lstrip())
            raise ParseError(_byte_offset(src, bad), {"token"}, repr(src[bad]))
        start = m.start(m.lastgroup)
        text = m.group(m.lastgroup)
        kind = text if m.lastgroup == "PUNCT" else m.lastgroup
        tokens.append(Token(kind, text, _byte_offset(src, start)))
        pos = m.end()
    tokens.append(Token("EOF", "", _byte_offset(src, len(src))))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected):
        tok = self.peek()
        found = "end of input" if tok.kind == "EOF" else repr(tok.text)
        raise ParseError(tok.offset, expected, found)

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            self.fail({text or kind})
        return self.advance()

    def parse(self) -> Term:
        t = self.expr()
        if self.peek().kind != "EOF":
            self.fail({"+", "-", "*", "^", "end of input"})
        return t

    def expr(self) -> Term:
        t = self.mulexp()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.mulexp()
            t = Add(t, rhs) if op == "+" else Sub(t, rhs)
        return t

    def mulexp(self) -> Term:
        t = self.unexp()
        while self.peek().kind == "*":
            self.advance()
            t = Mul(t, self.unexp())
        return t

    def unexp(self) -> Term:
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.unexp())
        return self.postfix()

    def postfix(self) -> Term:
        t = self.atom()
        while self.peek().kind == "^":
            self.advance()
            self.expect("-")
            self.expect("INT", "1")
            t = Inv(t)
        return t

    def atom(self) -> Term:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            n = int(tok.text)
            return Zero() if n == 0 else One() if n == 1 else Numeral(n)
        if tok.kind == "(":
            self.advance()
            t = self.expr()
            self.expect(")")
            return t
        if tok.kind == "NAME":
            if tok.text in _CONSTS:
                self.advance()
                return _CONSTS[tok.text]()
            if tok.text in _FUNCTIONS:
                self.advance()
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return _FUNCTIONS[tok.text](arg)
        self.fail(_ATOM_START | {"-"})


def parse(src: str) -> Term:
    return _Parser(src).parse()
