"""Text format for polynomials.

Grammar (no implicit multiplication):

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' NAT]
    atom   := INT ['/' INT] | VAR | '(' expr ')'

Rational literals look like 3 or 3/4; '/' appears only there.  Output of
MPoly.to_string for rational polynomials parses back to the same value.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import ExponentOverflow, ParseError, UnknownVariable
from .mpoly import MPoly

MAX_EXPONENT = 4096


class _Tok(NamedTuple):
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("NAME", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            toks.append(_Tok(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(_Tok("EOF", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, vars: Sequence[str]):
        self.toks = _tokenize(text)
        self.i = 0
        self.vars = tuple(vars)

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str) -> _Tok:
        t = self.peek()
        if t.kind != kind:
            raise ParseError(f"expected {kind!r}, found {t.text or 'end of input'!r}", t.pos)
        return self.take()

    def parse(self) -> MPoly:
        p = self.expr()
        t = self.peek()
        if t.kind != "EOF":
            raise ParseError(f"unexpected trailing input {t.text!r}", t.pos)
        return p

    def expr(self) -> MPoly:
        if self.peek().kind == "-":
            self.take()
            acc = -self.term()
        else:
            acc = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take()
            t = self.term()
            acc = acc + t if op.kind == "+" else acc - t
        return acc

    def term(self) -> MPoly:
        acc = self.factor()
        while self.peek().kind == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> MPoly:
        base = self.atom()
        if self.peek().kind == "^":
            self.take()
            t = self.expect("INT")
            e = int(t.text)
            if e > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}", t.pos)
            base = base**e
        return base

    def atom(self) -> MPoly:
        t = self.peek()
        if t.kind == "INT":
            self.take()
            num = int(t.text)
            if self.peek().kind == "/":
                self.take()
                d = self.expect("INT")
                den = int(d.text)
                if den == 0:
                    raise ParseError("zero denominator", d.pos)
                return MPoly.const(self.vars, Fraction(num, den))
            return MPoly.const(self.vars, num)
        if t.kind == "NAME":
            self.take()
            if t.text not in self.vars:
                raise UnknownVariable(
                    f"unknown variable {t.text!r} (expected one of {', '.join(self.vars)})", t.pos
                )
            return MPoly.var(self.vars, t.text)
        if t.kind == "(":
            self.take()
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(
            f"expected a number, variable, or '(', found {t.text or 'end of input'!r}", t.pos
        )


def parse_poly(text: str, vars: Sequence[str]) -> MPoly:
    """Parse the grammar above into an MPoly over the given variables."""
    return _Parser(text, vars).parse()
