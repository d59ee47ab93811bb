"""Recursive-descent parser for polynomials and monomial ideals.

Grammar::

    expr     := sign? term (('+'|'-') term)*
    term     := factor (('*' | juxtaposition) factor)*
    factor   := base ('^' nat)?
    base     := rational | var | '(' expr ')'
    rational := int ('/' nat)?
    ideal    := expr (',' expr)*

A leading sign applies to the whole term, so ``-x^2`` is ``-(x^2)``.
Offsets in errors are byte offsets into the UTF-8 encoded input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Polynomial
from .errors import NonMonomialTerm, ParseError, UnknownVariable

_SYMBOLS = set("+-*^/(),")


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', 'var', 'eof', or the symbol itself
    text: str
    offset: int

    def describe(self) -> str:
        return "end of input" if self.kind == "eof" else repr(self.text)


def tokenize(text: str) -> list[Token]:
    tokens = []
    i = 0
    offset = 0  # byte offset tracking i
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            offset += len(ch.encode())
            i += 1
            continue
        if ch.isdigit() and ch.isascii():
            j = i
            while j < n and text[j].isdigit() and text[j].isascii():
                j += 1
            tokens.append(Token("int", text[i:j], offset))
            offset += j - i
            i = j
            continue
        if ch.isalpha():
            tokens.append(Token("var", ch, offset))
        elif ch in _SYMBOLS:
            tokens.append(Token(ch, ch, offset))
        else:
            raise ParseError(offset, "a number, variable, operator or parenthesis", repr(ch))
        offset += len(ch.encode())
        i += 1
    tokens.append(Token("eof", "", offset))
    return tokens


class _Parser:
    def __init__(self, text: str, variables):
        self.variables = tuple(variables)
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            raise ParseError(self.tok.offset, what, self.tok.describe())
        return self.advance()

    def expr(self) -> Polynomial:
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
        result = self.term().scale(sign)
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def _starts_base(self) -> bool:
        return self.tok.kind in ("int", "var", "(")

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            if self.tok.kind == "*":
                self.advance()
                result = result * self.factor()
            elif self._starts_base():
                result = result * self.factor()
            else:
                return result

    def factor(self) -> Polynomial:
        base = self.base()
        if self.tok.kind == "^":
            self.advance()
            n = self.expect("int", "a natural-number exponent")
            return base ** int(n.text)
        return base

    def base(self) -> Polynomial:
        t = self.tok
        if t.kind == "int":
            self.advance()
            value = Fraction(int(t.text))
            if self.tok.kind == "/":
                self.advance()
                den = self.expect("int", "a denominator")
                if int(den.text) == 0:
                    raise ParseError(den.offset, "a nonzero denominator", repr(den.text))
                value /= int(den.text)
            return Polynomial.constant(self.variables, value)
        if t.kind == "var":
            if t.text not in self.variables:
                raise UnknownVariable(t.offset, t.text, self.variables)
            self.advance()
            return Polynomial.var(t.text, self.variables)
        if t.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        raise ParseError(t.offset, "a number, variable or '('", t.describe())


def parse_polynomial(text: str, variables=("x", "y")) -> Polynomial:
    """Parse ``text`` into an exact polynomial over ``variables``."""
    variables = tuple(variables)
    if not variables or not set(variables) <= {"x", "y", "z"}:
        raise ValueError("variables must be a nonempty subset of x, y, z")
    p = _Parser(text, variables)
    result = p.expr()
    if p.tok.kind != "eof":
        raise ParseError(p.tok.offset, "an operator or end of input", p.tok.describe())
    return result


def parse_monomial_ideal(text: str) -> list[tuple[int, int]]:
    """Parse a comma-separated list of monomials in x, y into exponent pairs.

    Order is preserved and no minimalization happens.  Nonzero scalar
    coefficients are accepted since they generate the same ideal.
    """
    p = _Parser(text, ("x", "y"))
    gens = []
    while True:
        start = p.tok.offset
        poly = p.expr()
        if len(poly.terms) != 1:
            found = "0" if poly.is_zero() else repr(str(poly))
            raise NonMonomialTerm(start, found)
        (exp,) = poly.terms
        gens.append(exp)
        if p.tok.kind == ",":
            p.advance()
            continue
        if p.tok.kind != "eof":
            raise ParseError(p.tok.offset, "',' or end of input", p.tok.describe())
        return gens
