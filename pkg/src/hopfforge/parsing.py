"""Textual grammar for polynomials and tensor elements.

Scalars are integer fractions (``-3/2``), generators are identifiers,
products use ``*``, the empty word is ``1`` and ``(#)`` separates the two
tensor legs.  Printing is canonical (terms in degree-lexicographic order)
and round-trips bit-exactly through parsing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import FreeAlgebra, FreePoly, TensorPoly
from .errors import ParseError, UnknownGeneratorError

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<tensor>\(\#\))
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_@']*)
  | (?P<sym>[*+\-/()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # 'num' | 'ident' | 'sym' | 'tensor' | 'end'
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind != "ws":
            tokens.append(Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str, algebra: FreeAlgebra):
        self.tokens = tokenize(text)
        self.pos = 0
        self.algebra = algebra

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def fail(self, message: str):
        t = self.peek()
        raise ParseError(message, t.line, t.column)

    def expect_end(self):
        if self.peek().kind != "end":
            self.fail(f"unexpected trailing input {self.peek().text!r}")

    # factor := NUM ['/' NUM] | IDENT | '(' poly ')'
    def factor(self) -> FreePoly:
        t = self.peek()
        if t.kind == "num":
            self.next()
            num = int(t.text)
            den = 1
            if self.peek().kind == "sym" and self.peek().text == "/":
                self.next()
                d = self.peek()
                if d.kind != "num":
                    self.fail("expected integer denominator after '/'")
                self.next()
                den = int(d.text)
                if den == 0:
                    raise ParseError("zero denominator", d.line, d.column)
            return self.algebra.one().scale(self.algebra.field.of(num, den))
        if t.kind == "ident":
            self.next()
            try:
                return self.algebra.gen(t.text)
            except UnknownGeneratorError:
                raise ParseError(f"unknown generator {t.text!r}", t.line, t.column) from None
        if t.kind == "sym" and t.text == "(":
            self.next()
            p = self.poly_sum()
            close = self.peek()
            if not (close.kind == "sym" and close.text == ")"):
                self.fail("expected ')'")
            self.next()
            return p
        self.fail("expected a scalar, generator or '('")

    # product := factor ('*' factor)*
    def product(self) -> FreePoly:
        p = self.factor()
        while self.peek().kind == "sym" and self.peek().text == "*":
            self.next()
            p = p * self.factor()
        return p

    def _sign(self) -> int:
        sign = 1
        while self.peek().kind == "sym" and self.peek().text in "+-":
            if self.next().text == "-":
                sign = -sign
        return sign

    def poly_sum(self) -> FreePoly:
        sign = self._sign()
        total = self.product().scale(self.algebra.field.of(sign))
        while self.peek().kind == "sym" and self.peek().text in "+-":
            sign = self._sign()
            total = total + self.product().scale(self.algebra.field.of(sign))
        return total

    def tensor_sum(self) -> TensorPoly:
        total = TensorPoly(self.algebra, {})
        first = True
        while True:
            if not first and not (self.peek().kind == "sym" and self.peek().text in "+-"):
                break
            sign = self._sign()
            left = self.product()
            if self.peek().kind != "tensor":
                self.fail("expected '(#)' between tensor legs")
            self.next()
            right = self.product()
            total = total + left.tensor(right).scale(self.algebra.field.of(sign))
            first = False
        return total


def parse_poly(text: str, algebra: FreeAlgebra) -> FreePoly:
    p = _Parser(text, algebra)
    result = p.poly_sum()
    p.expect_end()
    return result


def parse_tensor(text: str, algebra: FreeAlgebra) -> TensorPoly:
    p = _Parser(text, algebra)
    # a bare "0" denotes the zero tensor element (its canonical printing)
    if p.peek().kind == "num" and p.peek().text == "0" and p.tokens[1].kind == "end":
        return TensorPoly(algebra, {})
    result = p.tensor_sum()
    p.expect_end()
    return result


def _word_str(w: tuple[str, ...]) -> str:
    return "*".join(w) if w else "1"


def _coeff_word(c, word_str: str) -> str:
    if word_str == "1":
        return str(c)
    if c == 1:
        return word_str
    return f"{c}*{word_str}"


def format_poly(p: FreePoly) -> str:
    if p.is_zero():
        return "0"
    rational = p.algebra.field.char == 0
    pieces: list[str] = []
    for w, c in p.sorted_terms():
        if rational and c < 0:
            sign, mag = "-", -c
        else:
            sign, mag = "+", c
        body = _coeff_word(mag, _word_str(w))
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def format_tensor(t: TensorPoly) -> str:
    if t.is_zero():
        return "0"
    rational = t.algebra.field.char == 0
    pieces: list[str] = []
    for (u, v), c in t.sorted_terms():
        if rational and c < 0:
            sign, mag = "-", -c
        else:
            sign, mag = "+", c
        body = f"{_coeff_word(mag, _word_str(u))} (#) {_word_str(v)}"
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def parse_fraction(text: str, line: int = 1, column: int = 1) -> Fraction:
    """Strict integer-fraction scalar, for file sections holding bare numbers."""
    m = re.fullmatch(r"(-?\d+)(?:/(\d+))?", text.strip())
    if m is None:
        raise ParseError(f"expected an integer fraction, got {text!r}", line, column)
    return Fraction(int(m.group(1)), int(m.group(2) or 1))
