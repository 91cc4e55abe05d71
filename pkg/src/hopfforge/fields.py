"""Exact base-field arithmetic: rationals or a prime field F_p.

Scalars are plain Python values: ``Fraction`` over the rationals, ``int`` in
``[0, p)`` over F_p.  A ``Field`` instance knows how to combine, invert and
format them; every operation is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HopfForgeError

Scalar = Fraction | int


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """The base field: characteristic 0 means Q, otherwise F_char."""

    char: int = 0

    def __post_init__(self):
        if self.char and not _is_prime(self.char):
            raise HopfForgeError(f"field characteristic must be 0 or prime, got {self.char}")

    @property
    def zero(self) -> Scalar:
        return 0 if self.char else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.char else Fraction(1)

    def of(self, numerator: int, denominator: int = 1) -> Scalar:
        """Canonical scalar with value numerator/denominator."""
        if self.char:
            den = denominator % self.char
            if den == 0:
                raise ZeroDivisionError(f"denominator {denominator} vanishes mod {self.char}")
            return (numerator * pow(den, self.char - 2, self.char)) % self.char
        return Fraction(numerator, denominator)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.char if self.char else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.char if self.char else a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return (a * b) % self.char if self.char else a * b

    def neg(self, a: Scalar) -> Scalar:
        return (-a) % self.char if self.char else -a

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.char:
            return pow(a, self.char - 2, self.char)
        return 1 / a

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def format(self, a: Scalar) -> str:
        return str(a)

    def __str__(self) -> str:
        return f"F{self.char}" if self.char else "Q"


QQ = Field(0)
