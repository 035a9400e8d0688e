"""Exact coefficient fields.

Two implementations of one small contract: the rationals (elements are
``fractions.Fraction``) and prime fields F_p (elements are ints in
``range(p)``).  Everything downstream does its arithmetic through a field
object so that Groebner bases, normal forms and homology ranks are exact in
either characteristic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """Field of rational numbers; characteristic zero."""

    char = 0

    def coerce(self, value):
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(("field", 0))

    def __repr__(self):
        return "QQ"


class PrimeField:
    """F_p for a prime p; elements are the least nonnegative residues."""

    __slots__ = ("char",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if p > 2**31:
            raise ValueError(f"prime too large: {p}")
        self.char = p

    def coerce(self, value):
        if isinstance(value, Fraction):
            if value.denominator % self.char == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            return value.numerator * self.inv(value.denominator % self.char) % self.char
        return int(value) % self.char

    def add(self, a, b):
        return (a + b) % self.char

    def sub(self, a, b):
        return (a - b) % self.char

    def mul(self, a, b):
        return (a * b) % self.char

    def neg(self, a):
        return -a % self.char

    def inv(self, a):
        a %= self.char
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.char - 2, self.char)

    zero = 0
    one = 1

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.char == self.char

    def __hash__(self):
        return hash(("field", self.char))

    def __repr__(self):
        return f"GF({self.char})"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)
