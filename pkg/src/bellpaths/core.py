"""Exact scalar arithmetic: arbitrary-precision integers, rationals, and the
generalized binomial/multinomial coefficients every closed form here consumes.

Integers are plain Python ints; rationals are fractions.Fraction, which keeps
every value in lowest terms with a positive denominator.  All functions are
pure and all values immutable, so they are safe to share between tasks.
"""

from __future__ import annotations

import math
from fractions import Fraction

Integer = int
Rational = Fraction

factorial = math.factorial


class EnumerationBoundError(RuntimeError):
    """Raised when a brute-force enumeration would exceed its size bound."""


def binomial(a: int, b: int) -> int:
    """Generalized binomial coefficient a(a-1)...(a-b+1) / b!.

    The upper index may be any integer, including negative ones.  For b < 0
    the result is 0, and for b = 0 it is 1 (empty product), so in particular
    binomial(-1, 0) == 1.
    """
    if b < 0:
        return 0
    num = 1
    for i in range(b):
        num *= a - i
    # the falling factorial of an integer is always divisible by b!
    return num // math.factorial(b)


def multinomial(total: int, parts) -> int:
    """total! / prod(part!) over the given nonnegative parts.

    The parts must sum to `total`; anything else is rejected rather than
    silently reinterpreted.
    """
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be nonnegative, got {parts}")
    if sum(parts) != total:
        raise ValueError(
            f"multinomial parts {parts} sum to {sum(parts)}, expected {total}"
        )
    result = math.factorial(total)
    for p in parts:
        result //= math.factorial(p)
    return result


def as_integer(value) -> int:
    """Coerce an exact rational to int, rejecting non-integral values."""
    q = Fraction(value)
    if q.denominator != 1:
        raise ValueError(f"expected an integer value, got {q}")
    return q.numerator
