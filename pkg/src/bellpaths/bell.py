"""Partial Bell polynomials, potential polynomials, and binomial sequences.

This is the algebraic engine behind every closed form in the package: the
weighted path, composition, and matrix counts all reduce to partial Bell
polynomials B(n, r) of the weight variables and to potential polynomials
(coefficients of integer powers of a unit power series).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import EnumerationBoundError, binomial, factorial
from .polyring import Polynomial, Series, WeightSpec

PARTITION_SUM_BOUND = 30


def _as_poly(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.const(value)


class WeightVector:
    """Sequence of entries x_1, x_2, ... consumed by the Bell machinery.

    Entries are polynomials (or rationals), available up to any requested
    index.  Every closed form in this package feeds the vector in the
    "k! times series coefficient" convention, i.e. entry k is k! times the
    k-th coefficient of the weight series; build those with from_weights.
    """

    def __init__(self, rule):
        self._rule = rule

    def __getitem__(self, index: int) -> Polynomial:
        if index < 1:
            raise IndexError(f"weight vector indices start at 1, got {index}")
        return _as_poly(self._rule(index))

    @classmethod
    def from_weights(cls, weights: WeightSpec, family: str) -> "WeightVector":
        """Entry k = k! * (weight k of the chosen family)."""
        if family == "t":
            return cls(lambda k: weights.t_poly(k) * factorial(k))
        if family == "s":
            return cls(lambda k: weights.s_poly(k) * factorial(k))
        raise ValueError(f"unknown weight family {family!r}")

    @classmethod
    def constant(cls, value) -> "WeightVector":
        poly = _as_poly(value)
        return cls(lambda k: poly)

    @classmethod
    def from_entries(cls, entries) -> "WeightVector":
        entries = [_as_poly(e) for e in entries]

        def rule(k):
            if k > len(entries):
                raise IndexError(
                    f"weight vector has {len(entries)} entries, index {k} requested"
                )
            return entries[k - 1]

        return cls(rule)


def _bell_triangle(n: int, entries: WeightVector):
    """Table of B(nn, rr) for 0 <= rr <= nn <= n via the triangular recurrence

        B(nn, rr) = sum_i C(nn-1, i-1) * x_i * B(nn-i, rr-1).
    """
    zero = Polynomial.zero()
    xs = [None] + [entries[i] for i in range(1, n + 1)]
    table = [[zero] * (n + 1) for _ in range(n + 1)]
    table[0][0] = Polynomial.const(1)
    for nn in range(1, n + 1):
        for rr in range(1, nn + 1):
            acc = zero
            for i in range(1, nn - rr + 2):
                prev = table[nn - i][rr - 1]
                if prev.is_zero() or xs[i].is_zero():
                    continue
                acc = acc + xs[i] * prev * binomial(nn - 1, i - 1)
            table[nn][rr] = acc
    return table


def partial_bell(n: int, r: int, entries: WeightVector) -> Polynomial:
    """Partial Bell polynomial B(n, r) of the given entries.

    Conventions: B(0, 0) = 1, B(n, 0) = 0 for n > 0, and B(n, r) = 0 for
    r > n or r < 0.  Computed by the triangular recurrence, which is
    polynomial-time; the partition-sum evaluator below is the independent
    cross-check.
    """
    if n < 0 or r < 0 or r > n:
        return Polynomial.zero()
    if n == 0:
        return Polynomial.const(1)
    if r == 0:
        return Polynomial.zero()
    return _bell_triangle(n, entries)[n][r]


def _partitions_with_parts(n: int, r: int):
    """Multiplicity maps {part: count} of the partitions of n into r parts."""

    def rec(remaining, parts_left, max_part, current):
        if parts_left == 0:
            if remaining == 0:
                yield dict(current)
            return
        if remaining < parts_left or remaining > parts_left * max_part:
            return
        for part in range(min(max_part, remaining - parts_left + 1), 0, -1):
            current[part] = current.get(part, 0) + 1
            yield from rec(remaining - part, parts_left - 1, part, current)
            current[part] -= 1
            if not current[part]:
                del current[part]

    yield from rec(n, r, n, {})


def partial_bell_by_partitions(n: int, r: int, entries: WeightVector) -> Polynomial:
    """B(n, r) evaluated literally as the sum over partitions of n into r parts:

        sum  n! / (r_1! r_2! ...) * prod (x_i / i!)^{r_i}

    over all nonnegative solutions of r_1 + r_2 + ... = r and
    r_1 + 2 r_2 + ... = n.  Exponential in n, so bounded; this is the
    independent evaluator the recurrence is checked against.
    """
    if n > PARTITION_SUM_BOUND:
        raise EnumerationBoundError(
            f"partition summation bound is n <= {PARTITION_SUM_BOUND}, got {n}"
        )
    if n < 0 or r < 0 or r > n:
        return Polynomial.zero()
    if n == 0:
        return Polynomial.const(1)
    total = Polynomial.zero()
    for multiplicities in _partitions_with_parts(n, r):
        coeff = Fraction(factorial(n))
        term = Polynomial.const(1)
        for part, count in multiplicities.items():
            coeff /= factorial(count) * factorial(part) ** count
            term = term * entries[part] ** count
        total = total + term * coeff
    return total


def potential(n: int, power: int, entries: WeightVector) -> Polynomial:
    """Potential polynomial: n! times the x^n coefficient of A(x)^power, where
    A(x) = 1 + sum_k (entry_k / k!) x^k.

    Assembled from partial Bell polynomials as

        sum_{k=1..n} C(power, k) * k! * B(n, k)

    which is exact for every integer power, negative included; non-integer
    powers are rejected rather than approximated.
    """
    if isinstance(power, Fraction):
        if power.denominator != 1:
            raise ValueError(f"potential polynomial power must be an integer, got {power}")
        power = power.numerator
    if not isinstance(power, int):
        raise ValueError(f"potential polynomial power must be an integer, got {power!r}")
    if n < 0:
        raise ValueError(f"potential polynomial order must be >= 0, got {n}")
    if n == 0:
        return Polynomial.const(1)
    table = _bell_triangle(n, entries)
    total = Polynomial.zero()
    for k in range(1, n + 1):
        c = binomial(power, k) * factorial(k)
        if c:
            total = total + table[n][k] * c
    return total


def power_derivative(f: Series, m: int, i: int) -> Polynomial:
    """m-th derivative of f(x)^i at x = 0, i.e. m! * [x^m] f(x)^i.

    f must be univariate with constant term 1 and truncated at order >= m.
    """
    if not f.is_univariate():
        raise ValueError("power_derivative needs a univariate series")
    if f.coeff(0) != 1:
        raise ValueError("power_derivative needs constant term 1")
    if m > f.nx:
        raise IndexError(f"order {m} beyond series truncation {f.nx}")
    return f.pow(i).coeff(m) * factorial(m)


_stirling_cache: dict[tuple[int, int], int] = {}


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, as B(n, k) at all entries 1."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 needs nonnegative arguments")
    key = (n, k)
    if key not in _stirling_cache:
        value = partial_bell(n, k, WeightVector.constant(1)).constant_value()
        if value.denominator != 1:
            raise AssertionError(f"non-integral Stirling value at {key}: {value}")
        _stirling_cache[key] = value.numerator
    return _stirling_cache[key]


def bell_number(n: int) -> int:
    """Number of set partitions of an n-set."""
    return sum(stirling2(n, k) for k in range(n + 1))


@dataclass(frozen=True)
class BinomialSequence:
    """A polynomial family phi_n with phi_0 = 1 and the convolution property

        phi_n(x + y) = sum_i C(n, i) phi_i(x) phi_{n-i}(y).

    Built-in kinds and their closed forms:
      power        phi_n(x) = x^n
      factorial    phi_n(x) = x (x+1) ... (x+n-1)
      abel(q)      phi_n(x) = x (x - q n)^{n-1}
      exponential  phi_n(x) = sum_i S(n, i) x^i

    The generic constructor takes the coefficients of an exponent series
    lam(u) with lam_1 != 0, defining phi_n(x) = n! [u^n] exp(x lam(u)).
    """

    kind: str
    q: Fraction | None = None
    exponent_coeffs: tuple | None = None

    @staticmethod
    def power() -> "BinomialSequence":
        return BinomialSequence("power")

    @staticmethod
    def factorial() -> "BinomialSequence":
        return BinomialSequence("factorial")

    @staticmethod
    def abel(q) -> "BinomialSequence":
        return BinomialSequence("abel", q=Fraction(q))

    @staticmethod
    def exponential() -> "BinomialSequence":
        return BinomialSequence("exponential")

    @staticmethod
    def from_exponent_series(coeffs) -> "BinomialSequence":
        coeffs = tuple(Fraction(c) for c in coeffs)
        if not coeffs or not coeffs[0]:
            raise ValueError("exponent series needs a nonzero linear coefficient")
        return BinomialSequence("generic", exponent_coeffs=coeffs)

    def value(self, n: int, x) -> Fraction:
        """phi_n(x) for an exact rational x."""
        if n < 0:
            raise ValueError(f"sequence index must be >= 0, got {n}")
        x = Fraction(x)
        if n == 0:
            return Fraction(1)
        if self.kind == "power":
            return x**n
        if self.kind == "factorial":
            result = Fraction(1)
            for i in range(n):
                result *= x + i
            return result
        if self.kind == "abel":
            return x * (x - self.q * n) ** (n - 1)
        if self.kind == "exponential":
            return Fraction(sum(stirling2(n, i) * x**i for i in range(n + 1)))
        if self.kind == "generic":
            return self._generic_value(n, x)
        raise ValueError(f"unknown binomial sequence kind {self.kind!r}")

    def _generic_value(self, n: int, x: Fraction) -> Fraction:
        if len(self.exponent_coeffs) < n:
            raise IndexError(
                f"exponent series has {len(self.exponent_coeffs)} coefficients, "
                f"index {n} requested"
            )
        lam = Series.from_x_coeffs([Fraction(0), *self.exponent_coeffs[:n]], nx=n)
        total = Fraction(0)
        power = Series.one(n)
        for j in range(n + 1):
            cj = power.coeff(n).constant_value()
            if cj:
                total += x**j / factorial(j) * cj
            power = power * lam
            if power.is_zero():
                break
        return total * factorial(n)

    def name(self) -> str:
        if self.kind == "abel":
            return f"abel(q={self.q})"
        return self.kind


def binseq_value(seq: BinomialSequence, n: int, x) -> Fraction:
    return seq.value(n, x)
