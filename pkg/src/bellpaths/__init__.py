"""Exact weighted enumeration of Motzkin paths, compositions, and bipartite
matrix compositions.

Every closed counting formula in this package is paired with an independent
brute-force or series oracle; the `verify` module runs the full identity
suite and the `bellpaths` command line exposes tables, specializations, and
the verification report.
"""

from .bell import (
    BinomialSequence,
    WeightVector,
    bell_number,
    partial_bell,
    partial_bell_by_partitions,
    potential,
    power_derivative,
    stirling2,
)
from .core import (
    EnumerationBoundError,
    Integer,
    Rational,
    as_integer,
    binomial,
    factorial,
    multinomial,
)
from .polyring import (
    SYMBOLIC,
    Monomial,
    Polynomial,
    Series,
    WeightSpec,
    specialize,
)

__all__ = [
    "BinomialSequence",
    "EnumerationBoundError",
    "Integer",
    "Monomial",
    "Polynomial",
    "Rational",
    "SYMBOLIC",
    "Series",
    "WeightSpec",
    "WeightVector",
    "as_integer",
    "bell_number",
    "binomial",
    "factorial",
    "multinomial",
    "partial_bell",
    "partial_bell_by_partitions",
    "potential",
    "power_derivative",
    "specialize",
    "stirling2",
]
