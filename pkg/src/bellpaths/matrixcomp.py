"""Bipartite matrix compositions and bounded-outdegree plane trees.

A matrix composition of m is a p x j matrix of nonnegative integers summing
to m.  It is bipartite when every row has the shape (a_1, ..., a_i, 0, ..., 0)
with all a's positive: no nonzero entry follows a zero.  Rows embed as
Motzkin paths exactly like compositions, and the nonzero entries of a row are
its u-segment lengths.  The closed count factors through a coefficient that
is itself the number of ways to spread r nonzero entries over p rows with at
most j per row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .bell import WeightVector, partial_bell
from .core import EnumerationBoundError, binomial, factorial, multinomial
from .polyring import Polynomial, WeightSpec

DEFAULT_SUM_BOUND = 10
DEFAULT_ROWS_BOUND = 4
DEFAULT_COLS_BOUND = 5
DEFAULT_TREE_BOUND = 10


@dataclass(frozen=True)
class BipartiteMatrixComposition:
    """Rows of shape (a_1, ..., a_i, 0, ..., 0) with every a positive."""

    rows: tuple

    def __post_init__(self):
        for row in self.rows:
            seen_zero = False
            for entry in row:
                if entry < 0:
                    raise ValueError(f"negative entry in row {row}")
                if entry == 0:
                    seen_zero = True
                elif seen_zero:
                    raise ValueError(f"nonzero entry after a zero in row {row}")

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.rows)

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def nonzero_entries(self):
        return [entry for row in self.rows for entry in row if entry]


def _bipartite_rows(total: int, cols: int):
    """All bipartite rows of length cols with the given sum, ascending lex."""
    if total == 0:
        yield (0,) * cols
        return
    seen = []

    def rec(remaining: int, slots: int):
        if remaining == 0:
            yield tuple(seen) + (0,) * slots
            return
        if slots == 0:
            return
        for first in range(1, remaining + 1):
            seen.append(first)
            yield from rec(remaining - first, slots - 1)
            seen.pop()

    yield from rec(total, cols)


def enumerate_bipartite(
    m: int,
    p: int,
    j: int,
    sum_bound: int = DEFAULT_SUM_BOUND,
    rows_bound: int = DEFAULT_ROWS_BOUND,
    cols_bound: int = DEFAULT_COLS_BOUND,
) -> Iterator[BipartiteMatrixComposition]:
    """All p x j bipartite matrix compositions of m, each exactly once."""
    if m < 0 or p < 0 or j < 0:
        raise ValueError("arguments must be >= 0")
    if m > sum_bound or p > rows_bound or j > cols_bound:
        raise EnumerationBoundError(
            f"bipartite enumeration bounds are m <= {sum_bound}, "
            f"p <= {rows_bound}, j <= {cols_bound}"
        )

    def rec(rows: list, remaining: int, slots: int):
        if slots == 0:
            if remaining == 0:
                yield BipartiteMatrixComposition(tuple(rows))
            return
        for row_sum in range(remaining + 1):
            for row in _bipartite_rows(row_sum, j):
                rows.append(row)
                yield from rec(rows, remaining - row_sum, slots - 1)
                rows.pop()

    yield from rec([], m, p)


def matrix_weight(matrix: BipartiteMatrixComposition, weights: WeightSpec) -> Polynomial:
    """Product of t-weights over the nonzero entries of the matrix."""
    result = Polynomial.const(1)
    for entry in matrix.nonzero_entries():
        result = result * weights.t_poly(entry)
    return result


def bounded_composition_count(p: int, j: int, r: int) -> int:
    """Number of ways to write r as an ordered sum of p parts, each in 0..j:

        sum_{i=0..floor(r/(j+1))} (-1)^i C(p, i) C(p + r - i(j+1) - 1, p - 1).

    This is the coefficient through which every bipartite matrix count
    refined by the number of nonzero entries factors.  The binomial sum form
    presumes p >= 1; the empty matrix case p = 0 contributes 1 at r = 0.
    """
    if p < 0 or j < 0 or r < 0:
        raise ValueError("arguments must be >= 0")
    if p == 0:
        return 1 if r == 0 else 0
    total = 0
    for i in range(r // (j + 1) + 1):
        sign = 1 if i % 2 == 0 else -1
        total += sign * binomial(p, i) * binomial(p + r - i * (j + 1) - 1, p - 1)
    return total


def weighted_sum_closed(m: int, p: int, j: int, weights: WeightSpec) -> Polynomial:
    """Closed form for the weighted sum over p x j bipartite matrix
    compositions of m:

        sum_{r=0..m} r! U(p, j, r) B(m, r; t) / m!

    with U the bounded-composition count above.
    """
    if m < 0 or p < 0 or j < 0:
        raise ValueError("arguments must be >= 0")
    tvec = WeightVector.from_weights(weights, "t")
    total = Polynomial.zero()
    for r in range(m + 1):
        u = bounded_composition_count(p, j, r)
        if not u:
            continue
        bt = partial_bell(m, r, tvec)
        if bt.is_zero():
            continue
        total = total + bt * Fraction(factorial(r) * u, factorial(m))
    return total


def weighted_sum_by_nonzeros(
    m: int, p: int, j: int, r: int, weights: WeightSpec
) -> Polynomial:
    """Weighted sum restricted to matrices with exactly r nonzero entries:

        r! B(m, r; t) U(p, j, r) / m!.
    """
    tvec = WeightVector.from_weights(weights, "t")
    bt = partial_bell(m, r, tvec)
    if bt.is_zero():
        return Polynomial.zero()
    return bt * Fraction(
        factorial(r) * bounded_composition_count(p, j, r), factorial(m)
    )


def count_by_type(p: int, j: int, entry_type: dict) -> int:
    """Number of p x j bipartite matrix compositions whose nonzero entries
    form the given multiset (entry_type maps value to count):

        multinomial(r; type) * U(p, j, r)   with r the total count.
    """
    entry_type = {int(i): int(c) for i, c in entry_type.items() if c}
    if any(i < 1 or c < 0 for i, c in entry_type.items()):
        raise ValueError("entry types need values >= 1 and counts >= 0")
    r = sum(entry_type.values())
    return multinomial(r, entry_type.values()) * bounded_composition_count(p, j, r)


def zero_one_count(p: int, j: int, m: int) -> int:
    """Number of p x j bipartite (0,1)-matrices with m ones; equals the
    bounded-composition count directly, and the closed weighted sum
    specialized at t_1 = 1, t_i = 0 for i >= 2."""
    return bounded_composition_count(p, j, m)


@dataclass(frozen=True)
class PlaneTree:
    """Rooted tree with ordered children, stored as the preorder sequence of
    vertex outdegrees.  A sequence is valid exactly when it is a ballot-type
    sequence: the outdegrees sum to one less than the vertex count and every
    proper prefix keeps at least one open slot."""

    outdegrees: tuple

    def __post_init__(self):
        if not self.outdegrees:
            raise ValueError("a plane tree has at least one vertex")
        open_slots = 1
        for position, degree in enumerate(self.outdegrees):
            if degree < 0:
                raise ValueError(f"negative outdegree in {self.outdegrees}")
            open_slots += degree - 1
            if open_slots < 0 or (open_slots == 0 and position + 1 < len(self.outdegrees)):
                raise ValueError(f"invalid preorder outdegrees {self.outdegrees}")
        if open_slots != 0:
            raise ValueError(f"invalid preorder outdegrees {self.outdegrees}")

    @property
    def vertex_count(self) -> int:
        return len(self.outdegrees)

    @property
    def max_outdegree(self) -> int:
        return max(self.outdegrees)


def enumerate_plane_trees(
    v: int, max_degree: int, bound: int = DEFAULT_TREE_BOUND
) -> Iterator[PlaneTree]:
    """All plane trees on v vertices with every outdegree <= max_degree,
    generated as preorder outdegree sequences in lexicographic order."""
    if v < 1:
        raise ValueError("a plane tree has at least one vertex")
    if v > bound:
        raise EnumerationBoundError(f"tree enumeration bound is v <= {bound}")
    sequence: list[int] = []

    def rec(placed: int, open_slots: int):
        if placed == v:
            if open_slots == 0:
                yield PlaneTree(tuple(sequence))
            return
        # each vertex still to place needs a slot, and degrees add slots
        for degree in range(0, min(max_degree, v - placed) + 1):
            slots = open_slots + degree - 1
            if slots < 0:
                continue
            if slots == 0 and placed + 1 < v:
                continue
            if slots > v - placed - 1:
                continue
            sequence.append(degree)
            yield from rec(placed + 1, slots)
            sequence.pop()

    yield from rec(0, 1)


def bounded_outdegree_tree_count(
    v: int, max_degree: int, bound: int = DEFAULT_TREE_BOUND
) -> int:
    """Number of plane trees on v vertices with all outdegrees <= max_degree,
    by exhaustive generation."""
    return sum(1 for _ in enumerate_plane_trees(v, max_degree, bound=bound))
