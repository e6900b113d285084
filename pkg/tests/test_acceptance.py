"""Acceptance suite: every criterion at its stated range, exact equality.

Each test prints one pass/fail line (visible with `pytest -s` or in verbose
runs, where the test name itself is the per-criterion line).  All comparisons
are exact; there are no tolerances to tune.
"""

import random
import time
from fractions import Fraction

import pytest

from bellpaths import cli, compositions, lagrange, matrixcomp, motzkin, verify
from bellpaths.bell import (
    BinomialSequence,
    WeightVector,
    partial_bell,
    potential,
    power_derivative,
)
from bellpaths.core import binomial, factorial
from bellpaths.polyring import Polynomial, Series, WeightSpec, specialize

from conftest import random_reversible_series, random_unit_series

SYM = WeightSpec.symbolic()


def _pairs_up_to(total):
    for n in range(total + 1):
        for m in range(n // 2 + 1):
            yield m, n - 2 * m


def _report(criterion, ok=True):
    print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'}")


def _x_identity(order):
    return Series.from_x_coeffs([0, 1], nx=order)


def test_criterion_01_triple_agreement_up_to_10():
    started = time.monotonic()
    for m, k in _pairs_up_to(10):
        brute = motzkin.weighted_sum_bruteforce(m, k, SYM)
        closed = motzkin.weighted_sum_closed(m, k, SYM)
        series_value = lagrange.motzkin_series(SYM, m, k).coeff(m, k)
        assert brute == closed, (m, k)
        assert brute == series_value, (m, k)
    elapsed = time.monotonic() - started
    assert elapsed <= 60, f"triple agreement took {elapsed:.1f}s"
    _report("1 (path-sum triple agreement, 2m+k <= 10)")


def test_criterion_02_segment_refinements_up_to_8():
    for m, k in _pairs_up_to(8):
        by_split = {}
        by_type = {}
        count = 0
        for path in motzkin.enumerate_paths(m, k):
            profile = motzkin.segment_profile(path)
            split = (profile.u_segments, profile.h_segments)
            weight = motzkin.path_weight(path, SYM)
            by_split[split] = by_split.get(split, Polynomial.zero()) + weight
            type_key = (
                tuple(sorted(profile.u_counts.items())),
                tuple(sorted(profile.h_counts.items())),
            )
            by_type[type_key] = by_type.get(type_key, 0) + 1
            count += 1

        total = Polynomial.zero()
        for r in range(m + 1):
            for l in range(k + 1):
                refined = motzkin.weighted_sum_by_segments(m, k, r, l, SYM)
                assert refined == by_split.get((r, l), Polynomial.zero()), (m, k, r, l)
                total = total + refined
        assert total == motzkin.weighted_sum_closed(m, k, SYM), (m, k)

        type_total = 0
        for (u_items, h_items), expected in by_type.items():
            got = motzkin.count_by_type(m, k, dict(u_items), dict(h_items))
            assert got == expected and got >= 0, (m, k, u_items, h_items)
            type_total += got
        assert type_total == count, (m, k)
    _report("2 (segment refinement and type counts, 2m+k <= 8)")


def test_criterion_03_motzkin_and_catalan_sequences():
    motzkin_numbers = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]
    ones = WeightSpec.all_ones()
    for n in range(11):
        enumerated = sum(
            motzkin.count_paths(m, n - 2 * m) for m in range(n // 2 + 1)
        )
        closed = sum(
            motzkin.weighted_sum_closed(m, n - 2 * m, ones).constant_value()
            for m in range(n // 2 + 1)
        )
        assert enumerated == motzkin_numbers[n] == closed, n

    catalan = [1, 1, 2, 5, 14, 42]
    dyck = WeightSpec(lambda i: Fraction(1), lambda i: Fraction(0), name="dyck")
    for m in range(6):
        assert motzkin.count_paths(m, 0) == catalan[m]
        assert motzkin.weighted_sum_closed(m, 0, dyck).constant_value() == catalan[m]
    _report("3 (Motzkin numbers n <= 10 and Catalan slice m <= 5)")


def test_criterion_04_stirling_and_plane_tree_weights():
    stirling_weights = motzkin.named_weights("stirling")
    for m, k in _pairs_up_to(8):
        value = specialize(motzkin.weighted_sum_closed(m, k, SYM), stirling_weights)
        assert value == motzkin.stirling_closed_value(m, k), (m, k)

    for b in (1, 2, 3):
        weights = motzkin.named_weights("b-ary", b=b, d=1)
        for m, k in _pairs_up_to(8):
            value = specialize(motzkin.weighted_sum_closed(m, k, SYM), weights)
            assert value == motzkin.bary_d1_closed_value(m, k, b), (b, m, k)
    _report("4 (set-partition and plane-tree weight closed forms, 2m+k <= 8)")


def test_criterion_05_series_and_sequence_families():
    rng = random.Random(555)
    for f in (Series.from_x_coeffs([1, 1], nx=8), random_unit_series(rng, 8)):
        weights = motzkin.series_coefficient_weights(f)
        for m, k in _pairs_up_to(8):
            brute = motzkin.weighted_sum_bruteforce(m, k, weights).constant_value()
            assert brute == motzkin.series_family_closed_value(m, k, f), (m, k)

    for r in (0, 1, 2):
        weights = motzkin.named_weights("r-ary", r=r)
        for m, k in _pairs_up_to(8):
            brute = motzkin.weighted_sum_bruteforce(m, k, weights).constant_value()
            assert brute == motzkin.rary_closed_value(m, k, r), (r, m, k)

    families = [
        BinomialSequence.power(),
        BinomialSequence.factorial(),
        BinomialSequence.abel(Fraction(-2)),
        BinomialSequence.exponential(),
    ]
    for phi in families:
        weights = motzkin.binomial_sequence_weights(phi)
        for m, k in _pairs_up_to(8):
            brute = motzkin.weighted_sum_bruteforce(m, k, weights).constant_value()
            assert brute == motzkin.binomial_sequence_closed_value(m, k, phi), (
                phi.name(),
                m,
                k,
            )

    bell_weights = motzkin.named_weights("bell-numbers")
    for m, k in _pairs_up_to(8):
        brute = motzkin.weighted_sum_bruteforce(m, k, bell_weights).constant_value()
        assert brute == motzkin.bell_numbers_closed_value(m, k), (m, k)
    _report("5 (series-family, labeled-tree, sequence, and Bell weights, 2m+k <= 8)")


def test_criterion_06_bell_argument_identities():
    rng = random.Random(777)
    for trial in range(25):
        f = random_unit_series(rng, 8)
        vec = WeightVector(lambda k, f=f: power_derivative(f, k - 1, k))
        for m in range(1, 9):
            for r in range(1, m + 1):
                lhs = partial_bell(m, r, vec)
                rhs = power_derivative(f, m - r, m) * binomial(m - 1, r - 1)
                assert lhs == rhs, (trial, m, r)

    families = [
        BinomialSequence.power(),
        BinomialSequence.factorial(),
        BinomialSequence.abel(Fraction(-2)),
        BinomialSequence.exponential(),
    ]
    for phi in families:
        vec = WeightVector(lambda k, phi=phi: Polynomial.const(k * phi.value(k - 1, 1)))
        for m in range(1, 9):
            for r in range(1, m + 1):
                lhs = partial_bell(m, r, vec).constant_value()
                assert lhs == binomial(m, r) * phi.value(m - r, r), (phi.name(), m, r)
    _report("6 (Bell argument identities: 25 series and 4 families, m <= 8)")


def test_criterion_07_potential_identity_and_reversion_round_trip():
    sym_vec = WeightVector(lambda k: Polynomial.variable("t", k))
    shifted = WeightVector(
        lambda k: Polynomial.const(1)
        if k == 1
        else Polynomial.variable("t", k - 1) * k
    )
    for n in range(9):
        for r in range(1, 7):
            lhs = potential(n, r, sym_vec)
            rhs = partial_bell(n + r, r, shifted) * Fraction(1, binomial(n + r, r))
            assert lhs == rhs, (n, r)

    rng = random.Random(999)
    for _ in range(50):
        f = random_reversible_series(rng, 20)
        g = lagrange.reversion(f, 20)
        assert f.compose_x(g) == _x_identity(20)
    _report("7 (shifted-argument potential identity; 50 reversion round trips)")


def test_criterion_08_composition_closed_forms():
    for m in range(8):
        for j in range(8):
            by_zeros = {}
            by_runs = {}
            by_type = {}
            for comp in compositions.enumerate_compositions(m, j):
                path = compositions.composition_to_motzkin(comp)
                profile = motzkin.segment_profile(path)
                weight = motzkin.path_weight(path, SYM)
                k = comp.zero_parts
                by_zeros[k] = by_zeros.get(k, Polynomial.zero()) + weight
                run_key = (k, profile.h_segments)
                by_runs[run_key] = by_runs.get(run_key, Polynomial.zero()) + weight
                type_key = (
                    k,
                    tuple(sorted(profile.u_counts.items())),
                    tuple(sorted(profile.h_counts.items())),
                )
                by_type[type_key] = by_type.get(type_key, 0) + 1

            for k in range(j + 1):
                closed = compositions.weighted_sum_closed(m, k, j, SYM)
                assert closed == by_zeros.get(k, Polynomial.zero()), (m, k, j)
                for l in range(k + 1):
                    refined = compositions.weighted_sum_by_hsegments(m, k, j, l, SYM)
                    assert refined == by_runs.get((k, l), Polynomial.zero()), (
                        m,
                        k,
                        j,
                        l,
                    )

            for (k, u_items, h_items), expected in by_type.items():
                got = compositions.count_by_type(j, dict(u_items), dict(h_items))
                assert got == expected, (m, k, j, u_items, h_items)

    for m in range(11):
        for j in range(11):
            direct = sum(
                1
                for comp in compositions.enumerate_compositions(m, j)
                if all(p in (1, 2) for p in comp.parts)
            )
            assert compositions.restricted_count(m, j, allowed={1, 2}) == direct, (m, j)
    _report("8 (composition closed forms m, j <= 7; restricted counts m <= 10)")


def test_criterion_09_matrix_closed_forms_and_power_law():
    for p in range(4):
        for j in range(5):
            for m in range(8):
                brute = Polynomial.zero()
                by_nonzeros = {}
                by_type = {}
                for matrix in matrixcomp.enumerate_bipartite(m, p, j):
                    weight = matrixcomp.matrix_weight(matrix, SYM)
                    brute = brute + weight
                    entries = matrix.nonzero_entries()
                    r = len(entries)
                    by_nonzeros[r] = by_nonzeros.get(r, Polynomial.zero()) + weight
                    type_key = tuple(sorted((v, entries.count(v)) for v in set(entries)))
                    by_type[type_key] = by_type.get(type_key, 0) + 1
                assert matrixcomp.weighted_sum_closed(m, p, j, SYM) == brute, (m, p, j)
                for r in range(m + 1):
                    assert matrixcomp.weighted_sum_by_nonzeros(
                        m, p, j, r, SYM
                    ) == by_nonzeros.get(r, Polynomial.zero()), (m, p, j, r)
                for type_key, expected in by_type.items():
                    assert matrixcomp.count_by_type(p, j, dict(type_key)) == expected

    for j in range(5):
        single = lagrange.bipartite_matrix_series(SYM, 1, j, 8)
        for p in range(4):
            assert lagrange.bipartite_matrix_series(SYM, p, j, 8) == single.pow(p), (
                p,
                j,
            )
    _report("9 (matrix closed forms m <= 7, p <= 3, j <= 4; power law to x^8)")


def test_criterion_10_tree_correspondence():
    for m in range(9):
        for j in range(5):
            trees = matrixcomp.bounded_outdegree_tree_count(m + 1, j)
            assert (m + 1) * trees == matrixcomp.bounded_composition_count(
                m + 1, j, m
            ), (m, j)
    assert matrixcomp.bounded_composition_count(4, 2, 3) == 16
    assert matrixcomp.bounded_outdegree_tree_count(4, 2) == 4
    _report("10 (tree correspondence m <= 8, j <= 4; spot values)")


def test_criterion_11_binomial_identities_up_to_12():
    for l in range(13):
        for j in range(13):
            lhs = sum(
                (-1) ** i * binomial(j, i) * binomial(-i, l) for i in range(j + 1)
            )
            assert lhs == (-1) ** ((l - j) % 2) * binomial(l - 1, l - j), (l, j)
    for k in range(13):
        for j in range(k + 1):
            lhs = sum(
                (-1) ** (l - j) * binomial(l, j) * binomial(k, l)
                for l in range(j, k + 1)
            )
            assert lhs == (1 if k == j else 0), (j, k)
    for n in range(13):
        for r in range(13):
            lhs = sum(
                (-1) ** i * binomial(n, i) * binomial(n - i, r) for i in range(n + 1)
            )
            assert lhs == (1 if r == n else 0), (n, r)
    _report("11 (binomial identities, indices <= 12)")


def test_criterion_12_verify_all_parallel_and_sequential(capsys):
    started = time.monotonic()
    sequential = cli.main(["verify", "--suite", "all", "--max-n", "8"])
    sequential_out = capsys.readouterr().out
    parallel = cli.main(["verify", "--suite", "all", "--max-n", "8", "--jobs", "4"])
    parallel_out = capsys.readouterr().out
    elapsed = time.monotonic() - started

    assert sequential == 0
    assert parallel == 0
    assert sequential_out == parallel_out
    assert "ok:" in sequential_out
    assert elapsed <= 300, f"verification took {elapsed:.1f}s"

    records = verify.run("all", 8, jobs=2)
    assert records == verify.run("all", 8)
    _report("12 (full verification <= 5 min, parallel report identical)")
