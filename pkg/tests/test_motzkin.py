from fractions import Fraction

import pytest

from bellpaths import lagrange, motzkin
from bellpaths.bell import BinomialSequence
from bellpaths.core import EnumerationBoundError, binomial
from bellpaths.polyring import Polynomial, Series, WeightSpec, specialize

SYM = WeightSpec.symbolic()
T1 = Polynomial.variable("t", 1)
T2 = Polynomial.variable("t", 2)
S1 = Polynomial.variable("s", 1)


def pairs_up_to(total):
    for n in range(total + 1):
        for m in range(n // 2 + 1):
            yield m, n - 2 * m


def test_path_validation():
    with pytest.raises(ValueError):
        motzkin.MotzkinPath("du")
    with pytest.raises(ValueError):
        motzkin.MotzkinPath("uu")
    with pytest.raises(ValueError):
        motzkin.MotzkinPath("uxd")
    assert len(motzkin.MotzkinPath("uhd")) == 3


def test_enumerate_small_sets():
    assert [str(p) for p in motzkin.enumerate_paths(1, 1)] == ["udh", "uhd", "hud"]
    assert [str(p) for p in motzkin.enumerate_paths(0, 4)] == ["hhhh"]
    # lexicographic under u < d < h: "uudd" precedes "udud"
    assert [str(p) for p in motzkin.enumerate_paths(2, 0)] == ["uudd", "udud"]


def test_enumerate_bound():
    with pytest.raises(EnumerationBoundError):
        list(motzkin.enumerate_paths(9, 0))
    assert motzkin.count_paths(9, 0, bound=18) == 4862


def test_segment_profile():
    profile = motzkin.segment_profile(motzkin.MotzkinPath("uudd"))
    assert profile.u_counts == {2: 1} and profile.h_counts == {}

    profile = motzkin.segment_profile(motzkin.MotzkinPath("uhd"))
    assert profile.u_counts == {1: 1} and profile.h_counts == {1: 1}

    profile = motzkin.segment_profile(motzkin.MotzkinPath("uhhdud"))
    assert profile.u_counts == {1: 2} and profile.h_counts == {2: 1}


def test_bruteforce_weighted_sums():
    assert motzkin.weighted_sum_bruteforce(1, 1, SYM) == T1 * S1 * 3
    assert motzkin.weighted_sum_bruteforce(2, 0, SYM) == T1**2 + T2
    assert motzkin.weighted_sum_bruteforce(0, 3, SYM) == Polynomial.variable("s", 3)


def test_closed_weighted_sums():
    assert motzkin.weighted_sum_closed(1, 1, SYM) == T1 * S1 * 3
    assert motzkin.weighted_sum_closed(2, 0, SYM) == T1**2 + T2
    for k in range(6):
        expected = Polynomial.variable("s", k) if k else Polynomial.const(1)
        assert motzkin.weighted_sum_closed(0, k, SYM) == expected


def test_triple_agreement():
    for m, k in pairs_up_to(7):
        brute = motzkin.weighted_sum_bruteforce(m, k, SYM)
        assert motzkin.weighted_sum_closed(m, k, SYM) == brute, (m, k)
        assert lagrange.motzkin_series(SYM, m, k).coeff(m, k) == brute, (m, k)


def test_path_count_closed_form():
    # |paths with m ups, k horizontals| = C(m+k+1, k) C(2m+k+1, m) / (2m+k+1)
    for m, k in pairs_up_to(9):
        expected = Fraction(
            binomial(m + k + 1, k) * binomial(2 * m + k + 1, m), 2 * m + k + 1
        )
        assert motzkin.count_paths(m, k) == expected, (m, k)


def test_segment_split_coefficient():
    assert motzkin.segment_split_coefficient(1, 1, 1, 1) == 6
    assert motzkin.segment_split_coefficient(2, 1, 1, 1) == 12
    for m in range(5):
        for r in range(m + 2):
            assert motzkin.segment_split_coefficient(m, 0, r, 0) == binomial(m + 1, r)


def test_weighted_sum_by_segments():
    assert motzkin.weighted_sum_by_segments(1, 1, 1, 1, SYM) == T1 * S1 * 3
    for m in range(1, 4):
        assert motzkin.weighted_sum_by_segments(m, 2, 0, 1, SYM) == 0

    for m, k in pairs_up_to(6):
        total = Polynomial.zero()
        for r in range(m + 1):
            for l in range(k + 1):
                total = total + motzkin.weighted_sum_by_segments(m, k, r, l, SYM)
        assert total == motzkin.weighted_sum_closed(m, k, SYM), (m, k)


def test_count_by_type_examples():
    assert motzkin.count_by_type(1, 1, {1: 1}, {1: 1}) == 3
    assert motzkin.count_by_type(2, 0, {2: 1}, {}) == 1
    assert motzkin.count_by_type(2, 0, {1: 2}, {}) == 1


def test_count_by_type_rejects_mismatch():
    with pytest.raises(ValueError):
        motzkin.count_by_type(2, 0, {1: 1}, {})
    with pytest.raises(ValueError):
        motzkin.count_by_type(1, 2, {1: 1}, {1: 1})


def test_count_by_type_partitions_path_set():
    for m, k in pairs_up_to(7):
        by_type = {}
        for path in motzkin.enumerate_paths(m, k):
            profile = motzkin.segment_profile(path)
            key = (
                tuple(sorted(profile.u_counts.items())),
                tuple(sorted(profile.h_counts.items())),
            )
            by_type[key] = by_type.get(key, 0) + 1
        for (u_items, h_items), expected in by_type.items():
            assert motzkin.count_by_type(m, k, dict(u_items), dict(h_items)) == expected


def test_parallel_reduction_matches_sequential():
    # weighted sums are associative-commutative reductions: chunked partial
    # sums recombined in any order must agree exactly
    paths = list(motzkin.enumerate_paths(2, 3))
    forward = Polynomial.zero()
    for path in paths:
        forward = forward + motzkin.path_weight(path, SYM)
    chunks = [paths[i::3] for i in range(3)]
    partials = []
    for chunk in chunks:
        piece = Polynomial.zero()
        for path in chunk:
            piece = piece + motzkin.path_weight(path, SYM)
        partials.append(piece)
    recombined = partials[2] + partials[0] + partials[1]
    assert recombined == forward == motzkin.weighted_sum_bruteforce(2, 3, SYM)


def test_named_weights_values():
    stirling = motzkin.named_weights("stirling")
    assert stirling.t(3) == Fraction(1, 6)
    assert stirling.s(3) == Fraction(1, 6)

    bary = motzkin.named_weights("b-ary", b=1, d=1)
    assert bary.t(2) == 1  # C(3,2)/3
    assert bary.s(2) == 1

    abel0 = motzkin.named_weights("abel", q=0)
    for i in range(1, 5):
        assert abel0.t(i) == Fraction(1, motzkin.factorial(i))
        assert abel0.s(i) == 1

    with pytest.raises(ValueError):
        motzkin.named_weights("no-such-kind")


def test_stirling_specialization():
    weights = motzkin.named_weights("stirling")
    for m, k in pairs_up_to(7):
        value = specialize(motzkin.weighted_sum_closed(m, k, SYM), weights)
        assert value == motzkin.stirling_closed_value(m, k), (m, k)


def test_plane_tree_specialization_single():
    for b in (1, 2, 3):
        weights = motzkin.named_weights("b-ary", b=b, d=1)
        for m, k in pairs_up_to(6):
            brute = motzkin.weighted_sum_bruteforce(m, k, weights).constant_value()
            assert brute == motzkin.bary_d1_closed_value(m, k, b), (b, m, k)


def test_plane_tree_specialization_general():
    for b, d in [(1, 2), (2, 3)]:
        weights = motzkin.named_weights("b-ary", b=b, d=d)
        for m, k in pairs_up_to(6):
            brute = motzkin.weighted_sum_bruteforce(m, k, weights).constant_value()
            assert brute == motzkin.bary_general_closed_value(m, k, b, d), (b, d, m, k)


def test_h_run_factor_closed_matches_series_where_defined():
    for d in (1, 2, 3):
        for k in range(1, 7):
            for j in range(1, k + 1):
                if d * k == j:
                    continue
                assert motzkin.bary_h_factor_closed(j, k, d) == (
                    motzkin.bary_h_factor_series(j, k, d)
                ), (j, k, d)
    with pytest.raises(ZeroDivisionError):
        motzkin.bary_h_factor_closed(0, 0, 2)


def test_series_coefficient_specialization(rng):
    from conftest import random_unit_series

    for f in (Series.from_x_coeffs([1, 1], nx=8), random_unit_series(rng, 8)):
        weights = motzkin.series_coefficient_weights(f)
        for m, k in pairs_up_to(6):
            brute = motzkin.weighted_sum_bruteforce(m, k, weights).constant_value()
            assert brute == motzkin.series_family_closed_value(m, k, f), (m, k)


def test_series_pair_specialization(rng):
    from conftest import random_unit_series

    f = random_unit_series(rng, 7)
    g = random_unit_series(rng, 7)
    weights = motzkin.series_coefficient_weights(f, g)
    for m, k in pairs_up_to(6):
        if k < 1:
            continue
        brute = motzkin.weighted_sum_bruteforce(m, k, weights).constant_value()
        assert brute == motzkin.series_pair_closed_value(m, k, f, g), (m, k)
    with pytest.raises(ValueError):
        motzkin.series_pair_closed_value(2, 0, f, g)


def test_labeled_tree_specialization():
    for r in (0, 1, 2):
        weights = motzkin.named_weights("r-ary", r=r)
        for m, k in pairs_up_to(6):
            brute = motzkin.weighted_sum_bruteforce(m, k, weights).constant_value()
            assert brute == motzkin.rary_closed_value(m, k, r), (r, m, k)


def test_binomial_sequence_specialization():
    families = [
        BinomialSequence.power(),
        BinomialSequence.factorial(),
        BinomialSequence.abel(Fraction(-2)),
        BinomialSequence.exponential(),
    ]
    psi = BinomialSequence.factorial()
    for phi in families:
        weights = motzkin.binomial_sequence_weights(phi)
        pair_weights = motzkin.binomial_sequence_weights(phi, psi)
        for m, k in pairs_up_to(6):
            brute = motzkin.weighted_sum_bruteforce(m, k, weights).constant_value()
            assert brute == motzkin.binomial_sequence_closed_value(m, k, phi)
            pair_brute = motzkin.weighted_sum_bruteforce(
                m, k, pair_weights
            ).constant_value()
            assert pair_brute == motzkin.two_sequence_closed_value(m, k, phi, psi)


def test_abel_and_bell_specializations():
    for q in (Fraction(0), Fraction(-1), Fraction(1, 2)):
        weights = motzkin.named_weights("abel", q=q)
        for m, k in pairs_up_to(6):
            brute = motzkin.weighted_sum_bruteforce(m, k, weights).constant_value()
            assert brute == motzkin.abel_closed_value(m, k, q), (q, m, k)
    # the Abel case at q = -(r+1) coincides with the labeled-tree weights
    for r in (0, 1, 2):
        for m, k in pairs_up_to(6):
            assert motzkin.abel_closed_value(m, k, -(r + 1)) == (
                motzkin.rary_closed_value(m, k, r)
            )

    bell_weights = motzkin.named_weights("bell-numbers")
    for m, k in pairs_up_to(6):
        brute = motzkin.weighted_sum_bruteforce(m, k, bell_weights).constant_value()
        assert brute == motzkin.bell_numbers_closed_value(m, k), (m, k)


def test_factorial_psi_weights_are_all_ones():
    weights = motzkin.named_weights("factorial-psi")
    for i in range(1, 6):
        assert weights.t(i) == 1
        assert weights.s(i) == 1


def test_coefficient_degrees_track_step_counts():
    for m, k in pairs_up_to(6):
        poly = motzkin.weighted_sum_closed(m, k, SYM)
        for mono in poly.terms:
            assert mono.weighted_degree("t") == m
            assert mono.weighted_degree("s") == k
