#!/usr/bin/env python3
"""Print weighted path-count tables for the built-in weight specializations.

For each chosen weight family this prints the triangle of weighted sums over
paths with m up-steps and k horizontal steps, row by total length n = 2m + k,
and checks each printed value against brute-force enumeration on the fly.
"""

import argparse
from fractions import Fraction

from bellpaths import motzkin
from bellpaths.polyring import specialize, WeightSpec

KINDS = ["all-ones", "stirling", "b-ary", "r-ary", "abel", "bell-numbers"]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--kinds", nargs="*", default=KINDS)
    args = parser.parse_args()

    sym = WeightSpec.symbolic()
    for kind in args.kinds:
        weights = motzkin.named_weights(kind)
        print(f"== {weights.name} ==")
        for n in range(args.max_n + 1):
            row = []
            for m in range(n // 2 + 1):
                k = n - 2 * m
                value = specialize(motzkin.weighted_sum_closed(m, k, sym), weights)
                brute = motzkin.weighted_sum_bruteforce(m, k, weights).constant_value()
                assert value == brute, (kind, m, k)
                row.append(str(value))
            print(f"  n={n}: " + "  ".join(row))
        print()


if __name__ == "__main__":
    main()
