#!/usr/bin/env python3
"""Tabulate bounded-outdegree plane-tree counts against the matrix coefficient.

For each vertex count v = m + 1 and outdegree cap j, the number of plane
trees times (m + 1) equals the count of (m+1)-row bipartite (0,1)-matrix
compositions of m with at most j ones per row.  This prints both sides.
"""

import argparse

from bellpaths import matrixcomp


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=8)
    parser.add_argument("--max-j", type=int, default=4)
    args = parser.parse_args()

    header = "  ".join(f"j={j}" + " " * 6 for j in range(args.max_j + 1))
    print(f"{'m':>3}  {header}")
    for m in range(args.max_m + 1):
        cells = []
        for j in range(args.max_j + 1):
            trees = matrixcomp.bounded_outdegree_tree_count(m + 1, j)
            coeff = matrixcomp.bounded_composition_count(m + 1, j, m)
            assert (m + 1) * trees == coeff, (m, j)
            cells.append(f"{trees:>4}*{m + 1}={coeff:<4}")
        print(f"{m:>3}  " + "  ".join(cells))


if __name__ == "__main__":
    main()
