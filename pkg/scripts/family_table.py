"""
Spectral-radius table for the gated family up to a height bound.

Prints each distinct non-cyclotomic factor with its certified largest root,
the number of matrices sharing it, and the Betti vector of a representative.
Rows are sorted by spectral radius using exact comparison.
"""

import argparse
import functools
import time

from nonkahler.certify import enumerate_family, group_by_factor
from nonkahler.exact import IntPolynomial, compare_largest_real_roots
from nonkahler.exact.roots import Ordering
from nonkahler.io import render_matrix
from nonkahler.topology import build_mab_ring


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--height", type=int, default=2)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    members = enumerate_family(args.height, workers=args.workers)
    groups = group_by_factor(members)

    def cmp(x, y):
        o = compare_largest_real_roots(IntPolynomial(x), IntPolynomial(y))
        return {Ordering.LESS: -1, Ordering.EQUAL: 0, Ordering.GREATER: 1}[o]

    keys = sorted(groups, key=functools.cmp_to_key(cmp))
    print("height <= %d: %d matrices (up to sign), %d factors, %.1f s"
          % (args.height, len(members), len(groups), time.perf_counter() - t0))
    print("%-12s %-40s %5s  %-24s %s" % ("r", "factor", "count", "betti", "example"))
    for k in keys:
        ms = groups[k]
        rep = ms[0].matrix
        print("%-12.6f %-40s %5d  %-24s %s" % (ms[0].witness_root.approx(), IntPolynomial(k), len(ms),
                                              ",".join(map(str, build_mab_ring(rep).betti)),
                                              render_matrix(rep)))


if __name__ == "__main__":
    main()
