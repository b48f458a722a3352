"""Empirical LLL cost over Z[alpha]: iterations, swaps and coefficient growth vs n and input size.

    python3 scripts/lll_growth.py --out lll_growth.csv --trials 5
"""

import argparse
import csv
import random
import sys
from fractions import Fraction

from fields import FIELDS
from zalpha.lll import lll_reduce
from zalpha.field import opc
from zalpha.suites import random_basis


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", default="-")
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--bits", type=int, nargs="+", default=[4, 16, 64])
    ap.add_argument("--delta", default="3/4")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    delta = Fraction(args.delta)
    rng = random.Random(args.seed)
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(fh)
    w.writerow(["field", "m", "n", "input_bits", "trial", "iterations", "swaps",
                "input_opc_bits", "output_opc_bits", "peak_opc_bits", "wall_time"])
    for name, F in FIELDS.items():
        for n in range(2, args.max_n + 1):
            for bits in args.bits:
                for trial in range(args.trials):
                    M = random_basis(F, n, rng, bits)
                    R, U, st = lll_reduce(M, delta, record=False)
                    C_in = max(opc(x) for r in M.rows for x in r)
                    C_out = max(opc(x) for r in R.rows for x in r)
                    w.writerow([name, F.degree, n, bits, trial, st.iterations, st.swaps,
                                C_in.bit_length(), C_out.bit_length(), st.max_opc_bits, f"{st.wall_time:.4f}"])
                    fh.flush()
    if fh is not sys.stdout:
        fh.close()


if __name__ == "__main__":
    main()
