"""How deep does progressive refinement go before a sign is certified, compared to the a priori ceiling?

For random elements and for convergent adversaries p - q*alpha, records the
dyadic level k (alpha known to 2^-k) at which interval Horner first excludes
zero, next to log2 of the threshold denominator that the fallback would use.

    python3 scripts/order_depth.py --out order_depth.csv
"""

import argparse
import csv
import random
import sys

from fields import FIELDS
from zalpha import order
from zalpha.field import opc
from zalpha.oracles import random_element
from zalpha.suites import adversarial_elements


def decided_level(a, dstar):
    """(path, bits) that sign() takes: the doubling level that excluded zero, or the threshold."""
    k = order._start_level(a)
    while 2**k < dstar:
        lo, hi = order._enclosure(a, k)
        if lo > 0 or hi < 0:
            return "progressive", k
        k *= 2
    return "threshold", dstar.bit_length()


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", default="-")
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(fh)
    w.writerow(["field", "m", "kind", "opc_bits", "path", "level_bits", "threshold_bits"])
    for name, F in FIELDS.items():
        if F.degree < 2:
            continue
        cases = [("random", random_element(F, rng, rng.choice([8, 32, 64, 128]), nonzero=True))
                 for _ in range(args.samples)]
        cases += [("convergent", a) for a in adversarial_elements(F, 10**40)[::4]]
        for kind, a in cases:
            dstar = order.sign_threshold(a)
            path, level = decided_level(a, dstar)
            w.writerow([name, F.degree, kind, opc(a).bit_length(), path, level, dstar.bit_length()])
    if fh is not sys.stdout:
        fh.close()


if __name__ == "__main__":
    main()
