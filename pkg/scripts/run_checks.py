"""Run every oracle suite on every test field and write one CSV report.

    python3 scripts/run_checks.py --samples 1000 --out checks.csv
"""

import argparse
import csv
import sys
import time

from fields import FIELDS
from zalpha.suites import SUITES, run_suite


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", default="-")
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--suites", nargs="+", default=list(SUITES), choices=SUITES)
    args = ap.parse_args(argv)
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(fh)
    w.writerow(["field", "suite", "check", "samples", "failures", "worst_ratio", "seconds"])
    bad = 0
    for name, F in FIELDS.items():
        for suite in args.suites:
            n = args.samples if suite != "lll" else max(1, args.samples // 20)
            t0 = time.perf_counter()
            recs = run_suite(suite, F, n, args.seed)
            dt = time.perf_counter() - t0
            for r in recs:
                w.writerow([name, suite, r.check, r.samples, r.failures, f"{r.worst_ratio:.6g}", f"{dt:.2f}"])
                bad += r.failures
    if fh is not sys.stdout:
        fh.close()
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
