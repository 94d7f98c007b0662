#!/usr/bin/env python3
"""Push each verification sweep past the default ranges and time it.

Writes one JSON report per check (same schema as ``emdpoly verify --format json``).
"""

import argparse
import json
import logging

from emdpoly.verify import CHECKS, VerifyConfig, run_check

# ranges that still finish in well under a minute each on a laptop
WIDE = {
    "palindromic": 200,
    "unimodal": 200,
    "real-rooted": 40,
    "closed-vs-recursive": 40,
    "symdiff-vs-recursive": 9,
    "emd-oracle": 6,
    "wiener-triple": 6,
    "conj-sum": 200,
    # relative error at s=1000 is about (n-1)/2000, so the 1% bound stops at n=20
    "limit-convergence": 20,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--checks", default=",".join(sorted(CHECKS)))
    ap.add_argument("--max-s", type=int, default=6)
    ap.add_argument("--out", default=None, help="write the reports to this JSON file")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    reports = []
    for name in args.checks.split(","):
        report = run_check(name, VerifyConfig(max_n=WIDE[name], max_s=args.max_s))
        print(f"{report.status.upper():4} {name:22} {json.dumps(report.params)} {report.elapsed_ms / 1000:.2f} s")
        reports.append(report.to_dict())
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(reports, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
