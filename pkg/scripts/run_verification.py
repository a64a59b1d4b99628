#!/usr/bin/env python3
"""Run the full verification catalog with a timing table.

Writes one JSON line per suite to the given output file (default
reports.jsonl) and prints a human-readable summary.  Exit code 0 only if
every suite passes.
"""

import argparse
import sys

from halfturn_ice import verify


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    ap.add_argument("--out", default="reports.jsonl")
    args = ap.parse_args()

    reports = []
    total = 0.0
    for suite_id in verify.SUITES:
        rep = verify.run_suite(suite_id, seed=args.seed)
        reports.append(rep)
        total += rep.elapsed
        mark = "PASS" if rep.passed else "FAIL"
        print(f"{mark}  {suite_id:22s} checks={rep.checks_run:5d}  {rep.elapsed:7.2f}s")
        if rep.witness:
            print(f"      witness: {rep.witness}")
    print(f"{'-' * 56}\n{sum(r.passed for r in reports)}/{len(reports)} suites passed "
          f"in {total:.1f}s (seed {args.seed})")

    with open(args.out, "w") as fh:
        for rep in reports:
            fh.write(rep.to_json(include_elapsed=True) + "\n")
    print(f"wrote {args.out}")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
