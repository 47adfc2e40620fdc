#!/usr/bin/env python3
"""Recompute the two four-variable benchmark tables and print them as CSV.

Usage:
    python3 scripts/golden_tables.py [--to N] [--cache PATH]
"""
import argparse
import os
import sys
import time

from regpow import FamilySpec, build, defect_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--to", type=int, default=5, help="largest power (default 5)")
    parser.add_argument("--cache", help="optional Betti cache file (REGPOW_CACHE)")
    args = parser.parse_args()
    if args.cache:
        os.environ["REGPOW_CACHE"] = args.cache

    jobs = [
        ("m2_reg", "reg_power"),
        ("m2_reg", "reg_quotient"),
        ("m2_sdeg", "sdeg"),
    ]
    for family, fn in jobs:
        presented = build(FamilySpec(family))
        start = time.time()
        report = defect_report(presented, fn, 1, args.to)
        elapsed = time.time() - start
        print(f"# {family} / {fn}  (slope {report.slope}, {elapsed:.1f}s)")
        print("n,value,defect")
        for offset, value in enumerate(report.values):
            print(f"{report.n_from + offset},{value},{report.defects[offset]}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
