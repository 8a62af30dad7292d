#!/usr/bin/env python3
"""Run every exhaustive property suite and report per-property status.

Equivalent to ``maxclass verify --suite all`` but usable as a plain
script during development; exits nonzero if anything fails.
"""

import sys
import time

from maxclass.checks import SUITES


def main() -> int:
    failed = 0
    total = 0
    for name in ("simplex", "rootlog", "standardform", "stability", "orbits",
                 "counting", "zeta", "oracle"):
        start = time.perf_counter()
        results = SUITES[name](None)
        elapsed = time.perf_counter() - start
        for r in results:
            total += 1
            failed += not r.passed
            status = "PASS" if r.passed else "FAIL"
            detail = f" ({r.detail})" if r.detail else ""
            print(f"[{status}] {name}: {r.name}{detail}")
        print(f"-- {name}: {elapsed:.2f}s")
    print(f"{total - failed}/{total} properties passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
