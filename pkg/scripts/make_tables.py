#!/usr/bin/env python3
"""Reproduce the headline tables: counts and zeta factors at desk scale.

Prints the closed-form zeta factor, abscissa and functional-equation
factor for n = 2..8, then a triple-method count table over the standard
verification grid.  Everything is exact; any disagreement would be a
bug, and the script exits nonzero if one appears.
"""

import argparse
import sys

from maxclass.counting import enumerate_isoclasses
from maxclass.zeta import (
    abscissa,
    functional_equation_factor,
    render_text,
    zeta_closed_form,
)

GRID = [
    *((2, 2, N) for N in range(1, 5)),
    *((2, 3, N) for N in range(1, 4)),
    *((3, 3, N) for N in range(1, 4)),
    *((3, 5, N) for N in range(1, 3)),
    *((3, 7, N) for N in range(1, 3)),
    *((4, 5, N) for N in range(1, 3)),
    (5, 5, 1),
    (5, 7, 1),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8,
                        help="largest class index for the zeta table")
    args = parser.parse_args()

    print("== local zeta factors ==")
    for n in range(2, args.max_n + 1):
        z = zeta_closed_form(n)
        print(
            f"n={n}: {render_text(z):44s} abscissa={abscissa(n)} "
            f"inversion factor=p^{functional_equation_factor(n)}"
        )

    print()
    print("== twist isoclass counts (enumerated / closed form / series) ==")
    print(f"{'n':>2} {'p':>3} {'N':>2} {'r':>8}  census")
    disagreements = 0
    for n, p, N in GRID:
        report = enumerate_isoclasses(n, p, N)
        marker = "" if report.agree else "  << DISAGREE"
        disagreements += not report.agree
        census = ", ".join(
            f"{cnt}x{size}" for size, cnt in sorted(report.orbit_census.items())
        )
        print(f"{n:>2} {p:>3} {N:>2} {report.r_enumerated:>8}  [{census}]{marker}")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
