"""Twist-isoclass counting: exhaustive enumeration vs closed form vs series.

The number r_{p^N} of twist isoclasses of irreducible p^N-dimensional
representations is computed three independent ways and reconciled:

* enumeration: walk every tail (e_2, ..., e_n) in (Z/p^N)^(n-1), keep
  the irreducible ones (some entry a unit mod p), and count one per
  orbit by keeping exactly the tails that equal their orbit's
  lexicographic minimum;
* closed form: the case split by depth profile.  With a primitive entry
  beyond e_2 the orbit has full size p^N; with e_2 primitive and the
  rest of maximal depth l the orbit has size p^l.  Summing
  choices/orbit-size over the cases gives, for N >= 1,

      r_{p^N} = (1 - p^-(n-2)) p^((n-2)N)
              + (1 - 1/p)(1 - p^-(n-2)) p^N * sum_{l=1..N-1} p^((n-3)l)
              + (1 - 1/p) p^N;

  note the middle sum stops at l = N-1: its l = N summand would
  double-count the all-trivial-rest case that the third term already
  covers, and only the N-1 version matches both the enumeration and the
  series expansion of the closed-form zeta factor.
* series: the t^N coefficient of the closed-form rational function.

The same case split predicts the whole orbit-size census, which
``expected_census`` exposes so the partition can be validated term by
term rather than only in total.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    BudgetExceededError,
    ExceptionalPrimeError,
    InternalCheckError,
)
from .rootlog import is_prime
from .zeta import count_from_series

DEFAULT_BUDGET = 10**8
BUDGET_ENV_VAR = "MAXCLASS_BUDGET"


def resolve_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get(BUDGET_ENV_VAR, DEFAULT_BUDGET))


@dataclass(frozen=True)
class CountReport:
    """The three counts plus the per-orbit-size census."""

    n: int
    p: int
    N: int
    r_enumerated: int
    r_closed_form: int
    r_series: int
    orbit_census: dict[int, int] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.r_enumerated == self.r_closed_form == self.r_series

    def census_total(self) -> int:
        return sum(self.orbit_census.values())


def _validate_grid_point(n: int, p: int, N: int) -> None:
    if n < 2:
        raise ValueError("the group family starts at n = 2")
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if N < 0:
        raise ValueError("N must be >= 0")
    if p < n:
        raise ExceptionalPrimeError(
            f"exceptional prime p={p} < n={n}: counting here requires p >= n"
        )


def closed_form_count(n: int, p: int, N: int) -> int:
    """r_{p^N} by the case-split formula, in exact rational arithmetic.

    N = 0 returns 1 (the trivial twist isoclass); for n = 2 the first
    two terms vanish identically and only (1 - 1/p) p^N survives.
    """
    _validate_grid_point(n, p, N)
    if N == 0:
        return 1
    unit_frac = 1 - Fraction(1, p)
    tail_frac = 1 - Fraction(1, p ** (n - 2))
    total = tail_frac * p ** ((n - 2) * N)
    total += unit_frac * tail_frac * p**N * sum(
        Fraction(p) ** ((n - 3) * ell) for ell in range(1, N)
    )
    total += unit_frac * p**N
    if total.denominator != 1:
        raise InternalCheckError(f"closed form gave a non-integer: {total}")
    return int(total)


def expected_census(n: int, p: int, N: int) -> dict[int, int]:
    """Orbit census the case split predicts: {orbit size: orbit count}.

    Sizes p^N (a primitive entry beyond e_2), p^l for 1 <= l <= N-1
    (e_2 primitive, rest of max depth l) and 1 (e_2 primitive, rest
    trivial).
    """
    _validate_grid_point(n, p, N)
    if N == 0:
        return {1: 1}
    census: dict[int, int] = {}
    deep_tails = p ** ((n - 2) * N) - p ** ((n - 2) * (N - 1))
    if deep_tails:
        census[p**N] = deep_tails
    units = p**N - p ** (N - 1)
    for ell in range(1, N):
        rest = p ** ((n - 2) * ell) - p ** ((n - 2) * (ell - 1))
        orbits, remainder = divmod(units * rest, p**ell)
        if remainder:
            raise InternalCheckError("census term is not integral")
        if orbits:
            census[p**ell] = census.get(p**ell, 0) + orbits
    census[1] = census.get(1, 0) + units
    return census


def _count_tail_range(n: int, p: int, N: int, lo: int, hi: int):
    """Count canonical irreducible tails with index in [lo, hi).

    Tails are indexed base-p^N with e_2 least significant.  Returns
    (count, census) for the slice; slices merge by addition, so the
    total is independent of the sharding.
    """
    q = p**N
    width = n - 1
    count = 0
    census: dict[int, int] = {}
    for idx in range(lo, hi):
        rem = idx
        tail = []
        for _ in range(width):
            tail.append(rem % q)
            rem //= q
        if all(e % p == 0 for e in tail):
            continue  # no primitive entry: reducible
        # Rows 2..n of the table, built by the forward recursion.
        rows = [None] * width
        rows[width - 1] = [tail[width - 1]] * q
        for r in range(width - 2, -1, -1):
            above = rows[r + 1]
            cur = [tail[r]] * q
            for j in range(1, q):
                cur[j] = (above[j] + cur[j - 1]) % q
            rows[r] = cur
        cols = list(zip(*rows))
        base = cols[0]
        if any(c < base for c in cols[1:]):
            continue  # a shift reaches something lex-smaller: not canonical
        # Orbit size: p^m for the minimal stable index of these rows.
        m = 0
        while cols[p**m % q] != base:
            m += 1
        size = p**m
        if len(set(cols)) != size:
            raise InternalCheckError(
                f"orbit size law violated at tail {tuple(tail)} "
                f"(n={n}, p={p}, N={N})"
            )
        count += 1
        census[size] = census.get(size, 0) + 1
    return count, census


def enumerate_isoclasses(
    n: int,
    p: int,
    N: int,
    budget: int | None = None,
    workers: int = 1,
) -> CountReport:
    """Enumerate all tails and reconcile the count with the other methods.

    Keeps a tail iff it is irreducible and equals its own canonical
    (lex-least) orbit representative, so memory stays O(1) per tail and
    the tail space can be sharded across ``workers`` processes; the
    reduction is a plain sum, deterministic under any sharding.
    """
    _validate_grid_point(n, p, N)
    budget = resolve_budget(budget)
    if N == 0:
        return CountReport(n, p, N, 1, 1, 1, {1: 1})
    total_tails = p ** ((n - 1) * N)
    if total_tails > budget:
        raise BudgetExceededError(
            f"{total_tails} tails exceed the enumeration budget {budget} "
            f"(override with the budget argument or {BUDGET_ENV_VAR})"
        )
    if workers <= 1:
        count, census = _count_tail_range(n, p, N, 0, total_tails)
    else:
        shards = min(workers, total_tails)
        bounds = [total_tails * i // shards for i in range(shards + 1)]
        count = 0
        census = {}
        with ProcessPoolExecutor(max_workers=shards) as pool:
            jobs = [
                pool.submit(_count_tail_range, n, p, N, bounds[i], bounds[i + 1])
                for i in range(shards)
            ]
            for job in jobs:
                c, cen = job.result()
                count += c
                for size, orbits in cen.items():
                    census[size] = census.get(size, 0) + orbits
    return CountReport(
        n,
        p,
        N,
        r_enumerated=count,
        r_closed_form=closed_form_count(n, p, N),
        r_series=count_from_series(n, p, N),
        orbit_census=dict(sorted(census.items())),
    )
