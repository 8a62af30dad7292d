import pytest

from maxclass.checks import iter_specs
from maxclass.counting import (
    CountReport,
    closed_form_count,
    enumerate_isoclasses,
    expected_census,
    resolve_budget,
)
from maxclass.errors import BudgetExceededError, ExceptionalPrimeError
from maxclass.orbits import shift_orbit
from maxclass.stability import is_irreducible_depth

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


def brute_force_count(n, p, N):
    """Oracle: partition the irreducible tails into whole orbits."""
    seen = set()
    count = 0
    census = {}
    for spec in iter_specs(n, p, N):
        if spec.tail in seen or not is_irreducible_depth(spec):
            continue
        orbit = shift_orbit(spec)
        seen |= orbit.tails
        count += 1
        census[orbit.size] = census.get(orbit.size, 0) + 1
    return count, dict(sorted(census.items()))


def test_reference_values():
    # (3,5,1): 24 irreducible tails; the 20 with a primitive e_3 fall in
    # 4 orbits of size 5; the 4 with e_3 = 0 and e_2 a unit are fixed.
    report = enumerate_isoclasses(3, 5, 1)
    assert report.r_enumerated == 8
    assert report.orbit_census == {1: 4, 5: 4}
    # (2,3,2): the 6 units mod 9; the restriction is constant so all
    # orbits are singletons.
    report = enumerate_isoclasses(2, 3, 2)
    assert report.r_enumerated == 6
    assert report.orbit_census == {1: 6}
    assert enumerate_isoclasses(4, 5, 0).r_enumerated == 1
    assert enumerate_isoclasses(3, 5, 2).r_enumerated == 56
    assert enumerate_isoclasses(4, 5, 1).r_enumerated == 28


def test_closed_form_examples():
    assert closed_form_count(3, 5, 1) == 8  # (4/5)*5 + (4/5)*5
    assert closed_form_count(3, 5, 2) == 56  # 20 + 16 + 20
    assert closed_form_count(2, 3, 2) == 6  # only the last term survives
    assert closed_form_count(2, 2, 1) == 1
    assert closed_form_count(4, 5, 1) == 28
    assert closed_form_count(3, 3, 3) == 60
    assert closed_form_count(5, 5, 1) == 128


def test_closed_form_guards():
    with pytest.raises(ExceptionalPrimeError):
        closed_form_count(4, 3, 1)
    with pytest.raises(ValueError):
        closed_form_count(1, 5, 1)
    with pytest.raises(ValueError):
        closed_form_count(3, 6, 1)
    assert closed_form_count(3, 5, 0) == 1


def test_enumeration_guards():
    with pytest.raises(ExceptionalPrimeError):
        enumerate_isoclasses(4, 3, 1)
    with pytest.raises(BudgetExceededError):
        enumerate_isoclasses(3, 5, 2, budget=100)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("MAXCLASS_BUDGET", "123")
    assert resolve_budget() == 123
    assert resolve_budget(10) == 10
    monkeypatch.delenv("MAXCLASS_BUDGET")
    assert resolve_budget() == 10**8


def test_triple_agreement_on_grid():
    for n, p, N in GRID:
        report = enumerate_isoclasses(n, p, N)
        assert report.agree, (n, p, N, report)
        assert report.census_total() == report.r_enumerated


def test_census_matches_case_split():
    for n, p, N in GRID:
        report = enumerate_isoclasses(n, p, N)
        assert report.orbit_census == expected_census(n, p, N), (n, p, N)


def test_orbit_size_determined_by_depth_case():
    # Size p^N orbits are exactly the tails with a primitive entry beyond
    # e_2; size p^l (1 <= l <= N-1) needs e_2 primitive and max depth l
    # among the rest; singletons need e_2 primitive and trivial rest.
    from maxclass.rootlog import depth_of

    for n, p, N in [(3, 5, 2), (3, 3, 3), (4, 5, 2), (2, 3, 3), (3, 7, 1)]:
        for spec in iter_specs(n, p, N):
            if not is_irreducible_depth(spec):
                continue
            depths = [depth_of(e, p, N) for e in spec.tail]
            beyond = max(depths[1:], default=0)
            if beyond == N:
                want = p**N
            else:
                assert depths[0] == N  # irreducibility forces e_2 primitive
                want = p**beyond
            assert shift_orbit(spec).size == want, (spec.exponents, p, N)


def test_expected_census_sums_to_closed_form():
    for n, p, N in GRID:
        census = expected_census(n, p, N)
        assert sum(census.values()) == closed_form_count(n, p, N)


def test_against_brute_force_partition():
    for n, p, N in [(2, 2, 3), (2, 3, 2), (3, 3, 2), (3, 5, 1), (4, 5, 1), (3, 7, 1)]:
        count, census = brute_force_count(n, p, N)
        report = enumerate_isoclasses(n, p, N)
        assert (count, census) == (report.r_enumerated, report.orbit_census)


def test_parallel_enumeration_is_deterministic():
    serial = enumerate_isoclasses(4, 5, 2)
    for workers in (2, 3):
        parallel = enumerate_isoclasses(4, 5, 2, workers=workers)
        assert parallel == serial


def test_report_structure():
    report = enumerate_isoclasses(3, 5, 1)
    assert isinstance(report, CountReport)
    assert (report.n, report.p, report.N) == (3, 5, 1)
    assert report.r_enumerated == report.r_closed_form == report.r_series
