import pytest

from maxclass.errors import ExceptionalPrimeError
from maxclass.checks import iter_specs
from maxclass.rootlog import PrimePower
from maxclass.stability import (
    is_irreducible_depth,
    is_irreducible_structural,
    minimal_stable_index,
    restriction_monotone,
)
from maxclass.standard_form import EigenSpec, build_rep

EXHAUSTIVE_GRID = [(2, 2, 4), (2, 3, 3), (3, 3, 2), (3, 5, 1), (4, 5, 1), (5, 5, 1)]


def brute_minimal_stable(rep, first_row=1):
    """Oracle: smallest j such that ALL columns repeat with period p^j."""
    p, N = rep.spec.pp.p, rep.spec.pp.N
    q = rep.dim
    cols = [rep.column(c, first_row) for c in range(1, q + 1)]
    for j in range(N + 1):
        step = p**j
        if all(cols[c] == cols[(c + step) % q] for c in range(q)):
            return j
    raise AssertionError("period p^N must always work")


def test_minimal_stable_examples():
    pp = PrimePower(5, 1)
    rep = build_rep(EigenSpec(3, pp, (0, 1, 0)))
    # Columns 1 and 2 differ in row 1 ((0,1,0) vs (1,1,0)), so j=0 fails
    # and j=1 is forced.
    assert minimal_stable_index(rep, 1) == 1
    # Rows 2..3 are the constant columns (1, 0).
    assert minimal_stable_index(rep, 2) == 0
    zero = build_rep(EigenSpec(3, pp, (0, 0, 0)))
    assert minimal_stable_index(zero, 1) == 0


def test_minimal_stable_matches_brute_force():
    for n, p, N in EXHAUSTIVE_GRID:
        for spec in iter_specs(n, p, N):
            rep = build_rep(spec, validate=False)
            for first_row in range(1, n + 1):
                assert minimal_stable_index(rep, first_row) == brute_minimal_stable(
                    rep, first_row
                )


def test_irreducible_examples():
    pp = PrimePower(5, 1)
    assert is_irreducible_structural(build_rep(EigenSpec(3, pp, (0, 0, 1))))
    assert not is_irreducible_structural(build_rep(EigenSpec(3, pp, (0, 0, 0))))
    # n=2, p=3, N=2, e_2 = 3: row 1 is 3(j-1) mod 9, which repeats with
    # period 3, so V_3 is stable and the rep is reducible.
    rep = build_rep(EigenSpec(2, PrimePower(3, 2), (0, 3)))
    assert not is_irreducible_structural(rep)


def test_depth_criterion_examples():
    pp = PrimePower(5, 1)
    assert is_irreducible_depth(EigenSpec(3, pp, (0, 0, 1)))
    assert not is_irreducible_depth(EigenSpec(3, PrimePower(5, 2), (0, 5, 10)))
    with pytest.raises(ExceptionalPrimeError):
        is_irreducible_depth(EigenSpec(4, PrimePower(3, 1), (0, 0, 0, 1)))


def test_depth_equals_structural_exhaustively():
    for n, p, N in EXHAUSTIVE_GRID:
        for spec in iter_specs(n, p, N):
            rep = build_rep(spec, validate=False)
            assert is_irreducible_depth(spec) == is_irreducible_structural(rep)


def test_column_equality_propagates():
    for n, p, N in EXHAUSTIVE_GRID:
        q = p**N
        for spec in iter_specs(n, p, N):
            rep = build_rep(spec, validate=False)
            cols = [rep.column(c) for c in range(1, q + 1)]
            for c1 in range(q):
                for c2 in range(c1 + 1, q):
                    if cols[c1] == cols[c2]:
                        assert cols[(c1 + 1) % q] == cols[(c2 + 1) % q]


def test_restriction_monotone():
    pp = PrimePower(5, 1)
    rep = build_rep(EigenSpec(3, pp, (0, 1, 0)))
    assert restriction_monotone(rep, 2)
    rep2 = build_rep(EigenSpec(3, pp, (0, 0, 1)))
    assert restriction_monotone(rep2, 2)
    with pytest.raises(ValueError):
        restriction_monotone(rep, 3)
    for n, p, N in EXHAUSTIVE_GRID:
        if n == 2:
            continue
        for spec in iter_specs(n, p, N):
            rep = build_rep(spec, validate=False)
            assert all(restriction_monotone(rep, k) for k in range(2, n))


def test_shallow_specs_repeat_early():
    # When no tail entry is primitive, the whole table repeats with
    # period p^(max depth), bounding the minimal stable index below N.
    for n, p, N in EXHAUSTIVE_GRID:
        q = p**N
        for spec in iter_specs(n, p, N):
            d = spec.max_tail_depth()
            if d == N:
                continue
            rep = build_rep(spec, validate=False)
            cols = [rep.column(c) for c in range(1, q + 1)]
            step = p**d
            assert all(cols[c] == cols[(c + step) % q] for c in range(q))
            assert minimal_stable_index(rep) <= d
