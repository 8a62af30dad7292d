import pytest
from hypothesis import given
from hypothesis import strategies as st

from maxclass.errors import ContextMismatchError, GuardExceededError
from maxclass.rootlog import (
    ExponentResidue,
    PrimePower,
    depth_of,
    depth_product_bound,
    is_prime,
)

SMALL_CONTEXTS = [(2, 6), (3, 4), (5, 3), (7, 2), (11, 2)]  # all p^N <= 125


def test_is_prime():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(50):
        assert is_prime(n) == (n in primes)


def test_prime_power_validation():
    assert PrimePower(3, 2).dim == 9
    assert PrimePower(2, 0).dim == 1
    with pytest.raises(ValueError):
        PrimePower(4, 1)
    with pytest.raises(ValueError):
        PrimePower(3, -1)
    with pytest.raises(GuardExceededError):
        PrimePower(2, 30).check_guard()
    PrimePower(2, 30).check_guard(guard=2**31)


def test_depth_examples():
    assert depth_of(0, 3, 2) == 0
    # zeta^3 with zeta a primitive 9th root is a primitive cube root
    assert depth_of(3, 3, 2) == 1
    assert depth_of(1, 3, 2) == 2


def test_depth_is_order_membership():
    # depth(e) <= k  iff  e * p^k = 0 mod p^N, exhaustively over p^N <= 125
    for p, N in SMALL_CONTEXTS:
        q = p**N
        for e in range(q):
            d = depth_of(e, p, N)
            for k in range(N + 1):
                assert (e * p**k % q == 0) == (k >= d)


def test_residue_validation_and_depth():
    pp = PrimePower(3, 2)
    with pytest.raises(ValueError):
        ExponentResidue(9, pp)
    with pytest.raises(ValueError):
        ExponentResidue(-1, pp)
    assert ExponentResidue(6, pp).depth == 1
    assert ExponentResidue(0, pp).depth == 0


def test_context_mismatch():
    a = ExponentResidue(1, PrimePower(3, 2))
    b = ExponentResidue(1, PrimePower(3, 1))
    with pytest.raises(ContextMismatchError):
        a + b
    with pytest.raises(ContextMismatchError):
        depth_product_bound(a, b)


def test_product_bound_examples():
    pp = PrimePower(3, 2)
    # 3 + 6 = 9 = 0 mod 9: depth drops to 0 <= max(1, 1)
    assert depth_product_bound(ExponentResidue(3, pp), ExponentResidue(6, pp))
    pp52 = PrimePower(5, 2)
    assert depth_product_bound(ExponentResidue(0, pp52), ExponentResidue(5, pp52))
    pp2 = PrimePower(2, 1)
    assert depth_product_bound(ExponentResidue(1, pp2), ExponentResidue(1, pp2))


def test_product_bound_exhaustive():
    for p, N in SMALL_CONTEXTS:
        pp = PrimePower(p, N)
        q = pp.dim
        residues = [ExponentResidue(v, pp) for v in range(q)]
        for a in residues:
            for b in residues:
                assert depth_product_bound(a, b)


@given(st.sampled_from(SMALL_CONTEXTS), st.data())
def test_residue_group_ops(ctx, data):
    p, N = ctx
    pp = PrimePower(p, N)
    q = pp.dim
    a = ExponentResidue(data.draw(st.integers(0, q - 1)), pp)
    b = ExponentResidue(data.draw(st.integers(0, q - 1)), pp)
    assert (a + b).value == (a.value + b.value) % q
    assert (a + (-a)).value == 0
    assert a.scaled(q + 1) == a
