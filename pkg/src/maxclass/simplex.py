"""k-simplex numbers and their modular identities.

The k-simplex numbers generalize triangle numbers:

    T_0(j) = 1,   T_k(0) = 0 for k >= 1,
    T_k(j) = T_k(j-1) + T_{k-1}(j),

with closed form T_k(j) = C(j+k-1, k) = j(j+1)...(j+k-1) / k!.

Every diagonal entry of a standard-form eigenvalue table is a product of
the defining eigenvalues raised to T_d(j-1), so these numbers (and their
behaviour mod p^N) drive the whole package.  The exact values overflow
machine words almost immediately; the counting layer only ever needs
residues, so ``simplex_mod`` evaluates T_k(j) mod p^N without building
the big integer whenever k! is a unit mod p (that is, p > k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InternalCheckError


def simplex(k: int, j: int) -> int:
    """T_k(j) as an exact integer."""
    if k < 0 or j < 0:
        raise ValueError("simplex numbers are defined for k >= 0, j >= 0")
    if k == 0:
        return 1
    if j == 0:
        return 0
    return math.comb(j + k - 1, k)


def simplex_mod(k: int, j: int, p: int, N: int) -> int:
    """T_k(j) mod p^N.

    For p > k the factorial denominator is a unit mod p^N, so the value
    is the k-term rising product reduced mod p^N times the inverse of k!;
    j never has to be materialized inside a big binomial.  Otherwise we
    fall back to the exact integer and reduce.
    """
    if k < 0 or j < 0:
        raise ValueError("simplex numbers are defined for k >= 0, j >= 0")
    if p < 2 or N < 1:
        raise ValueError("modulus needs p >= 2 and N >= 1")
    q = p**N
    if k == 0:
        return 1 % q
    if j == 0:
        return 0
    if p > k:
        prod = 1
        for i in range(k):
            prod = prod * ((j + i) % q) % q
        try:
            inv = pow(math.factorial(k), -1, q)
        except ValueError:
            # p was not actually prime; the unit argument fails, use exact.
            return simplex(k, j) % q
        return prod * inv % q
    return simplex(k, j) % q


def simplex_row_mod(max_k: int, p: int, N: int) -> tuple[tuple[int, ...], ...]:
    """All residues T_d(j) mod p^N for 0 <= d <= max_k, 0 <= j < p^N.

    Built by the additive recursion, which is exact on residues; one row
    per d.  This is the table the standard-form builder consumes.
    """
    q = p**N
    rows = [tuple([1] * q)]
    for _ in range(max_k):
        prev = rows[-1]
        cur = [0] * q
        for j in range(1, q):
            cur[j] = (cur[j - 1] + prev[j]) % q
        rows.append(tuple(cur))
    return tuple(rows)


@dataclass(frozen=True)
class SimplexTable:
    """An exact table of T_k(j) for 0 <= k <= max_k, 0 <= j <= max_j."""

    max_k: int
    max_j: int
    values: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, max_k: int, max_j: int) -> "SimplexTable":
        if max_k < 0 or max_j < 0:
            raise ValueError("table bounds must be nonnegative")
        rows = [[1] * (max_j + 1)]
        for _ in range(max_k):
            prev = rows[-1]
            cur = [0] * (max_j + 1)
            for j in range(1, max_j + 1):
                cur[j] = cur[j - 1] + prev[j]
            rows.append(cur)
        return cls(max_k, max_j, tuple(tuple(r) for r in rows))

    def value(self, k: int, j: int) -> int:
        return self.values[k][j]

    def validate(self) -> None:
        """Check the recursion and the binomial closed form on every entry."""
        for k in range(self.max_k + 1):
            for j in range(self.max_j + 1):
                v = self.values[k][j]
                if v != simplex(k, j):
                    raise InternalCheckError(
                        f"table entry ({k},{j})={v} disagrees with the closed form"
                    )
                if k >= 1 and j >= 1:
                    if v != self.values[k][j - 1] + self.values[k - 1][j]:
                        raise InternalCheckError(
                            f"recursion fails at ({k},{j})"
                        )


def scaled_congruence_holds(k: int, p: int, N: int, m: int, alpha: int) -> bool:
    """Periodicity of a*p^m*T_k(j-1) mod p^N with period p^(N-m).

    Checks, exhaustively over the full range, that

        a * p^m * T_k(beta*p^(N-m) + j)  ==  a * p^m * T_k(j)   (mod p^N)

    for all 1 <= beta < p^m and 0 <= j <= p^(N-m) - 1.  This is the
    congruence that makes eigenvalue tables built from non-primitive
    roots repeat early, and it needs k! to be a unit, hence k < p.
    """
    if not 1 <= k < p:
        raise ValueError(f"the congruence requires 1 <= k < p (got k={k}, p={p})")
    if not 1 <= m <= N:
        raise ValueError("m must lie in [1, N]")
    if alpha % p == 0:
        raise ValueError("alpha must be coprime to p")
    q = p**N
    step = p ** (N - m)
    scale = alpha * p**m
    for j in range(step):
        base = scale * simplex_mod(k, j, p, N) % q
        for beta in range(1, p**m):
            if scale * simplex_mod(k, beta * step + j, p, N) % q != base:
                return False
    return True
