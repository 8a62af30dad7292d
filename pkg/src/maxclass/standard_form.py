"""Standard-form representation tables.

The groups handled by this package are

    G_n = < a_1, ..., a_n, b | [a_i, b] = a_{i+1} >,

nilpotent of maximal class n (commutators not forced by the relations
are trivial; a_{n+1} = 1).  An irreducible representation of dimension
p^N can be put, after twisting, in *standard form*: the image y of b is
the p^N-cycle permutation matrix and the images x_i of the a_i are
diagonal.  Writing the j-th diagonal entry of x_i as zeta^E[i][j] for a
primitive p^N-th root zeta, the commutation relation [x_i, y] = x_{i+1}
pins the whole table to the defining column (e_1, ..., e_n) = E[.][1]:

    E[i][j+1] = E[i+1][j+1] + E[i][j]          (mod p^N)
    E[i][j]   = sum_{k=i..n} e_k * T_{k-i}(j-1) (mod p^N)

with T_d the d-simplex numbers.  Twisting normalizes e_1 = 0 and the
cycle's corner scalar to 1.  Here [u, v] = u v u^-1 v^-1 and y acts on
basis vectors by e_j -> e_{j+1} (cyclically); exactly this pairing turns
the relation into the recursion above, and the numerical oracle checks
it on actual matrices.

Columns are 1-indexed and cyclic mod p^N throughout the public API,
mirroring the j = 1..p^N convention of the formulas; internal storage is
0-indexed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalCheckError
from .rootlog import DEFAULT_TABLE_GUARD, ExponentResidue, PrimePower, depth_of
from .simplex import simplex_row_mod


@lru_cache(maxsize=None)
def _cached_simplex_rows(p: int, N: int, max_k: int) -> tuple[tuple[int, ...], ...]:
    return simplex_row_mod(max_k, p, N)


@dataclass(frozen=True)
class EigenSpec:
    """Defining data of a standard-form representation.

    ``exponents`` is (e_1, ..., e_n): the discrete logs of the first
    diagonal entries of x_1, ..., x_n.  e_1 = 0 (twist normalization),
    and every e_i lies in [0, p^N); that range is the full answer only
    for p >= n, which is the regime this package supports.
    """

    n: int
    pp: PrimePower
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("the group index n must be >= 2")
        if self.pp.N < 1:
            raise ValueError("standard forms need N >= 1")
        exps = tuple(self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != self.n:
            raise ValueError(f"expected {self.n} exponents, got {len(exps)}")
        if exps[0] != 0:
            raise ValueError("e_1 must be 0 (twist normalization)")
        q = self.pp.dim
        for e in exps:
            if not 0 <= e < q:
                raise ValueError(f"exponent {e} out of range [0, {q})")

    @property
    def tail(self) -> tuple[int, ...]:
        """(e_2, ..., e_n) - the part twisting cannot change."""
        return self.exponents[1:]

    @property
    def p(self) -> int:
        return self.pp.p

    @property
    def N(self) -> int:
        return self.pp.N

    def max_tail_depth(self) -> int:
        return max(depth_of(e, self.pp.p, self.pp.N) for e in self.tail)


def spec_from_tail(n: int, pp: PrimePower, tail) -> EigenSpec:
    """Build the normalized spec (0, e_2, ..., e_n) from a tail."""
    return EigenSpec(n, pp, (0, *tail))


@dataclass(frozen=True)
class StandardFormRep:
    """The full n x p^N exponent table of a standard-form representation.

    ``rows[i-1][j-1]`` holds E[i][j].  Row n is constant (x_n is a
    scalar), column 1 is the defining spec, and the cycle's corner
    scalar is normalized to 1.
    """

    spec: EigenSpec
    rows: tuple[tuple[int, ...], ...]
    y_scalar: int = 1

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def dim(self) -> int:
        return self.spec.pp.dim

    def entry(self, i: int, j: int) -> int:
        """E[i][j] with 1-based i and 1-based cyclic j."""
        if not 1 <= i <= self.n:
            raise ValueError(f"row index {i} out of range [1, {self.n}]")
        return self.rows[i - 1][(j - 1) % self.dim]

    def residue(self, i: int, j: int) -> ExponentResidue:
        return ExponentResidue(self.entry(i, j), self.spec.pp)

    def column(self, j: int, first_row: int = 1) -> tuple[int, ...]:
        """The joint eigenvalue exponents (E[first_row][j], ..., E[n][j])."""
        j0 = (j - 1) % self.dim
        return tuple(row[j0] for row in self.rows[first_row - 1 :])

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.spec.pp.p,
            "N": self.spec.pp.N,
            "dim": self.dim,
            "exponents": list(self.spec.exponents),
            "rows": [list(row) for row in self.rows],
            "y_scalar": self.y_scalar,
        }


def build_rep(
    spec: EigenSpec,
    guard: int = DEFAULT_TABLE_GUARD,
    validate: bool = True,
) -> StandardFormRep:
    """Construct the exponent table determined by ``spec``.

    The table is built bottom-up by the forward recursion (row n is
    constant, then E[i][j] = E[i+1][j] + E[i][j-1]); with ``validate``
    every entry is re-derived from the simplex closed form, which must
    agree exactly.  The cyclic wraparound of the recursion holds iff
    ``cycle_constraint_holds(spec)`` - automatic for p >= n.
    """
    spec.pp.check_guard(guard)
    q = spec.pp.dim
    n = spec.n
    exps = spec.exponents
    rows: list[tuple[int, ...]] = [()] * n
    rows[n - 1] = tuple([exps[n - 1]] * q)
    for i in range(n - 2, -1, -1):
        above = rows[i + 1]
        cur = [exps[i]] * q
        for j in range(1, q):
            cur[j] = (above[j] + cur[j - 1]) % q
        rows[i] = tuple(cur)
    rep = StandardFormRep(spec, tuple(rows))
    if validate:
        _validate_closed_form(rep)
    return rep


def _validate_closed_form(rep: StandardFormRep) -> None:
    spec = rep.spec
    p, N, n = spec.pp.p, spec.pp.N, spec.n
    q = spec.pp.dim
    tk = _cached_simplex_rows(p, N, n - 1)
    for i in range(1, n + 1):
        for j in range(1, q + 1):
            want = sum(
                spec.exponents[k - 1] * tk[k - i][j - 1] for k in range(i, n + 1)
            ) % q
            if rep.rows[i - 1][j - 1] != want:
                raise InternalCheckError(
                    f"recursion and closed form disagree at E[{i}][{j}]"
                )


def cycle_constraint_holds(spec: EigenSpec) -> bool:
    """Whether the table closes up consistently around the p^N-cycle.

    Row i wraps (E[i][1] = E[i+1][1] + E[i][p^N]) iff

        sum_{k=i+2..n} e_k * T_{k-i}(p^N - 1)  ==  0   (mod p^N),

    and every T_d(p^N - 1) with 2 <= d <= n-1 vanishes mod p^N once
    p >= n, so for non-exceptional primes this is automatically true.
    A False return flags a spec that does not define a representation
    at this prime (only possible for p < n).
    """
    p, N, n = spec.pp.p, spec.pp.N, spec.n
    q = spec.pp.dim
    tk = _cached_simplex_rows(p, N, n - 1)
    for i in range(1, n):
        total = sum(
            spec.exponents[k - 1] * tk[k - i][q - 1] for k in range(i + 2, n + 1)
        ) % q
        if total != 0:
            return False
    return True
