"""Floating-point cross-checks on actual complex matrices.

Everything else in the package reasons about exponent tables; this
module is the independent referee.  It materializes a standard-form
table as honest complex matrices (diagonal x_i with root-of-unity
entries, y the p^N-cycle permutation), then re-derives the structural
facts numerically:

* the defining relations [x_i, y] = x_{i+1} (with [u,v] = u v u^-1 v^-1
  and y: e_j -> e_{j+1}) and centrality/scalarity of x_n;
* irreducibility, via the dimension of the joint commutant;
* the joint eigenspace structure of the diagonal part (count and sizes);
* stability of the candidate subspaces, from their spanning vectors.

Floating point is confined to this module on purpose: it must not share
code paths with the exact machinery it is checking, so subspace bases
are built from their definition and commutants from linear algebra, not
from column-tuple bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import GuardExceededError
from .standard_form import StandardFormRep

DEFAULT_ORACLE_GUARD = 64
DEFAULT_TOL = 1e-9
SV_THRESHOLD = 1e-8


@dataclass(frozen=True)
class ComplexRep:
    """Matrices of a standard-form representation, plus a tolerance."""

    p: int
    N: int
    xs: tuple[np.ndarray, ...]
    y: np.ndarray
    tol: float = DEFAULT_TOL

    @property
    def dim(self) -> int:
        return self.p**self.N

    @property
    def n(self) -> int:
        return len(self.xs)


def _cycle_matrix(dim: int) -> np.ndarray:
    """The dim-cycle: ones on the subdiagonal, corner entry 1."""
    y = np.zeros((dim, dim), dtype=complex)
    for j in range(dim):
        y[(j + 1) % dim, j] = 1.0
    return y


def realize(
    rep: StandardFormRep,
    tol: float = DEFAULT_TOL,
    guard: int = DEFAULT_ORACLE_GUARD,
) -> ComplexRep:
    """Turn an exponent table into complex matrices.

    Entry j of x_i is exp(2*pi*i * E[i][j] / p^N); y sends basis vector
    e_j to e_{j+1} cyclically.
    """
    dim = rep.dim
    if dim > guard:
        raise GuardExceededError(f"dim {dim} exceeds the oracle guard {guard}")
    xs = tuple(
        np.diag(np.exp(2j * np.pi * np.array(row, dtype=float) / dim))
        for row in rep.rows
    )
    pp = rep.spec.pp
    return ComplexRep(p=pp.p, N=pp.N, xs=xs, y=_cycle_matrix(dim), tol=tol)


def relation_residuals(c: ComplexRep) -> list[tuple[str, float]]:
    """Max-entry residual of every defining relation.

    Diagonal unitaries invert by conjugation and y by transposition, so
    the commutators are exact matrix products.
    """
    y = c.y
    y_inv = y.T.conj()
    out = []
    for i, x in enumerate(c.xs[:-1], start=1):
        x_inv = x.conj()
        comm = x @ y @ x_inv @ y_inv
        out.append((f"[x_{i}, y] = x_{i + 1}", float(np.max(np.abs(comm - c.xs[i])))))
    xn = c.xs[-1]
    out.append((f"x_{c.n} central", float(np.max(np.abs(xn @ y - y @ xn)))))
    scalar = xn[0, 0] * np.eye(c.dim)
    out.append((f"x_{c.n} scalar", float(np.max(np.abs(xn - scalar)))))
    return out


def check_relations(c: ComplexRep) -> bool:
    """All defining relations hold to within c.tol."""
    return all(res <= c.tol for _, res in relation_residuals(c))


@lru_cache(maxsize=None)
def _cycle_commutant_basis(dim: int) -> np.ndarray:
    """Orthonormal basis of {A : Ay = yA} as a dim^2 x dim matrix.

    The commutant of a single dim-cycle is spanned by its powers (the
    minimal polynomial t^dim - 1 is squarefree, so the commutant has
    dimension dim); the powers have disjoint supports, hence are
    orthogonal, and dividing by sqrt(dim) normalizes them.
    """
    y = _cycle_matrix(dim)
    cols = []
    power = np.eye(dim, dtype=complex)
    for _ in range(dim):
        cols.append(power.reshape(-1) / np.sqrt(dim))
        power = y @ power
    return np.stack(cols, axis=1)


def commutant_dimension(
    c: ComplexRep,
    threshold: float = SV_THRESHOLD,
    guard: int = DEFAULT_ORACLE_GUARD,
) -> int:
    """dim {A : A commutes with every x_i and with y}.

    This is the joint nullity of the stacked operators A -> gA - Ag over
    the generators, read off singular values (sigma below threshold *
    sigma_max counts as zero).  The y-operator's kernel is the cycle
    commutant with a known orthonormal basis, so the x-operators are
    restricted to that basis first and one small SVD finishes the job;
    the restricted operators are formed entrywise from the eigenvalue
    gaps (x_i A - A x_i scales entry (j,k) by x_i[j] - x_i[k]).

    A value of 1 certifies irreducibility.
    """
    if c.dim > guard:
        raise GuardExceededError(f"dim {c.dim} exceeds the oracle guard {guard}")
    basis = _cycle_commutant_basis(c.dim)  # dim^2 x dim
    basis_mats = basis.reshape(c.dim, c.dim, c.dim)
    blocks = []
    for x in c.xs:
        diag = np.diag(x)
        gaps = diag[:, None] - diag[None, :]
        blocks.append((gaps[:, :, None] * basis_mats).reshape(c.dim * c.dim, c.dim))
    stacked = np.vstack(blocks)
    sigmas = np.linalg.svd(stacked, compute_uv=False)
    top = sigmas[0] if len(sigmas) else 0.0
    if top == 0.0:
        return c.dim
    return int(np.sum(sigmas < threshold * top))


def mutual_eigenspace_census(
    c: ComplexRep, threshold: float = SV_THRESHOLD
) -> tuple[int, int]:
    """(number of joint eigenspaces of the x_i, largest dimension).

    Basis vectors are grouped by their joint eigenvalue signature across
    x_1..x_n, two signatures counting as equal when every component is
    within c.tol.  Requires an irreducible input (checked through the
    commutant); the expected answer is then (p^N, 1).
    """
    if commutant_dimension(c, threshold=threshold) != 1:
        raise ValueError("mutual eigenspace census expects an irreducible input")
    sigs = np.stack([np.diag(x) for x in c.xs], axis=1)  # dim x n
    classes: list[list[int]] = []
    for j in range(c.dim):
        for cls in classes:
            if np.max(np.abs(sigs[cls[0]] - sigs[j])) <= c.tol:
                cls.append(j)
                break
        else:
            classes.append([j])
    return len(classes), max(len(cls) for cls in classes)


def subspace_basis(p: int, N: int, j: int) -> np.ndarray:
    """Spanning vectors of the j-th candidate subspace, as columns.

    The seed vector is the sum of basis vectors 1, p^j + 1, 2 p^j + 1,
    ...; the cycle orbit of the seed closes after p^j steps, giving a
    p^j-dimensional space.
    """
    dim = p**N
    step = p**j
    seed = np.zeros(dim)
    seed[0::step] = 1.0
    cols = [np.roll(seed, shift) for shift in range(step)]
    return np.stack(cols, axis=1) / np.sqrt(dim // step)


def subspace_is_stable(c: ComplexRep, j: int) -> bool:
    """Whether every generator maps the j-th candidate subspace into itself.

    The basis is orthonormalized and invariance of each generator image
    is tested against c.tol on the orthogonal complement's share.
    """
    if not 0 <= j <= c.N:
        raise ValueError(f"subspace index {j} out of range [0, {c.N}]")
    basis, _ = np.linalg.qr(subspace_basis(c.p, c.N, j).astype(complex))
    for g in (*c.xs, c.y):
        image = g @ basis
        residual = image - basis @ (basis.conj().T @ image)
        if np.max(np.abs(residual)) > c.tol:
            return False
    return True
