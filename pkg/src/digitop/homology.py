"""Simplicial homology of the clique complex of a digital image.

A q-simplex is a set of q+1 distinct, mutually adjacent points.  Simplices
are oriented by the canonical (lexicographic) point order, so a simplex is
just a strictly increasing tuple of point indices.  All linear algebra is
exact: matrices are numpy ``object`` arrays of Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import BudgetExceeded, DigitalImage, InvariantViolation

MAX_SIMPLICES = 2_000_000


def _all_cliques(X: DigitalImage, limit: int = MAX_SIMPLICES) -> list[list[tuple[int, ...]]]:
    higher = [X.nbr_masks[i] & ~((1 << (i + 1)) - 1) for i in range(len(X))]
    by_size: list[list[tuple[int, ...]]] = []
    total = 0

    def extend(clique, cand):
        nonlocal total
        total += 1
        if total > limit:
            raise BudgetExceeded(f"clique complex has more than {limit} simplices")
        q = len(clique) - 1
        if q == len(by_size):
            by_size.append([])
        by_size[q].append(tuple(clique))
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            clique.append(v)
            extend(clique, cand & higher[v])
            clique.pop()

    for v in range(len(X)):
        extend([v], higher[v])
    return by_size


@lru_cache(maxsize=64)
def _cliques(X: DigitalImage) -> tuple:
    return tuple(tuple(level) for level in _all_cliques(X))


def simplices(X: DigitalImage, q: int) -> list[tuple[int, ...]]:
    """The q-simplices of ``X`` as increasing index tuples, in lexicographic order."""
    if q < 0:
        raise ValueError("simplex dimension must be non-negative")
    levels = _cliques(X)
    return list(levels[q]) if q < len(levels) else []


def simplex_counts(X: DigitalImage) -> list[int]:
    """``[alpha_0, alpha_1, ..., alpha_dim]``."""
    return [len(level) for level in _cliques(X)]


def dimension(X: DigitalImage) -> int:
    return len(_cliques(X)) - 1


def euler_characteristic(X: DigitalImage) -> int:
    return sum((-1) ** q * a for q, a in enumerate(simplex_counts(X)))


def boundary_matrix(X: DigitalImage, q: int) -> np.ndarray:
    """Matrix of the boundary map ``C_q -> C_{q-1}`` in the simplex bases.

    Rows index (q-1)-simplices, columns q-simplices.  For ``q == 0`` the
    target is the trivial group and the matrix has no rows.
    """
    cols = simplices(X, q)
    if q == 0:
        return np.zeros((0, len(cols)), dtype=object)
    rows = simplices(X, q - 1)
    pos = {s: i for i, s in enumerate(rows)}
    D = np.zeros((len(rows), len(cols)), dtype=object)
    for j, s in enumerate(cols):
        for i in range(len(s)):
            D[pos[s[:i] + s[i + 1:]], j] = (-1) ** i
    return D


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SNFResult:
    """``U @ M @ V == S`` with ``S`` diagonal and ``U``, ``V`` unimodular.

    The inverses of ``U`` and ``V`` are tracked alongside so that change of
    basis never needs a matrix inversion.
    """

    S: np.ndarray
    U: np.ndarray
    V: np.ndarray
    U_inv: np.ndarray
    V_inv: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        k = min(self.S.shape)
        return [int(self.S[i, i]) for i in range(k)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal if d != 0]


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M) -> SNFResult:
    """Smith normal form over the integers, with unimodular transforms."""
    M = np.asarray(M, dtype=object)
    if M.ndim != 2:
        raise ValueError("smith_normal_form expects a 2-d matrix")
    m, n = M.shape
    A = [[int(v) for v in row] for row in M]
    U, Ui, V, Vi = _identity(m), _identity(m), _identity(n), _identity(n)

    # Row op: row_i += c * row_j; column ops are the transposed analogue.
    def add_row(i, j, c):
        A[i] = [a + c * b for a, b in zip(A[i], A[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
        for row in Ui:
            row[j] -= c * row[i]

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]
            for row in Ui:
                row[i], row[j] = row[j], row[i]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]
        for row in Ui:
            row[i] = -row[i]

    def add_col(j, i, c):
        for row in A:
            row[j] += c * row[i]
        for row in V:
            row[j] += c * row[i]
        Vi[i] = [a - c * b for a, b in zip(Vi[i], Vi[j])]

    def swap_cols(i, j):
        if i != j:
            for mat in (A, V):
                for row in mat:
                    row[i], row[j] = row[j], row[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            rest_i = [i for i in range(t + 1, m) if A[i][t]]
            rest_j = [j for j in range(t + 1, n) if A[t][j]]
            if rest_i or rest_j:
                # A remainder smaller than the pivot appeared; make it the new pivot.
                cands = [(abs(A[i][t]), i, t) for i in rest_i] + [(abs(A[t][j]), t, j) for j in rest_j]
                _, i, j = min(cands)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next((i for i in range(t + 1, m)
                        if any(A[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            negate_row(t)

    def arr(rows, shape):
        out = np.zeros(shape, dtype=object)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                out[i, j] = v
        return out

    return SNFResult(arr(A, (m, n)), arr(U, (m, m)), arr(V, (n, n)),
                     arr(Ui, (m, m)), arr(Vi, (n, n)))


# ---------------------------------------------------------------------------
# Homology groups


@dataclass(frozen=True)
class HomologyGroup:
    """``H_q = Z^betti (+) Z/t_1 (+) ... (+) Z/t_k``."""

    q: int
    betti: int
    torsion: tuple = ()

    @property
    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " (+) ".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologyBasis:
    """Free generators of ``H_q`` and the coordinate map onto them.

    ``cycles`` has one column per free generator.  ``coordinates`` sends a
    q-cycle to its integer coordinates on those generators; torsion
    components are discarded.
    """

    q: int
    group: HomologyGroup
    cycles: np.ndarray
    _boundary_rank: int
    _kernel_coords: np.ndarray  # V_inv of the SNF of D_q
    _quotient_U: np.ndarray     # U of the SNF of the boundaries in kernel coordinates
    _quotient_rank: int

    def coordinates(self, chain) -> np.ndarray:
        chain = np.asarray(chain, dtype=object).reshape(-1)
        x = self._kernel_coords.dot(chain)
        if any(x[: self._boundary_rank]):
            raise InvariantViolation(f"chain is not a {self.q}-cycle")
        y = self._quotient_U.dot(x[self._boundary_rank:])
        return np.asarray(y[self._quotient_rank:], dtype=object)


@lru_cache(maxsize=256)
def homology_basis(X: DigitalImage, q: int) -> HomologyBasis:
    Dq = boundary_matrix(X, q)
    Dq1 = boundary_matrix(X, q + 1)
    alpha = Dq.shape[1]
    snf1 = smith_normal_form(Dq)
    r1 = snf1.rank
    kernel = snf1.V[:, r1:]
    B = snf1.V_inv.dot(Dq1)[r1:, :] if Dq1.size else np.zeros((alpha - r1, 0), dtype=object)
    B = np.asarray(B, dtype=object).reshape(alpha - r1, Dq1.shape[1])
    snf2 = smith_normal_form(B)
    r2 = snf2.rank
    torsion = tuple(d for d in snf2.invariant_factors if d > 1)
    betti = alpha - r1 - r2
    cycles = np.asarray(kernel.dot(snf2.U_inv[:, r2:]), dtype=object).reshape(alpha, betti)
    group = HomologyGroup(q, betti, torsion)
    return HomologyBasis(q, group, cycles, r1, snf1.V_inv, snf2.U, r2)


def homology(X: DigitalImage, q: int) -> HomologyGroup:
    """The q-th homology group (unreduced, integer coefficients)."""
    if q < 0:
        raise ValueError("homology dimension must be non-negative")
    if q > dimension(X):
        return HomologyGroup(q, 0)
    return homology_basis(X, q).group


def homology_groups(X: DigitalImage, max_dim: int | None = None) -> list[HomologyGroup]:
    top = dimension(X) if max_dim is None else max_dim
    return [homology(X, q) for q in range(top + 1)]


def betti_numbers(X: DigitalImage) -> list[int]:
    return [g.betti for g in homology_groups(X)]
