"""Maps induced on chains and homology, Lefschetz numbers and degrees."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DigitalImage, InputError, InvariantViolation, circular_order
from .homology import HomologyGroup, dimension, homology, homology_basis, simplices
from .maps import DigitalMap, is_continuous


def _sort_sign(values) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting ``values`` (distinct), and the sorted tuple."""
    inversions = sum(1 for a in range(len(values)) for b in range(a + 1, len(values))
                     if values[a] > values[b])
    return (-1) ** inversions, tuple(sorted(values))


def induced_chain_map(f: DigitalMap, q: int) -> np.ndarray:
    """Matrix of ``f_#: C_q(X) -> C_q(Y)``.

    A simplex whose vertices do not have distinct images goes to zero;
    otherwise it goes to the image simplex, with the sign of the
    permutation that puts the image vertices in canonical order.
    """
    if not is_continuous(f):
        raise InputError("induced maps are defined for continuous maps only")
    src = simplices(f.domain, q)
    dst = simplices(f.codomain, q)
    pos = {s: i for i, s in enumerate(dst)}
    C = np.zeros((len(dst), len(src)), dtype=object)
    for j, s in enumerate(src):
        image = [f.table[v] for v in s]
        if len(set(image)) < len(image):
            continue
        sign, target = _sort_sign(image)
        if target not in pos:
            raise InvariantViolation(f"image of simplex {s} is not a simplex")
        C[pos[target], j] = sign
    return C


@dataclass(frozen=True)
class InducedMap:
    """``f_*`` on the free part of ``H_q``, as a matrix in the homology bases."""

    q: int
    matrix: np.ndarray

    @property
    def trace(self) -> int:
        return int(sum(self.matrix[i, i] for i in range(min(self.matrix.shape))))


def induced_homology_map(f: DigitalMap, q: int) -> InducedMap:
    X, Y = f.domain, f.codomain
    b_src = homology(X, q).betti
    b_dst = homology(Y, q).betti
    M = np.zeros((b_dst, b_src), dtype=object)
    if b_src == 0 or b_dst == 0:
        if not is_continuous(f):
            raise InputError("induced maps are defined for continuous maps only")
        return InducedMap(q, M)
    C = induced_chain_map(f, q)
    src, dst = homology_basis(X, q), homology_basis(Y, q)
    for j in range(b_src):
        image = C.dot(src.cycles[:, j])
        M[:, j] = dst.coordinates(image)
    return InducedMap(q, M)


def lefschetz_number(f: DigitalMap) -> int:
    """Alternating sum of the traces of ``f_*`` on the free parts of ``H_0 .. H_dim``."""
    if not f.is_self_map:
        raise InputError("the Lefschetz number needs a self-map")
    return sum((-1) ** i * induced_homology_map(f, i).trace
               for i in range(dimension(f.domain) + 1))


@dataclass(frozen=True)
class DegreeResult:
    """Degree of a sphere self-map; ``value`` is None when it is not well defined."""

    value: int | None
    group: HomologyGroup

    @property
    def defined(self) -> bool:
        return self.value is not None

    def __str__(self):
        return "undefined" if self.value is None else str(self.value)


def circular_cycle(X: DigitalImage) -> np.ndarray | None:
    """The 1-chain ``sum <e_j e_{j+1}>`` around a simple closed curve, or None."""
    order = circular_order(X)
    if order is None:
        return None
    edges = simplices(X, 1)
    pos = {e: i for i, e in enumerate(edges)}
    chain = np.zeros(len(edges), dtype=object)
    for a, b in zip(order, order[1:] + order[:1]):
        chain[pos[(min(a, b), max(a, b))]] += 1 if a < b else -1
    return chain


def degree(f: DigitalMap, n: int) -> DegreeResult:
    """Degree of ``f`` on ``H_n``: the ``m`` with ``f_*(g) = m g`` for a generator ``g``.

    Undefined unless ``H_n`` is infinite cyclic.  On a simple closed curve
    with ``n == 1`` the generator is the circular cycle.
    """
    if not f.is_self_map:
        raise InputError("degree needs a self-map")
    if not is_continuous(f):
        raise InputError("degree is defined for continuous maps only")
    X = f.domain
    group = homology(X, n)
    if group.betti != 1:
        return DegreeResult(None, group)
    basis = homology_basis(X, n)
    gen = circular_cycle(X) if n == 1 else None
    if gen is None:
        gen = basis.cycles[:, 0]
    (g,) = basis.coordinates(gen)
    if abs(g) != 1:
        raise InvariantViolation("chosen cycle does not generate H_n")
    (image,) = basis.coordinates(induced_chain_map(f, n).dot(gen))
    return DegreeResult(int(image * g), group)
