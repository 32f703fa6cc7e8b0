"""Builders for the standard images: intervals, curves, spheres, cubes, wedges, products."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .core import BudgetExceeded, Cu, DigitalImage, Explicit, InputError, _as_point
from .maps import DigitalMap, is_isomorphism

MAX_POINTS = 1_000_000


def interval(a: int, b: int) -> DigitalImage:
    """The digital interval ``[a, b]_Z`` with 2-adjacency (c_1 in Z)."""
    if a >= b:
        raise InputError(f"a digital interval needs a < b, got [{a}, {b}]")
    return DigitalImage([(z,) for z in range(a, b + 1)], Cu(1))


def scc(m: int) -> DigitalImage:
    """Simple closed curve of ``m >= 4`` points; point ``i`` sits at ``(i, 0)``."""
    if m < 4:
        raise InputError(f"a simple closed curve needs at least 4 points, got {m}")
    edges = [(i, (i + 1) % m) for i in range(m)]
    return DigitalImage([(i, 0) for i in range(m)], Explicit(edges))


def sphere(n: int, *, max_points: int = MAX_POINTS) -> DigitalImage:
    """``S_n = [-1, 1]^{n+1} minus the origin`` with c_1 adjacency."""
    if n < 1:
        raise InputError(f"sphere dimension must be >= 1, got {n}")
    size = 3 ** (n + 1) - 1
    if size > max_points:
        raise BudgetExceeded(f"sphere({n}) has {size} points, limit is {max_points}")
    pts = [p for p in itertools.product((-1, 0, 1), repeat=n + 1) if any(p)]
    return DigitalImage(pts, Cu(1))


def cube(lengths: Sequence[int], *, max_points: int = MAX_POINTS) -> DigitalImage:
    """``prod [0, L_i]_Z`` with c_n adjacency, ``n = len(lengths)``."""
    lengths = [int(v) for v in lengths]
    if not lengths:
        raise InputError("cube needs at least one extent")
    if any(v < 1 for v in lengths):
        raise InputError("cube extents must be positive")
    size = 1
    for v in lengths:
        size *= v + 1
    if size > max_points:
        raise BudgetExceeded(f"cube has {size} points, limit is {max_points}")
    pts = itertools.product(*(range(v + 1) for v in lengths))
    return DigitalImage(pts, Cu(len(lengths)))


def antipode_map(X: DigitalImage) -> DigitalMap:
    """``x -> -x``; requires ``X`` to be closed under negation."""
    table = []
    for p in X.points:
        q = tuple(-c for c in p)
        if q not in X:
            raise InputError(f"-{p} is not in the image")
        table.append(X.index_of(q))
    return DigitalMap(X, X, table)


@dataclass(frozen=True)
class WedgeImage:
    """Two images glued at one point.

    ``image`` has explicit adjacency; ``tags[i]`` is ``(side, original
    point)`` for each point, ``p`` is the index of the shared point (tagged
    with side ``"A"``), and ``a_table``/``b_table`` give the wedge index of
    every point of ``A`` and ``B``.
    """

    image: DigitalImage
    A: DigitalImage
    B: DigitalImage
    tags: tuple
    p: int
    a_table: tuple
    b_table: tuple

    def side(self, which: str) -> list[int]:
        return sorted(self.a_table if which == "A" else self.b_table)

    def inclusion(self, which: str) -> DigitalMap:
        src, table = (self.A, self.a_table) if which == "A" else (self.B, self.b_table)
        return DigitalMap(src, self.image, table)

    def collapse(self, which: str) -> DigitalMap:
        """Self-map fixing side ``which`` and sending the other side to ``p``."""
        keep = set(self.side(which))
        return DigitalMap(self.image, self.image,
                          [i if i in keep else self.p for i in range(len(self.image))])


def wedge(A: DigitalImage, a0, B: DigitalImage, b0) -> WedgeImage:
    """Glue ``a0`` in ``A`` to ``b0`` in ``B``.

    Points are re-embedded as ``(0, i)`` for the i-th point of ``A`` and
    ``(1, j)`` for the j-th point of ``B``; the shared point keeps its
    ``A`` coordinates.
    """
    ia, ib = A.index_of(a0), B.index_of(b0)
    pts = [(0, i) for i in range(len(A))]
    b_pos = {}
    for j in range(len(B)):
        if j == ib:
            b_pos[j] = ia
        else:
            b_pos[j] = len(pts)
            pts.append((1, j))
    edges = list(A.edges()) + [(b_pos[i], b_pos[j]) for i, j in B.edges()]
    image = DigitalImage(pts, Explicit(edges))
    # Points were generated in lexicographic order, so indices are unchanged.
    a_table = tuple(range(len(A)))
    b_table = tuple(b_pos[j] for j in range(len(B)))
    tags = [("A", A.points[i]) for i in range(len(A))]
    tags += [("B", B.points[j]) for j in range(len(B)) if j != ib]

    w = WedgeImage(image, A, B, tuple(tags), ia, a_table, b_table)
    a_side, b_side = set(a_table), set(b_table)
    if a_side & b_side != {ia}:
        raise AssertionError("wedge sides must meet in exactly one point")
    for i, j in image.edges():
        if (i in a_side) != (j in a_side) and ia not in (i, j):
            raise AssertionError("wedge has a cross edge away from the shared point")
    for which, src in (("A", A), ("B", B)):
        sub = image.subimage(w.side(which))
        table = [sub.index_of(image.points[k]) for k in (a_table if which == "A" else b_table)]
        if not is_isomorphism(DigitalMap(src, sub, table)):
            raise AssertionError(f"wedge side {which} is not isomorphic to its source")
    return w


def product(factors: Sequence[DigitalImage], *, max_points: int = MAX_POINTS) -> DigitalImage:
    """Cartesian product of ``(X_i, c_{n_i})`` factors, with c_s adjacency in Z^s."""
    if not factors:
        raise InputError("product needs at least one factor")
    for X in factors:
        if not isinstance(X.adjacency, Cu) or X.adjacency.u != X.dim:
            raise InputError(f"product factors must use c_n adjacency on Z^n; got {X.adjacency} in Z^{X.dim}")
    size = 1
    for X in factors:
        size *= len(X)
    if size > max_points:
        raise BudgetExceeded(f"product has {size} points, limit is {max_points}")
    s = sum(X.dim for X in factors)
    pts = [sum(combo, ()) for combo in itertools.product(*(X.points for X in factors))]
    return DigitalImage(pts, Cu(s))


def point_image(p=(0,)) -> DigitalImage:
    """A one-point image."""
    p = _as_point(p)
    return DigitalImage([p], Cu(1))
