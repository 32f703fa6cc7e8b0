"""Lattice points, adjacency relations and digital images.

A digital image is a finite, nonempty set of lattice points in Z^n together
with an adjacency relation.  Two kinds of relation are supported: the
standard ``c_u`` adjacencies on Z^n and explicit graphs supplied by the
caller (used for simple closed curves, wedges and other abstract images).

Points are stored in lexicographic order; every index used anywhere in the
package refers to that canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

Point = tuple  # tuple[int, ...]


class InputError(ValueError):
    """Malformed or inconsistent input (bad file, wrong arity, bad index...)."""


class BudgetExceeded(RuntimeError):
    """A search or construction hit its configured resource limit."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed."""


@dataclass(frozen=True)
class Cu:
    """The c_u adjacency on Z^n."""

    u: int

    def __post_init__(self):
        if not isinstance(self.u, (int, np.integer)) or self.u < 1:
            raise InputError(f"c_u adjacency needs u >= 1, got {self.u!r}")

    def __str__(self):
        return f"c{self.u}"


@dataclass(frozen=True)
class Explicit:
    """An explicit undirected graph; ``edges`` holds pairs ``(i, j)`` with ``i < j``."""

    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))

    def __str__(self):
        return "explicit"


Adjacency = Union[Cu, Explicit]


def _as_point(p) -> Point:
    try:
        coords = tuple(int(c) for c in p)
    except TypeError:
        raise InputError(f"point must be a sequence of integers, got {p!r}") from None
    for c, raw in zip(coords, p):
        if c != raw:
            raise InputError(f"non-integer coordinate in {p!r}")
    return coords


def _cu_condition(p: Point, q: Point, u: int) -> bool:
    differing = 0
    for a, b in zip(p, q):
        d = abs(a - b)
        if d > 1:
            return False
        differing += d
    return 1 <= differing <= u


def are_adjacent(p, q, adj: Cu | "DigitalImage") -> bool:
    """Return True when distinct points ``p`` and ``q`` are adjacent.

    ``adj`` is either a :class:`Cu` relation, checked purely on coordinates,
    or a :class:`DigitalImage`, in which case the image's own relation is used
    (this is how explicit adjacencies are queried).
    """
    p, q = _as_point(p), _as_point(q)
    if len(p) != len(q):
        raise InputError(f"arity mismatch: {p} vs {q}")
    if isinstance(adj, DigitalImage):
        return adj.is_adjacent(adj.index_of(p), adj.index_of(q))
    if adj.u > len(p):
        raise InputError(f"c{adj.u} adjacency undefined in Z^{len(p)}")
    return _cu_condition(p, q, adj.u)


class DigitalImage:
    """A finite digital image ``(X, kappa)``.

    Parameters
    ----------
    points : iterable of integer sequences
        The point set; duplicates are rejected.  Any order is accepted, the
        stored order is lexicographic.
    adjacency : Cu or Explicit
        For :class:`Explicit`, edge indices refer to positions in ``points``
        as passed; they are remapped to the canonical order.
    """

    __slots__ = ("points", "dim", "adjacency", "_index", "neighbors",
                 "nbr_masks", "closed_masks")

    def __init__(self, points: Iterable, adjacency: Adjacency):
        raw = [_as_point(p) for p in points]
        if not raw:
            raise InputError("a digital image must be nonempty")
        dim = len(raw[0])
        if dim < 1:
            raise InputError("points must have at least one coordinate")
        if any(len(p) != dim for p in raw):
            raise InputError("all points of an image must have the same arity")
        if len(set(raw)) != len(raw):
            raise InputError("duplicate points")

        order = sorted(range(len(raw)), key=raw.__getitem__)
        pts = tuple(raw[i] for i in order)
        index = {p: i for i, p in enumerate(pts)}

        if isinstance(adjacency, Cu):
            if adjacency.u > dim:
                raise InputError(f"c{adjacency.u} adjacency needs u <= n = {dim}")
            edges = _cu_edges(pts, adjacency.u)
        elif isinstance(adjacency, Explicit):
            new_pos = {old: new for new, old in enumerate(order)}
            edges = set()
            for e in adjacency.edges:
                i, j = (int(v) for v in e)
                if not (0 <= i < len(pts) and 0 <= j < len(pts)):
                    raise InputError(f"edge {e} has an out-of-range index")
                if i == j:
                    raise InputError(f"self-loop at index {i}")
                a, b = new_pos[i], new_pos[j]
                edges.add((min(a, b), max(a, b)))
            adjacency = Explicit(frozenset(edges))
        else:
            raise InputError(f"unknown adjacency {adjacency!r}")

        nbrs: list[list[int]] = [[] for _ in pts]
        for i, j in edges:
            nbrs[i].append(j)
            nbrs[j].append(i)

        self.points = pts
        self.dim = dim
        self.adjacency = adjacency
        self._index = index
        self.neighbors = tuple(tuple(sorted(n)) for n in nbrs)
        self.nbr_masks = tuple(sum(1 << j for j in n) for n in self.neighbors)
        self.closed_masks = tuple(m | (1 << i) for i, m in enumerate(self.nbr_masks))

    def __len__(self):
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, p) -> bool:
        try:
            return _as_point(p) in self._index
        except InputError:
            return False

    def __eq__(self, other):
        if not isinstance(other, DigitalImage):
            return NotImplemented
        return (self.points == other.points and self.adjacency == other.adjacency
                and self.neighbors == other.neighbors)

    def __hash__(self):
        return hash((self.points, self.neighbors))

    def __repr__(self):
        return f"DigitalImage(|X|={len(self)}, dim={self.dim}, adjacency={self.adjacency})"

    def index_of(self, p) -> int:
        try:
            return self._index[_as_point(p)]
        except KeyError:
            raise InputError(f"point {tuple(p)} is not in the image") from None

    def is_adjacent(self, i: int, j: int) -> bool:
        return bool(self.nbr_masks[i] >> j & 1)

    def is_close(self, i: int, j: int) -> bool:
        """``x_i <-> x_j``: equal or adjacent."""
        return i == j or self.is_adjacent(i, j)

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, nb in enumerate(self.neighbors):
            for j in nb:
                if i < j:
                    yield i, j

    @property
    def n_edges(self) -> int:
        return sum(len(n) for n in self.neighbors) // 2

    def same_graph(self, other: DigitalImage) -> bool:
        """Same points and same adjacency graph, regardless of how the relation was specified."""
        return self.points == other.points and self.neighbors == other.neighbors

    def as_explicit(self) -> DigitalImage:
        return DigitalImage(self.points, Explicit(frozenset(self.edges())))

    def subimage(self, indices: Iterable[int]) -> DigitalImage:
        """The image induced on the given point indices, keeping a c_u relation when present."""
        idx = sorted(set(indices))
        if not idx:
            raise InputError("subimage needs at least one point")
        pts = [self.points[i] for i in idx]
        if isinstance(self.adjacency, Cu):
            return DigitalImage(pts, self.adjacency)
        pos = {old: new for new, old in enumerate(idx)}
        edges = frozenset((pos[i], pos[j]) for i, j in self.edges() if i in pos and j in pos)
        return DigitalImage(pts, Explicit(edges))


def _cu_edges(pts: Sequence[Point], u: int) -> set[tuple[int, int]]:
    k = len(pts)
    if k == 1:
        return set()
    arr = np.asarray(pts, dtype=np.int64)
    edges = set()
    # Row blocks keep the pairwise difference tensor bounded for large images.
    block = max(1, 4_000_000 // (k * arr.shape[1]))
    for start in range(0, k, block):
        diff = np.abs(arr[start:start + block, None, :] - arr[None, :, :])
        ok = (diff <= 1).all(axis=2)
        nz = (diff != 0).sum(axis=2)
        ok &= (nz >= 1) & (nz <= u)
        for a, b in zip(*np.nonzero(ok)):
            i = start + int(a)
            if i < int(b):
                edges.add((i, int(b)))
    return edges


def closed_neighborhood(x, X: DigitalImage) -> frozenset:
    """Points ``y`` of ``X`` with ``y == x`` or ``y`` adjacent to ``x``."""
    i = X.index_of(x)
    return frozenset([X.points[i]] + [X.points[j] for j in X.neighbors[i]])


def components(X: DigitalImage) -> list[list[int]]:
    """Connected components as lists of point indices.

    Each block is sorted, so its least point comes first, and blocks are
    ordered by their least point.
    """
    seen = [False] * len(X)
    blocks = []
    for start in range(len(X)):
        if seen[start]:
            continue
        seen[start] = True
        stack, block = [start], []
        while stack:
            v = stack.pop()
            block.append(v)
            for w in X.neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        blocks.append(sorted(block))
    return blocks


def is_connected(X: DigitalImage) -> bool:
    return len(components(X)) == 1


def circular_order(X: DigitalImage) -> list[int] | None:
    """Point indices in circular order if ``X`` is a simple closed curve, else None.

    The walk starts at the least point and heads to its least neighbor.
    """
    n = len(X)
    if n < 4 or any(len(nb) != 2 for nb in X.neighbors) or not is_connected(X):
        return None
    prev, cur = 0, X.neighbors[0][0]
    order = [0, cur]
    while len(order) < n:
        a, b = X.neighbors[cur]
        prev, cur = cur, (b if a == prev else a)
        order.append(cur)
    return order


# ---------------------------------------------------------------------------
# DIGIMG text format


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def _expect(lines, keyword: str) -> tuple[int, list[str]]:
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise InputError(f"unexpected end of file, expected {keyword!r}") from None
    if toks[0] != keyword:
        raise InputError(f"line {lineno}: expected {keyword!r}, got {toks[0]!r}")
    return lineno, toks


def parse_image(text: str) -> DigitalImage:
    """Parse the ``DIGIMG 1`` text format."""
    lines = _content_lines(text)
    lineno, toks = _expect(lines, "DIGIMG")
    if toks[1:] != ["1"]:
        raise InputError(f"line {lineno}: unsupported DIGIMG version {' '.join(toks[1:])!r}")
    lineno, toks = _expect(lines, "dim")
    if len(toks) != 2:
        raise InputError(f"line {lineno}: malformed dim line")
    (n,) = _ints(toks[1:], lineno)
    if n < 1:
        raise InputError(f"line {lineno}: dim must be positive")
    lineno, toks = _expect(lines, "adjacency")
    if len(toks) != 2:
        raise InputError(f"line {lineno}: malformed adjacency line")
    kind = toks[1]
    if kind == "explicit":
        u = None
    elif kind.startswith("c") and kind[1:].isdigit():
        u = int(kind[1:])
        if not 1 <= u <= n:
            raise InputError(f"line {lineno}: c{u} adjacency needs 1 <= u <= {n}")
    else:
        raise InputError(f"line {lineno}: unknown adjacency {kind!r}")
    lineno, toks = _expect(lines, "points")
    (k,) = _ints(toks[1:], lineno) if len(toks) == 2 else (None,)
    if k is None or k < 1:
        raise InputError(f"line {lineno}: points count must be a positive integer")
    pts = []
    for _ in range(k):
        try:
            lineno, toks = next(lines)
        except StopIteration:
            raise InputError(f"expected {k} points, file ended after {len(pts)}") from None
        p = _ints(toks, lineno)
        if len(p) != n:
            raise InputError(f"line {lineno}: point has {len(p)} coordinates, expected {n}")
        pts.append(tuple(p))
    if len(set(pts)) != len(pts):
        raise InputError("duplicate points")
    edges = set()
    if u is None:
        lineno, toks = _expect(lines, "edges")
        (m,) = _ints(toks[1:], lineno) if len(toks) == 2 else (None,)
        if m is None or m < 0:
            raise InputError(f"line {lineno}: edges count must be a non-negative integer")
        for _ in range(m):
            try:
                lineno, toks = next(lines)
            except StopIteration:
                raise InputError(f"expected {m} edges, file ended after {len(edges)}") from None
            e = _ints(toks, lineno)
            if len(e) != 2:
                raise InputError(f"line {lineno}: an edge is two indices")
            i, j = e
            if not (0 <= i < k and 0 <= j < k):
                raise InputError(f"line {lineno}: edge index out of range")
            if i >= j:
                raise InputError(f"line {lineno}: edge indices must satisfy i < j")
            edges.add((i, j))
    rest = next(lines, None)
    if rest is not None:
        raise InputError(f"line {rest[0]}: trailing content")
    return DigitalImage(pts, Cu(u) if u is not None else Explicit(frozenset(edges)))


def format_image(X: DigitalImage) -> str:
    out = ["DIGIMG 1", f"dim {X.dim}"]
    explicit = isinstance(X.adjacency, Explicit)
    out.append("adjacency explicit" if explicit else f"adjacency c{X.adjacency.u}")
    out.append(f"points {len(X)}")
    out.extend(" ".join(map(str, p)) for p in X.points)
    if explicit:
        edges = list(X.edges())
        out.append(f"edges {len(edges)}")
        out.extend(f"{i} {j}" for i, j in edges)
    return "\n".join(out) + "\n"


def read_image(path) -> DigitalImage:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return parse_image(text)


def write_image(X: DigitalImage, path) -> None:
    Path(path).write_text(format_image(X), encoding="utf-8")
