"""Digital maps, continuity, homotopies and (approximate) fixed points."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

from .core import DigitalImage, InputError, _as_point, _content_lines, _ints, read_image


@dataclass(frozen=True, eq=True)
class DigitalMap:
    """A total function between digital images, stored as an index table.

    ``table[i]`` is the codomain index of the image of domain point ``i``.
    """

    domain: DigitalImage
    codomain: DigitalImage
    table: tuple

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        if len(table) != len(self.domain):
            raise InputError(f"map table has {len(table)} entries for {len(self.domain)} points")
        if any(not 0 <= v < len(self.codomain) for v in table):
            raise InputError("map table index out of range")
        object.__setattr__(self, "table", table)

    @classmethod
    def from_function(cls, domain: DigitalImage, codomain: DigitalImage,
                      fn: Callable) -> DigitalMap:
        return cls(domain, codomain, [codomain.index_of(fn(p)) for p in domain.points])

    @classmethod
    def from_pairs(cls, domain: DigitalImage, codomain: DigitalImage,
                   pairs: Mapping) -> DigitalMap:
        table = [None] * len(domain)
        for x, y in pairs.items():
            i = domain.index_of(x)
            if table[i] is not None:
                raise InputError(f"point {x} mapped twice")
            table[i] = codomain.index_of(y)
        missing = [domain.points[i] for i, v in enumerate(table) if v is None]
        if missing:
            raise InputError(f"map is not total; missing {missing[0]}")
        return cls(domain, codomain, table)

    def __call__(self, p):
        return self.codomain.points[self.table[self.domain.index_of(p)]]

    def __repr__(self):
        return f"DigitalMap({self.as_dict()!r})"

    @property
    def is_self_map(self) -> bool:
        return self.domain.same_graph(self.codomain)

    def as_dict(self) -> dict:
        return {p: self.codomain.points[v] for p, v in zip(self.domain.points, self.table)}

    def image_indices(self) -> set[int]:
        return set(self.table)


def identity_map(X: DigitalImage) -> DigitalMap:
    return DigitalMap(X, X, range(len(X)))


def constant_map(X: DigitalImage, Y: DigitalImage, y) -> DigitalMap:
    return DigitalMap(X, Y, [Y.index_of(y)] * len(X))


def inclusion_map(A: DigitalImage, X: DigitalImage) -> DigitalMap:
    return DigitalMap(A, X, [X.index_of(p) for p in A.points])


def collapse_map(X: DigitalImage, x0=None, x1=None) -> DigitalMap:
    """The fixed-point-free map sending everything to ``x0`` and ``x0`` to an adjacent ``x1``.

    Defaults to the least point of ``X`` and its least neighbor.
    """
    i0 = 0 if x0 is None else X.index_of(x0)
    if x1 is None:
        if not X.neighbors[i0]:
            raise InputError(f"{X.points[i0]} has no neighbor")
        i1 = X.neighbors[i0][0]
    else:
        i1 = X.index_of(x1)
        if not X.is_adjacent(i0, i1):
            raise InputError(f"{X.points[i0]} and {X.points[i1]} are not adjacent")
    table = [i0] * len(X)
    table[i0] = i1
    return DigitalMap(X, X, table)


def discontinuities(f: DigitalMap) -> list[tuple[int, int]]:
    """Domain edges whose endpoints are sent to points that are neither equal nor adjacent."""
    Y, t = f.codomain, f.table
    return [(i, j) for i, j in f.domain.edges() if not Y.is_close(t[i], t[j])]


def is_continuous(f: DigitalMap) -> bool:
    Y, t = f.codomain, f.table
    return all(Y.is_close(t[i], t[j]) for i, j in f.domain.edges())


def compose(g: DigitalMap, f: DigitalMap) -> DigitalMap:
    """``g o f``."""
    if not f.codomain.same_graph(g.domain):
        raise InputError("cannot compose: codomain of f differs from domain of g")
    return DigitalMap(f.domain, g.codomain, [g.table[v] for v in f.table])


def is_bijective(f: DigitalMap) -> bool:
    return len(f.domain) == len(f.codomain) == len(set(f.table))


def inverse(f: DigitalMap) -> DigitalMap:
    if not is_bijective(f):
        raise InputError("map is not a bijection")
    inv = [0] * len(f.table)
    for i, v in enumerate(f.table):
        inv[v] = i
    return DigitalMap(f.codomain, f.domain, inv)


def is_isomorphism(f: DigitalMap) -> bool:
    return is_bijective(f) and is_continuous(f) and is_continuous(inverse(f))


def restrict(f: DigitalMap, points: Iterable) -> DigitalMap:
    """Restriction of ``f`` to the subimage induced on ``points``."""
    U = f.domain.subimage(f.domain.index_of(p) for p in points)
    return DigitalMap(U, f.codomain, [f.table[f.domain.index_of(p)] for p in U.points])


def is_retraction(r: DigitalMap, A: Iterable) -> bool:
    """Whether ``r`` is a retraction of its domain onto the point set ``A``.

    ``r`` may be given either with codomain equal to the subimage on ``A``
    or as a self-map of the domain whose values all lie in ``A``.
    """
    X = r.domain
    A = [_as_point(a) for a in A]
    if not A:
        raise InputError("retraction target must be nonempty")
    if any(a not in X for a in A):
        raise InputError("retraction target is not a subset of the domain")
    sub = X.subimage(X.index_of(a) for a in A)
    if r.codomain.same_graph(sub):
        as_self = DigitalMap(X, X, [X.index_of(sub.points[v]) for v in r.table])
    elif r.codomain.same_graph(X):
        as_self = r
    else:
        raise InputError("retraction codomain must be the domain or its subimage on A")
    targets = {X.index_of(a) for a in A}
    if not set(as_self.table) <= targets:
        return False
    if any(as_self.table[a] != a for a in targets):
        return False
    return is_continuous(as_self)


def fixed_points(f: DigitalMap) -> list:
    if not f.is_self_map:
        raise InputError("fixed points need a self-map")
    return [p for i, p in enumerate(f.domain.points) if f.table[i] == i]


def approximate_fixed_points(f: DigitalMap) -> dict:
    """Points ``p`` with ``f(p) <-> p``, mapped to True when ``f(p) == p`` exactly."""
    if not f.is_self_map:
        raise InputError("approximate fixed points need a self-map")
    X = f.domain
    return {X.points[i]: v == i for i, v in enumerate(f.table) if X.is_close(i, v)}


@dataclass(frozen=True)
class Homotopy:
    """A candidate homotopy ``F: X x [0, m]_Z -> Y`` from ``f`` to ``g``.

    ``table[t][x]`` is the codomain index of ``F(x, t)``; there are
    ``m + 1`` rows.  Nothing beyond shape is checked on construction, use
    :func:`verify_homotopy`.
    """

    f: DigitalMap
    g: DigitalMap
    m: int
    table: tuple

    def __post_init__(self):
        if self.m < 1:
            raise InputError("a homotopy needs m >= 1 time steps")
        if not (self.f.domain.same_graph(self.g.domain)
                and self.f.codomain.same_graph(self.g.codomain)):
            raise InputError("homotopy endpoints must share domain and codomain")
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        if len(rows) != self.m + 1:
            raise InputError(f"homotopy table needs {self.m + 1} rows, got {len(rows)}")
        n, k = len(self.f.domain), len(self.f.codomain)
        for row in rows:
            if len(row) != n or any(not 0 <= v < k for v in row):
                raise InputError("malformed homotopy row")
        object.__setattr__(self, "table", rows)

    @classmethod
    def from_maps(cls, stages: Sequence[DigitalMap]) -> Homotopy:
        """Homotopy whose time slices are the given maps, in order."""
        if len(stages) < 2:
            raise InputError("a homotopy needs at least two stages")
        return cls(stages[0], stages[-1], len(stages) - 1, [s.table for s in stages])

    def stage(self, t: int) -> DigitalMap:
        return DigitalMap(self.f.domain, self.f.codomain, self.table[t])

    def reversed(self) -> Homotopy:
        return Homotopy(self.g, self.f, self.m, self.table[::-1])


def verify_homotopy(H: Homotopy) -> bool:
    Y = H.f.codomain
    if H.table[0] != H.f.table or H.table[-1] != H.g.table:
        return False
    for prev, cur in zip(H.table, H.table[1:]):
        if not all(Y.is_close(a, b) for a, b in zip(prev, cur)):
            return False
    X = H.f.domain
    for row in H.table:
        if not all(Y.is_close(row[i], row[j]) for i, j in X.edges()):
            return False
    return True


# ---------------------------------------------------------------------------
# DIGMAP text format


def parse_map(text: str, base_dir=".") -> DigitalMap:
    """Parse the ``DIGMAP 1`` format; image paths resolve relative to ``base_dir``."""
    lines = _content_lines(text)
    header = {}
    for keyword in ("DIGMAP", "domain", "codomain", "pairs"):
        try:
            lineno, toks = next(lines)
        except StopIteration:
            raise InputError(f"unexpected end of file, expected {keyword!r}") from None
        if toks[0] != keyword or len(toks) != 2:
            raise InputError(f"line {lineno}: expected '{keyword} <value>'")
        header[keyword] = toks[1]
    if header["DIGMAP"] != "1":
        raise InputError(f"unsupported DIGMAP version {header['DIGMAP']!r}")
    base = Path(base_dir)
    X = read_image(base / header["domain"])
    Y = X if header["codomain"] == header["domain"] else read_image(base / header["codomain"])
    try:
        k = int(header["pairs"])
    except ValueError:
        raise InputError("pairs count must be an integer") from None
    pairs = {}
    for _ in range(k):
        try:
            lineno, toks = next(lines)
        except StopIteration:
            raise InputError(f"expected {k} pairs, file ended after {len(pairs)}") from None
        if toks.count("->") != 1:
            raise InputError(f"line {lineno}: expected '<x...> -> <y...>'")
        cut = toks.index("->")
        x, y = tuple(_ints(toks[:cut], lineno)), tuple(_ints(toks[cut + 1:], lineno))
        if len(x) != X.dim or len(y) != Y.dim:
            raise InputError(f"line {lineno}: coordinate count does not match the images")
        if x in pairs:
            raise InputError(f"line {lineno}: domain point {x} listed twice")
        if x not in X:
            raise InputError(f"line {lineno}: {x} is not a domain point")
        if y not in Y:
            raise InputError(f"line {lineno}: {y} is not a codomain point")
        pairs[x] = y
    rest = next(lines, None)
    if rest is not None:
        raise InputError(f"line {rest[0]}: trailing content")
    return DigitalMap.from_pairs(X, Y, pairs)


def read_map(path) -> DigitalMap:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return parse_map(text, path.parent)


def format_map(f: DigitalMap, domain_path: str, codomain_path: str | None = None) -> str:
    out = ["DIGMAP 1", f"domain {domain_path}", f"codomain {codomain_path or domain_path}",
           f"pairs {len(f.table)}"]
    for p, v in zip(f.domain.points, f.table):
        out.append(f"{' '.join(map(str, p))} -> {' '.join(map(str, f.codomain.points[v]))}")
    return "\n".join(out) + "\n"


def write_map(f: DigitalMap, path, domain_path: str, codomain_path: str | None = None) -> None:
    Path(path).write_text(format_map(f, domain_path, codomain_path), encoding="utf-8")
