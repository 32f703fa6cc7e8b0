"""Deterministic image corpora and brute-force oracles used by the checks and tests."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .core import Cu, DigitalImage, Explicit, components
from .maps import DigitalMap, is_continuous


def graph_image(n: int, edges) -> DigitalImage:
    """Explicit image on points ``(0,), ..., (n-1,)``."""
    return DigitalImage([(i,) for i in range(n)], Explicit(edges))


def all_graphs(n: int) -> Iterator[DigitalImage]:
    """Every labeled graph on ``n`` points."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield graph_image(n, [e for k, e in enumerate(pairs) if bits >> k & 1])


def connected_graphs(max_n: int) -> list[DigitalImage]:
    return [X for n in range(1, max_n + 1) for X in all_graphs(n) if len(components(X)) == 1]


def _canonical(X: DigitalImage) -> tuple:
    n = len(X)
    edges = list(X.edges())
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[i], perm[j]))) for i, j in edges))
        if best is None or key < best:
            best = key
    return (n, best)


def graphs_up_to_isomorphism(max_n: int, connected: bool = False) -> list[DigitalImage]:
    """One representative per isomorphism class, for small ``max_n``."""
    out = []
    for n in range(1, max_n + 1):
        seen = set()
        for X in all_graphs(n):
            if connected and len(components(X)) != 1:
                continue
            key = _canonical(X)
            if key not in seen:
                seen.add(key)
                out.append(X)
    return out


def random_graph_image(rng: random.Random, n: int, p: float = 0.5) -> DigitalImage:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return graph_image(n, edges)


def random_lattice_image(rng: random.Random, max_points: int, dim: int = 2,
                         extent: int = 3) -> DigitalImage:
    """Random subset of ``[0, extent)^dim`` with a random c_u adjacency."""
    cells = list(itertools.product(range(extent), repeat=dim))
    k = rng.randint(1, min(max_points, len(cells)))
    return DigitalImage(rng.sample(cells, k), Cu(rng.randint(1, dim)))


def random_image(rng: random.Random, max_points: int) -> DigitalImage:
    if rng.random() < 0.7:
        return random_graph_image(rng, rng.randint(1, max_points), rng.choice([0.3, 0.5, 0.7]))
    return random_lattice_image(rng, max_points)


def relabel(X: DigitalImage, rng: random.Random) -> tuple[DigitalImage, DigitalMap]:
    """A copy of ``X`` on shuffled coordinates in Z^2, with the isomorphism ``X -> copy``."""
    n = len(X)
    perm = list(range(n))
    rng.shuffle(perm)
    new_pts = [(perm[i], 7) for i in range(n)]
    Y = DigitalImage(new_pts, Explicit([(i, j) for i, j in X.edges()]))
    h = DigitalMap(X, Y, [Y.index_of(new_pts[i]) for i in range(n)])
    return Y, h


def naive_maps(X: DigitalImage, Y: DigitalImage, forbidden=None) -> Iterator[DigitalMap]:
    """All continuous maps ``X -> Y`` avoiding ``forbidden``, by full enumeration of ``|Y|^|X|`` tables."""
    for table in itertools.product(range(len(Y)), repeat=len(X)):
        if forbidden is not None and any(table[i] in forbidden[i] for i in range(len(X))):
            continue
        f = DigitalMap(X, Y, table)
        if is_continuous(f):
            yield f


def naive_has_afpp(X: DigitalImage) -> bool:
    for f in naive_maps(X, X):
        if not any(X.is_close(i, v) for i, v in enumerate(f.table)):
            return False
    return True


def naive_is_universal(f: DigitalMap) -> bool:
    Y = f.codomain
    for g in naive_maps(f.domain, Y):
        if not any(Y.is_close(a, b) for a, b in zip(f.table, g.table)):
            return False
    return True
