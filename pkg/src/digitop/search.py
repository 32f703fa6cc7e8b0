"""Backtracking search over continuous maps.

Every fixed-point style question in the package reduces to one search: find
(or count) continuous maps ``X -> Y`` whose value at each domain point avoids
a given forbidden set.  An AFPP failure, for instance, is a continuous
self-map that avoids the closed neighborhood of every point; exhausting the
search proves the property.

Domain points are assigned in canonical order and values are tried in
canonical order, so the first solution found is the lexicographically least
one.  Candidate sets are bitmasks over codomain indices; assigning a value
immediately narrows the candidates of every later neighbor (forward
checking), and a branch dies as soon as one of them is empty.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import BudgetExceeded, DigitalImage, InputError, components, is_connected
from .maps import DigitalMap, Homotopy, collapse_map, is_continuous, verify_homotopy

DEFAULT_BUDGET = 10**8
MODES = ("find-one", "count", "enumerate")


def default_budget() -> int:
    """Node budget from ``DIGITOP_BUDGET``, else 10^8."""
    raw = os.environ.get("DIGITOP_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"DIGITOP_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError("DIGITOP_BUDGET must be positive")
    return value


@dataclass(frozen=True)
class MapSearchProblem:
    """Continuous maps ``domain -> codomain`` avoiding ``forbidden[i]`` at domain point ``i``.

    ``forbidden`` holds sets of codomain indices, one per domain point.
    """

    domain: DigitalImage
    codomain: DigitalImage
    forbidden: tuple
    mode: str = "find-one"

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"unknown search mode {self.mode!r}")
        forb = tuple(frozenset(int(v) for v in s) for s in self.forbidden)
        if len(forb) != len(self.domain):
            raise InputError("need one forbidden set per domain point")
        k = len(self.codomain)
        if any(not 0 <= v < k for s in forb for v in s):
            raise InputError("forbidden sets must be subsets of the codomain")
        object.__setattr__(self, "forbidden", forb)

    @classmethod
    def unconstrained(cls, domain, codomain, mode="find-one") -> MapSearchProblem:
        return cls(domain, codomain, [()] * len(domain), mode)

    def allowed_masks(self) -> list[int]:
        full = (1 << len(self.codomain)) - 1
        return [full & ~sum(1 << v for v in s) for s in self.forbidden]


@dataclass
class SearchOutcome:
    """Result of :func:`solve`.

    ``status`` is ``"witness"`` (find-one mode, ``witness`` set) or
    ``"exhausted"`` with ``count`` solutions; in enumerate mode ``maps``
    lists them in lexicographic order.
    """

    status: str
    count: int = 0
    witness: DigitalMap | None = None
    maps: list = field(default_factory=list)
    nodes: int = 0


def _later_neighbors(X: DigitalImage) -> list[tuple[int, ...]]:
    return [tuple(j for j in X.neighbors[i] if j > i) for i in range(len(X))]


def _run(later, domains, closed, mode, budget):
    """Depth-first search over one (sub)tree; returns (count, solutions, nodes)."""
    n = len(domains)
    assign = [0] * n
    solutions: list[tuple[int, ...]] = []
    count = 0
    nodes = 0
    stop = False

    def rec(i, doms):
        nonlocal count, nodes, stop
        if i == n:
            count += 1
            if mode != "count":
                solutions.append(tuple(assign))
                if mode == "find-one":
                    stop = True
            return
        cand = doms[i]
        nb = later[i]
        while cand:
            low = cand & -cand
            cand ^= low
            y = low.bit_length() - 1
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"search exceeded its budget of {budget} nodes")
            cy = closed[y]
            new = doms
            ok = True
            if nb:
                new = list(doms)
                for k in nb:
                    m = new[k] & cy
                    if not m:
                        ok = False
                        break
                    new[k] = m
            if ok:
                assign[i] = y
                rec(i + 1, new)
                if stop:
                    return

    if n and all(domains):
        rec(0, list(domains))
    return count, solutions, nodes


def _run_task(args):
    return _run(*args)


def solve(problem: MapSearchProblem, *, budget: int | None = None, jobs: int = 1) -> SearchOutcome:
    """Find, count or enumerate the continuous maps described by ``problem``.

    With ``jobs > 1`` the tree is split on the value of the first domain
    point and the subtrees are searched in worker processes; results are
    merged in root-value order so the outcome does not depend on ``jobs``.
    The node budget applies to each subtree separately in that case.
    """
    budget = default_budget() if budget is None else budget
    X, Y = problem.domain, problem.codomain
    later = _later_neighbors(X)
    domains = problem.allowed_masks()
    closed = Y.closed_masks
    mode = problem.mode

    roots = []
    m = domains[0]
    while m:
        low = m & -m
        m ^= low
        roots.append(low)

    if jobs <= 1 or len(roots) <= 1:
        results = [_run(later, domains, closed, mode, budget)]
    else:
        tasks = [(later, [r] + domains[1:], closed, mode, budget) for r in roots]
        results = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_task, t) for t in tasks]
            for fut in futures:
                res = fut.result()
                results.append(res)
                if mode == "find-one" and res[1]:
                    for other in futures:
                        other.cancel()
                    break

    nodes = sum(r[2] for r in results)
    sols = [s for r in results for s in r[1]]
    if mode == "find-one":
        if sols:
            return SearchOutcome("witness", 1, DigitalMap(X, Y, sols[0]), nodes=nodes)
        return SearchOutcome("exhausted", 0, nodes=nodes)
    count = sum(r[0] for r in results)
    maps = [DigitalMap(X, Y, s) for s in sols]
    return SearchOutcome("exhausted", count, maps=maps, nodes=nodes)


def continuous_maps(X: DigitalImage, Y: DigitalImage, *, budget: int | None = None) -> list[DigitalMap]:
    """All continuous maps ``X -> Y`` in lexicographic order of their tables."""
    return solve(MapSearchProblem.unconstrained(X, Y, "enumerate"), budget=budget).maps


def count_continuous_maps(X: DigitalImage, Y: DigitalImage, *, budget: int | None = None) -> int:
    return solve(MapSearchProblem.unconstrained(X, Y, "count"), budget=budget).count


@dataclass(frozen=True)
class Verdict:
    """Truth value of a property together with a refuting map when it fails."""

    holds: bool
    witness: DigitalMap | None = None

    def __bool__(self):
        return self.holds


def has_fpp(X: DigitalImage, *, cross_check: bool = False, budget: int | None = None) -> Verdict:
    """Fixed point property: holds exactly for one-point images.

    For larger images the witness is built directly: a component-cycling
    map when ``X`` is disconnected, otherwise the collapse map onto the
    least point and its least neighbor.  ``cross_check`` additionally runs
    the generic search for a fixed-point-free map.
    """
    if len(X) == 1:
        return Verdict(True)
    blocks = components(X)
    if len(blocks) > 1:
        table = [0] * len(X)
        for b, block in enumerate(blocks):
            target = blocks[(b + 1) % len(blocks)][0]
            for i in block:
                table[i] = target
        witness = DigitalMap(X, X, table)
    else:
        witness = collapse_map(X)
    if cross_check:
        found = solve(MapSearchProblem(X, X, [{i} for i in range(len(X))]), budget=budget)
        if found.status != "witness":
            raise AssertionError("search found no fixed-point-free map on a multi-point image")
    return Verdict(False, witness)


def afpp_problem(X: DigitalImage, mode: str = "find-one") -> MapSearchProblem:
    """Self-maps with no approximate fixed point."""
    return MapSearchProblem(X, X, [{i, *X.neighbors[i]} for i in range(len(X))], mode)


def has_afpp(X: DigitalImage, *, budget: int | None = None, jobs: int = 1) -> Verdict:
    out = solve(afpp_problem(X), budget=budget, jobs=jobs)
    if out.status == "witness":
        return Verdict(False, out.witness)
    return Verdict(True)


def is_universal(f: DigitalMap, *, budget: int | None = None, jobs: int = 1) -> Verdict:
    """Whether every continuous ``g: X -> Y`` meets ``f`` up to adjacency somewhere.

    When it fails, the witness is a continuous ``g`` that is neither equal
    nor adjacent to ``f`` at any point.
    """
    if not is_continuous(f):
        raise InputError("universality is defined for continuous maps only")
    Y = f.codomain
    forbidden = [{v, *Y.neighbors[v]} for v in f.table]
    out = solve(MapSearchProblem(f.domain, Y, forbidden), budget=budget, jobs=jobs)
    if out.status == "witness":
        return Verdict(False, out.witness)
    return Verdict(True)


def is_dominating(S: Iterable, X: DigitalImage) -> bool:
    idx = {X.index_of(p) for p in S}
    if not idx:
        raise InputError("a dominating set must be nonempty")
    covered = 0
    for i in idx:
        covered |= X.closed_masks[i]
    return covered == (1 << len(X)) - 1


@dataclass(frozen=True)
class ContractibilityResult:
    status: str  # "contractible" or "unknown"
    homotopy: Homotopy | None = None

    @property
    def contractible(self) -> bool:
        return self.status == "contractible"


def _common_constant(tables: Sequence[int], closed) -> int | None:
    m = -1
    for v in tables:
        m &= closed[v]
        if not m:
            return None
    return (m & -m).bit_length() - 1


def bounded_contractibility(X: DigitalImage, m_max: int, *, budget: int | None = None) -> ContractibilityResult:
    """Search for a homotopy of length at most ``m_max`` from the identity to a constant.

    Breadth-first over continuous self-maps: the maps one step away from
    ``g`` are the continuous maps ``h`` with ``h(x) <-> g(x)`` everywhere.
    The shortest witness is returned; "unknown" means none exists within
    the bound, which says nothing about larger ``m``.
    """
    if m_max < 1:
        raise InputError("m_max must be a positive integer")
    if not is_connected(X):
        raise InputError("contractibility search needs a connected image")
    budget = default_budget() if budget is None else budget
    closed = X.closed_masks
    start = tuple(range(len(X)))
    parent = {start: None}
    frontier = [start]
    used = 0
    for step in range(1, m_max + 1):
        for g in frontier:
            c = _common_constant(g, closed)
            if c is not None:
                path = [(c,) * len(X), g]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                path.reverse()
                H = Homotopy.from_maps([DigitalMap(X, X, t) for t in path])
                if not verify_homotopy(H):
                    raise AssertionError("constructed contraction failed verification")
                return ContractibilityResult("contractible", H)
        if step == m_max:
            break
        nxt = []
        for g in frontier:
            forbidden = [set(range(len(X))) - _bits(closed[v]) for v in g]
            out = solve(MapSearchProblem(X, X, forbidden, "enumerate"), budget=budget - used)
            used += out.nodes
            for h in out.maps:
                if h.table not in parent:
                    parent[h.table] = g
                    nxt.append(h.table)
        frontier = nxt
    return ContractibilityResult("unknown")


def _bits(mask: int) -> set[int]:
    out = set()
    while mask:
        low = mask & -mask
        mask ^= low
        out.add(low.bit_length() - 1)
    return out

