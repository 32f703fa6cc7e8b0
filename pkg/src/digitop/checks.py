"""Acceptance suite: every fixed-point claim and counterexample checked by exact computation.

Each check returns a :class:`CheckResult`; ``run_checks`` runs them in a
fixed order.  Randomized checks use fixed seeds so their corpora (and
therefore their outputs) are reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import constructions as C
from .core import Cu, DigitalImage, components
from .corpus import (all_graphs, connected_graphs, graphs_up_to_isomorphism, naive_maps,
                     random_image, relabel)
from .homology import (boundary_matrix, dimension, euler_characteristic, homology,
                       homology_groups, simplex_counts, smith_normal_form)
from .invariants import degree, lefschetz_number
from .maps import (DigitalMap, Homotopy, collapse_map, compose, constant_map, fixed_points,
                   identity_map, inverse, is_continuous, is_retraction, verify_homotopy)
from .search import (MapSearchProblem, continuous_maps, has_afpp, has_fpp, is_dominating,
                     is_universal, solve)


@dataclass(frozen=True)
class CheckResult:
    id: str
    passed: bool
    detail: str


def _result(cid: str, failures: list[str], summary: str) -> CheckResult:
    if failures:
        shown = "; ".join(failures[:3]) + (f" (+{len(failures) - 3} more)" if len(failures) > 3 else "")
        return CheckResult(cid, False, shown)
    return CheckResult(cid, True, summary)


def fpp_corpus() -> list[tuple[str, DigitalImage]]:
    items = [(f"graph{len(X)}#{k}", X) for k, X in enumerate(connected_graphs(5))]
    items += [(f"disconnected{len(X)}#{k}", X)
              for k, X in enumerate(X for n in range(2, 5) for X in all_graphs(n)
                                    if len(components(X)) > 1)]
    items += [(f"interval(0,{k})", C.interval(0, k)) for k in range(1, 7)]
    items += [(f"cube({L})", C.cube(L)) for L in ([1], [1, 1], [2, 2], [1, 1, 1], [2, 1])]
    items += [(f"scc({m})", C.scc(m)) for m in range(4, 11)]
    items += [(f"sphere({n})", C.sphere(n)) for n in (1, 2)]
    return items


def check_fpp() -> CheckResult:
    failures = []
    corpus = fpp_corpus()
    for name, X in corpus:
        v = has_fpp(X)
        if v.holds != (len(X) == 1):
            failures.append(f"{name}: fpp={v.holds} with |X|={len(X)}")
        if not v.holds:
            w = v.witness
            if not is_continuous(w) or fixed_points(w):
                failures.append(f"{name}: bad witness")
    return _result("c1-fpp", failures, f"{len(corpus)} images, FPP iff |X|=1")


def check_cube_afpp() -> CheckResult:
    images = [(f"interval(0,{k})", C.interval(0, k)) for k in range(1, 7)]
    images += [(f"cube({L})", C.cube(L)) for L in ([1, 1], [2, 2], [1, 1, 1])]
    failures = [name for name, X in images if not has_afpp(X)]
    return _result("c2-cube-afpp", failures, f"{len(images)} cubes have the AFPP")


def check_scc_afpp() -> CheckResult:
    failures = []
    for m in range(4, 11):
        X = C.scc(m)
        v = has_afpp(X)
        if v.holds:
            failures.append(f"scc({m}) reported AFPP")
            continue
        w = v.witness
        if not is_continuous(w) or any(X.is_close(i, t) for i, t in enumerate(w.table)):
            failures.append(f"scc({m}) witness invalid")
    return _result("c3-scc-afpp", failures, "scc(4..10) lack the AFPP with verified witnesses")


def _reflection() -> DigitalMap:
    I = C.interval(0, 1)
    return DigitalMap.from_function(I, I, lambda p: (1 - p[0],))


def check_reflection() -> CheckResult:
    F = _reflection()
    lam = lefschetz_number(F)
    failures = []
    if not is_continuous(F):
        failures.append("F not continuous")
    if fixed_points(F):
        failures.append("F has a fixed point")
    if lam != 1:
        failures.append(f"lambda(F)={lam}, expected 1")
    return _result("c4a-reflection", failures, "F(x)=1-x continuous, fixed-point free, lambda(F)=1")


def check_square_flip() -> CheckResult:
    X = DigitalImage([(0, 0), (1, 0), (0, 1), (1, 1)], Cu(1))
    G = DigitalMap.from_function(X, X, lambda p: (p[0], 1 - p[1]))
    failures = []
    if not is_continuous(G):
        failures.append("G not continuous")
    if fixed_points(G):
        failures.append("G has a fixed point")
    return _result("c4b-square-flip", failures, "G(x,y)=(x,1-y) continuous, fixed-point free")


def three_point_image() -> DigitalImage:
    return DigitalImage([(0, 0), (0, 1), (1, 1)], Cu(2))


def check_three_cycle() -> CheckResult:
    X = three_point_image()
    f = DigitalMap.from_pairs(X, X, {(0, 0): (0, 1), (0, 1): (1, 1), (1, 1): (0, 0)})
    failures = []
    if not is_continuous(f):
        failures.append("3-cycle not continuous")
    if fixed_points(f):
        failures.append("3-cycle has a fixed point")
    return _result("c4c-three-cycle", failures, "3-point c2 cycle continuous, fixed-point free")


def check_point_homology() -> CheckResult:
    X, P = three_point_image(), DigitalImage([(0, 0)], Cu(2))
    failures = []
    for q in range(4):
        hx, hp = homology(X, q), homology(P, q)
        expected = (1, ()) if q == 0 else (0, ())
        if (hx.betti, hx.torsion) != expected or (hp.betti, hp.torsion) != expected:
            failures.append(f"H_{q}: {hx} vs {hp}")
    return _result("c4d-point-homology", failures, "H_q(X)=H_q(point): Z at q=0, else 0")


def check_sphere_homology() -> CheckResult:
    S1, S2 = C.sphere(1), C.sphere(2)
    got = (str(homology(S1, 1)), str(homology(S2, 1)), str(homology(S2, 2)))
    failures = [] if got == ("Z", "Z^23", "0") else [f"got H1(S1)={got[0]}, H1(S2)={got[1]}, H2(S2)={got[2]}"]
    return _result("c4e-sphere-homology", failures, "H1(S1)=Z, H1(S2)=Z^23, H2(S2)=0")


def check_sphere_degree() -> CheckResult:
    S1, S2 = C.sphere(1), C.sphere(2)
    d_anti = degree(C.antipode_map(S1), 1)
    d_s2 = degree(C.antipode_map(S2), 2)
    d_col = degree(collapse_map(S1), 1)
    failures = []
    if d_anti.value != 1:
        failures.append(f"deg(antipode S1)={d_anti}")
    if d_s2.defined:
        failures.append(f"deg(antipode S2)={d_s2}")
    if d_col.value != 0:
        failures.append(f"deg(collapse S1)={d_col}")
    return _result("c4f-sphere-degree", failures, "deg antipode S1=1, S2 undefined, collapse=0")


def check_euler_s2() -> CheckResult:
    S2 = C.sphere(2)
    chi = euler_characteristic(S2)
    bettis = [g.betti for g in homology_groups(S2)]
    alt = sum((-1) ** q * b for q, b in enumerate(bettis))
    failures = [] if chi == -22 == alt == 1 - 23 else [f"chi={chi}, betti sum={alt}"]
    return _result("c4g-euler-s2", failures, f"chi(S2)={chi}=1-23, alpha={simplex_counts(S2)}")


def check_collapse_homotopy() -> CheckResult:
    X = C.scc(8)
    h = collapse_map(X)
    const = constant_map(X, X, X.points[0])
    H = Homotopy.from_maps([h, const])
    failures = []
    if not is_continuous(h):
        failures.append("collapse map not continuous")
    if fixed_points(h):
        failures.append("collapse map has a fixed point")
    if not verify_homotopy(H):
        failures.append("homotopy to the constant map rejected")
    return _result("c4h-collapse-homotopy", failures, "collapse map on scc(8) homotopic to constant in 1 step")


def random_retraction(X: DigitalImage, rng: random.Random):
    """A random proper subset ``A`` and a retraction onto it, or None if the search finds none."""
    n = len(X)
    k = rng.randint(1, n - 1)
    A = sorted(rng.sample(range(n), k))
    inside = set(A)
    # Values must lie in A, and each a in A must be fixed.
    forbidden = [set(range(n)) - ({i} if i in inside else inside) for i in range(n)]
    out = solve(MapSearchProblem(X, X, forbidden))
    if out.status != "witness":
        return None
    return A, out.witness


def check_afpp_invariance(pairs: int = 100, seed: int = 5) -> CheckResult:
    rng = random.Random(seed)
    failures = []
    for k in range(pairs):
        X = random_image(rng, 6)
        Y, h = relabel(X, rng)
        if bool(has_afpp(X)) != bool(has_afpp(Y)):
            failures.append(f"iso pair {k}")
    found = 0
    while found < pairs:
        X = random_image(rng, 6)
        if len(X) < 2:
            continue
        ret = random_retraction(X, rng)
        if ret is None:
            continue
        A, r = ret
        found += 1
        if not is_retraction(r, [X.points[a] for a in A]):
            failures.append(f"retract pair {found}: bad retraction")
        if has_afpp(X) and not has_afpp(X.subimage(A)):
            failures.append(f"retract pair {found}")
    return _result("c5-afpp-invariance", failures,
                   f"{pairs} isomorphism pairs and {pairs} retract pairs, zero violations")


def check_wedge() -> CheckResult:
    pool = [("interval(0,1)", C.interval(0, 1)), ("interval(0,2)", C.interval(0, 2)),
            ("scc(4)", C.scc(4)), ("scc(6)", C.scc(6))]
    afpp = {name: bool(has_afpp(X)) for name, X in pool}
    failures = []
    count = 0
    for (na, A), (nb, B) in itertools.product(pool, repeat=2):
        for a0 in A.points:
            for b0 in B.points:
                W = C.wedge(A, a0, B, b0)
                count += 1
                if bool(has_afpp(W.image)) != (afpp[na] and afpp[nb]):
                    failures.append(f"{na}@{a0} v {nb}@{b0}")
    return _result("c6-wedge", failures, f"{count} wedges: AFPP(A v B) = AFPP(A) and AFPP(B)")


def _universal_corpus() -> list[DigitalImage]:
    return graphs_up_to_isomorphism(4)


def check_universal(seed: int = 7) -> CheckResult:
    rng = random.Random(seed)
    failures = []

    for name, X in fpp_corpus():
        if bool(is_universal(identity_map(X))) != bool(has_afpp(X)):
            failures.append(f"identity/afpp {name}")

    small = _universal_corpus()
    n_maps = 0
    for X in small:
        for Y in small:
            for f in continuous_maps(X, Y):
                n_maps += 1
                if is_universal(f) and not is_dominating([Y.points[v] for v in f.table], Y):
                    failures.append("universal image not dominating")

    boundary = []
    for X in graphs_up_to_isomorphism(3, connected=True):
        m = len(X)
        for n in (m + 2, m + 3, m + 4):
            targets = [("interval", C.interval(0, n - 1))]
            if n >= 4:
                targets.append(("scc", C.scc(n)))
            for tname, Y in targets:
                universal = sum(1 for f in continuous_maps(X, Y) if is_universal(f))
                if n > m + 2 and universal:
                    failures.append(f"universal map into long target m={m} {tname}({n})")
                elif n == m + 2:
                    boundary.append(f"{tname}({n})/X{m}e{X.n_edges}:{universal}")

    for k in range(40):
        X = random_image(rng, 6)
        Y, h = relabel(X, rng)
        if bool(is_universal(h)) != bool(has_afpp(X)):
            failures.append(f"isomorphism/afpp #{k}")

    triples = 0
    while triples < 150:
        W, X, Y = (rng.choice(small) for _ in range(3))
        fs, gs = continuous_maps(W, X), continuous_maps(X, Y)
        f, g = rng.choice(fs), rng.choice(gs)
        triples += 1
        if is_universal(compose(g, f)) and not is_universal(g):
            failures.append(f"composite universal, outer not #{triples}")
        U, gu = relabel(X, rng)
        V, hv = relabel(Y, rng)
        verdicts = {bool(is_universal(g)), bool(is_universal(compose(g, inverse(gu)))),
                    bool(is_universal(compose(hv, g)))}
        if len(verdicts) != 1:
            failures.append(f"isomorphism changed universality #{triples}")
    return _result("c7-universal", failures,
                   f"identity vs afpp on corpus, dominating images on {n_maps} maps, long targets, "
                   f"isomorphisms, composites on {triples} triples; boundary n=m+2 universal counts "
                   + ",".join(boundary))


def check_product() -> CheckResult:
    factors = [C.interval(0, k) for k in range(1, 5)]
    factors.append(DigitalImage([(0,), (2,)], Cu(1)))
    factors.append(DigitalImage([(0,), (1,), (3,)], Cu(1)))
    failures = []
    count = 0
    for r in (1, 2, 3):
        for combo in itertools.product(factors, repeat=r):
            size = int(np.prod([len(X) for X in combo]))
            if size > 9:
                continue
            P = C.product(combo)
            count += 1
            if has_afpp(P) and not all(has_afpp(X) for X in combo):
                failures.append(f"sizes {[len(X) for X in combo]}")
    return _result("c8-product", failures, f"{count} products: AFPP(product) implies AFPP(factors)")


def check_oracle(seed: int = 9) -> CheckResult:
    failures = []
    I1, I2 = C.interval(0, 1), C.interval(0, 2)
    for X, expected in ((I1, 4), (I2, 17)):
        got = solve(MapSearchProblem.unconstrained(X, X, "count")).count
        brute = sum(1 for _ in naive_maps(X, X))
        if not got == brute == expected:
            failures.append(f"|X|={len(X)}: solve={got} naive={brute} expected={expected}")
    rng = random.Random(seed)
    pairs = 0
    for _ in range(150):
        X = random_image(rng, 4)
        Y = random_image(rng, 4)
        forbidden = None
        if rng.random() < 0.5:
            forbidden = [set(v for v in range(len(Y)) if rng.random() < 0.3) for _ in range(len(X))]
        prob = MapSearchProblem(X, Y, forbidden or [()] * len(X), "count")
        got = solve(prob).count
        brute = sum(1 for _ in naive_maps(X, Y, forbidden))
        pairs += 1
        if got != brute:
            failures.append(f"pair {pairs}: {got} != {brute}")
    return _result("c9-oracle", failures, f"solve(count) = naive count on {pairs} random pairs, plus 4 and 17")


def check_homology_engine(images: int = 200, seed: int = 10) -> CheckResult:
    rng = random.Random(seed)
    failures = []
    for k in range(images):
        X = random_image(rng, 8)
        top = dimension(X)
        for q in range(1, top + 2):
            Dq, Dq1 = boundary_matrix(X, q), boundary_matrix(X, q + 1)
            if Dq.shape[1] and Dq1.shape[1] and (Dq.dot(Dq1) != 0).any():
                failures.append(f"image {k}: d{q} d{q + 1} != 0")
        for q in range(top + 1):
            M = boundary_matrix(X, q + 1)
            snf = smith_normal_form(M)
            if M.size and (snf.U.dot(M).dot(snf.V) != snf.S).any():
                failures.append(f"image {k}: SNF identity fails for d{q + 1}")
        if homology(X, 0).betti != len(components(X)):
            failures.append(f"image {k}: H_0 rank != components")
        if homology(X, top).torsion:
            failures.append(f"image {k}: top homology has torsion")
    return _result("c10-homology-engine", failures,
                   f"{images} random images: dd=0, UMV=S, rank H_0 = components, top torsion-free")


CHECKS: dict[str, Callable[[], CheckResult]] = {
    "c1-fpp": check_fpp,
    "c2-cube-afpp": check_cube_afpp,
    "c3-scc-afpp": check_scc_afpp,
    "c4a-reflection": check_reflection,
    "c4b-square-flip": check_square_flip,
    "c4c-three-cycle": check_three_cycle,
    "c4d-point-homology": check_point_homology,
    "c4e-sphere-homology": check_sphere_homology,
    "c4f-sphere-degree": check_sphere_degree,
    "c4g-euler-s2": check_euler_s2,
    "c4h-collapse-homotopy": check_collapse_homotopy,
    "c5-afpp-invariance": check_afpp_invariance,
    "c6-wedge": check_wedge,
    "c7-universal": check_universal,
    "c8-product": check_product,
    "c9-oracle": check_oracle,
    "c10-homology-engine": check_homology_engine,
}


def run_checks(only: str | None = None) -> list[CheckResult]:
    ids = [only] if only else list(CHECKS)
    return [CHECKS[cid]() for cid in ids]
