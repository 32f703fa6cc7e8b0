import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_continuous, images
from digitop.constructions import cube, interval, scc
from digitop.core import BudgetExceeded, Cu, DigitalImage, InputError
from digitop.corpus import (graph_image, graphs_up_to_isomorphism, naive_has_afpp,
                            naive_is_universal, naive_maps, random_image, relabel)
from digitop.maps import (DigitalMap, approximate_fixed_points, compose, constant_map,
                          fixed_points, identity_map, inverse, is_continuous, verify_homotopy)
from digitop.search import (MapSearchProblem, afpp_problem, bounded_contractibility,
                            continuous_maps, count_continuous_maps, default_budget, has_afpp,
                            has_fpp, is_dominating, is_universal, solve)


def test_interval_of_three_self_map_count():
    I = interval(0, 2)
    # inline oracle: all 27 tables, consecutive values may differ by at most 1
    naive = sum(1 for t in itertools.product(range(3), repeat=3)
                if abs(t[0] - t[1]) <= 1 and abs(t[1] - t[2]) <= 1)
    assert naive == 17
    assert count_continuous_maps(I, I) == 17


def test_interval_self_map_count():
    I = interval(0, 1)
    assert len(brute_continuous(I, I)) == count_continuous_maps(I, I) == 4


@given(images(max_points=5), images(max_points=4))
def test_enumeration_matches_brute_force(X, Y):
    found = [f.table for f in continuous_maps(X, Y)]
    assert found == brute_continuous(X, Y)
    assert count_continuous_maps(X, Y) == len(found)


@given(images(max_points=5), st.data())
def test_forbidden_sets_match_brute_force(X, data):
    n = len(X)
    forbidden = [data.draw(st.sets(st.integers(0, n - 1))) for _ in range(n)]
    out = solve(MapSearchProblem(X, X, forbidden, "enumerate"))
    naive = [f.table for f in naive_maps(X, X, forbidden)]
    assert [f.table for f in out.maps] == naive
    one = solve(MapSearchProblem(X, X, forbidden))
    if naive:
        assert one.status == "witness" and one.witness.table == naive[0]
    else:
        assert one.status == "exhausted" and one.witness is None


def test_fpp_only_on_single_points():
    assert has_fpp(DigitalImage([(3, 3)], Cu(2)))
    for X in [interval(0, 1), scc(4), DigitalImage([(0,), (5,)], Cu(1)), cube([1, 1])]:
        v = has_fpp(X, cross_check=True)
        assert not v
        assert is_continuous(v.witness) and fixed_points(v.witness) == []


def test_fpp_agrees_with_exhaustive_search_on_small_graphs():
    for X in graphs_up_to_isomorphism(4):
        exhaustive = not any(not fixed_points(f) for f in naive_maps(X, X))
        assert bool(has_fpp(X)) == exhaustive == (len(X) == 1)


@pytest.mark.parametrize("b", range(1, 7))
def test_intervals_have_afpp(b):
    assert has_afpp(interval(0, b))


@pytest.mark.parametrize("m", range(4, 11))
def test_simple_closed_curves_lack_afpp(m):
    v = has_afpp(scc(m))
    assert not v
    assert v.witness.table == tuple((i + 2) % m for i in range(m))
    assert approximate_fixed_points(v.witness) == {}


@pytest.mark.parametrize("lengths", [[1, 1], [2, 2], [1, 1, 1]])
def test_cubes_have_afpp(lengths):
    assert has_afpp(cube(lengths))


@settings(max_examples=40)
@given(images(max_points=5))
def test_afpp_matches_brute_force(X):
    assert bool(has_afpp(X)) == naive_has_afpp(X)


def test_afpp_is_isomorphism_invariant():
    rng = random.Random(11)
    for _ in range(40):
        X = random_image(rng, 6)
        Y, h = relabel(X, rng)
        vx, vy = has_afpp(X), has_afpp(Y)
        assert bool(vx) == bool(vy)
        if not vx:
            # transporting the witness gives a witness on the copy
            moved = compose(h, compose(vx.witness, inverse(h)))
            assert approximate_fixed_points(moved) == {}


def test_afpp_inherited_by_retracts():
    rng = random.Random(5)
    checked = 0
    for _ in range(60):
        X = random_image(rng, 6)
        if not has_afpp(X):
            continue
        for r in continuous_maps(X, X):
            A = sorted(set(r.table))
            if any(r.table[a] != a for a in A):
                continue
            assert has_afpp(X.subimage(A))
            checked += 1
    assert checked > 0


def test_universal_functions_examples():
    I = interval(0, 3)
    assert is_universal(identity_map(I))
    for m in (4, 6, 8):
        X = scc(m)
        assert not is_universal(identity_map(X))
    with pytest.raises(InputError):
        is_universal(DigitalMap(I, I, [0, 3, 0, 3]))


@settings(max_examples=40)
@given(images(max_points=4), images(max_points=4), st.data())
def test_universal_matches_brute_force(X, Y, data):
    f = data.draw(st.sampled_from(continuous_maps(X, Y)))
    v = is_universal(f)
    assert bool(v) == naive_is_universal(f)
    if not v:
        assert not any(Y.is_close(a, b) for a, b in zip(f.table, v.witness.table))


def test_identity_universal_iff_afpp():
    for X in graphs_up_to_isomorphism(4):
        assert bool(is_universal(identity_map(X))) == bool(has_afpp(X))


def test_constant_maps_to_dominating_points_are_universal():
    X = interval(0, 2)
    assert is_dominating([(1,)], X)
    assert not is_dominating([(0,)], X)
    assert is_universal(constant_map(X, X, (1,)))
    with pytest.raises(InputError):
        is_dominating([], X)


def test_jobs_do_not_change_results():
    for X in [scc(9), interval(0, 5), cube([1, 2]), graph_image(5, [(0, 1), (1, 2), (3, 4)])]:
        serial = solve(afpp_problem(X, "enumerate"))
        parallel = solve(afpp_problem(X, "enumerate"), jobs=3)
        assert [f.table for f in serial.maps] == [f.table for f in parallel.maps]
        w1, w3 = has_afpp(X), has_afpp(X, jobs=3)
        assert bool(w1) == bool(w3)
        assert (w1.witness and w1.witness.table) == (w3.witness and w3.witness.table)


def test_witness_is_deterministic():
    X = scc(10)
    tables = {has_afpp(X).witness.table for _ in range(3)}
    assert len(tables) == 1


def test_budget(monkeypatch):
    with pytest.raises(BudgetExceeded):
        solve(afpp_problem(interval(0, 6)), budget=3)
    monkeypatch.setenv("DIGITOP_BUDGET", "7")
    assert default_budget() == 7
    with pytest.raises(BudgetExceeded):
        has_afpp(interval(0, 6))
    monkeypatch.setenv("DIGITOP_BUDGET", "lots")
    with pytest.raises(InputError):
        default_budget()


def test_contractibility_search():
    res = bounded_contractibility(interval(0, 1), 1)
    assert res.contractible and res.homotopy.m == 1 and verify_homotopy(res.homotopy)
    res = bounded_contractibility(interval(0, 4), 3)
    assert res.contractible and verify_homotopy(res.homotopy)
    H = res.homotopy
    assert H.table[0] == tuple(range(5)) and len(set(H.table[-1])) == 1
    assert bounded_contractibility(scc(8), 2).status == "unknown"
    with pytest.raises(InputError):
        bounded_contractibility(DigitalImage([(0,), (3,)], Cu(1)), 2)


def _rotation_reaches_non_surjection(m, steps):
    """Whether any length-``steps`` homotopy joins the rotation of scc(m) to a non-surjective map."""
    X = scc(m)
    rot = tuple((i + 1) % m for i in range(m))
    closed = X.closed_masks
    frontier, seen = {rot}, {rot}
    for _ in range(steps):
        nxt = set()
        for g in frontier:
            forbidden = [set(range(m)) - {j for j in range(m) if closed[v] >> j & 1} for v in g]
            for h in solve(MapSearchProblem(X, X, forbidden, "enumerate")).maps:
                if h.table not in seen:
                    seen.add(h.table)
                    nxt.add(h.table)
        frontier = nxt
    return any(len(set(t)) < m for t in seen)


@pytest.mark.parametrize("m", [4, 6, 8])
def test_rotation_and_non_surjections_within_bound(m):
    # only the 4-point curve lets an isomorphism slide onto a non-surjective map;
    # for larger curves this is checked only up to the search bound
    assert _rotation_reaches_non_surjection(m, 3) == (m == 4)


def test_singleton_is_contractible():
    res = bounded_contractibility(DigitalImage([(0, 0)], Cu(2)), 1)
    assert res.contractible and res.homotopy.m == 1


def test_no_universal_map_from_a_point_into_a_long_interval():
    P, Y = DigitalImage([(0,)], Cu(1)), interval(0, 4)
    for f in continuous_maps(P, Y):
        assert not is_universal(f)


def test_shift_by_one_on_scc8_not_universal():
    X = scc(8)
    assert not is_universal(DigitalMap(X, X, [(i + 1) % 8 for i in range(8)]))


def test_three_cycle_is_fixed_point_free():
    X = DigitalImage([(0, 0), (0, 1), (1, 1)], Cu(2))
    f = DigitalMap.from_pairs(X, X, {(0, 0): (0, 1), (0, 1): (1, 1), (1, 1): (0, 0)})
    assert is_continuous(f) and fixed_points(f) == []
    assert not has_fpp(X)
