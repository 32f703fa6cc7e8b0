"""Property checks for the approximate-fixed-point and universal-map theorems on small images."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import images
from digitop.constructions import interval, scc, wedge
from digitop.corpus import graphs_up_to_isomorphism, random_image, relabel
from digitop.maps import DigitalMap, compose, identity_map, inverse, restrict
from digitop.search import continuous_maps, has_afpp, is_dominating, is_universal

WEDGE_SOURCES = [interval(0, 1), interval(0, 2), scc(4), scc(6)]


@pytest.mark.parametrize("A,B", list(itertools.product(WEDGE_SOURCES, repeat=2)))
def test_wedge_has_afpp_iff_both_sides_do(A, B):
    expected = bool(has_afpp(A)) and bool(has_afpp(B))
    for a0, b0 in itertools.product(A.points, B.points):
        assert bool(has_afpp(wedge(A, a0, B, b0).image)) == expected


@settings(max_examples=40)
@given(images(max_points=4), images(max_points=4))
def test_universal_maps_have_dominating_images(X, Y):
    for f in continuous_maps(X, Y):
        if is_universal(f):
            assert is_dominating([Y.points[v] for v in set(f.table)], Y)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_no_universal_map_into_long_intervals_or_curves(m):
    targets = []
    for n in (m + 3, m + 4):
        targets.append(interval(0, n - 1))
        if n >= 4:
            targets.append(scc(n))
    for X in graphs_up_to_isomorphism(m, connected=True):
        if len(X) != m:
            continue
        for Y in targets:
            for f in continuous_maps(X, Y):
                assert not is_universal(f)


@settings(max_examples=30)
@given(images(max_points=4), images(max_points=3), images(max_points=4), st.data())
def test_universal_composite_has_universal_outer_map(X, Y, Z, data):
    f = data.draw(st.sampled_from(continuous_maps(X, Y)))
    g = data.draw(st.sampled_from(continuous_maps(Y, Z)))
    if is_universal(compose(g, f)):
        assert is_universal(g)


@settings(max_examples=40)
@given(images(max_points=4), images(max_points=4), st.data())
def test_universal_restriction_gives_universal_map(X, Y, data):
    f = data.draw(st.sampled_from(continuous_maps(X, Y)))
    keep = data.draw(st.sets(st.integers(0, len(X) - 1), min_size=1))
    g = restrict(f, [X.points[i] for i in sorted(keep)])
    if is_universal(g):
        assert is_universal(f)


@settings(max_examples=40)
@given(images(max_points=4), images(max_points=4), st.randoms(use_true_random=False), st.data())
def test_isomorphisms_preserve_universality(X, Y, rng, data):
    f = data.draw(st.sampled_from(continuous_maps(X, Y)))
    X2, h = relabel(X, rng)
    Y2, k = relabel(Y, rng)
    moved = compose(k, compose(f, inverse(h)))
    assert bool(is_universal(f)) == bool(is_universal(moved))
    assert bool(is_universal(f)) == bool(is_universal(compose(f, inverse(h))))
    assert bool(is_universal(f)) == bool(is_universal(compose(k, f)))


def test_isomorphism_universal_iff_domain_has_afpp():
    rng = random.Random(9)
    for _ in range(60):
        X = random_image(rng, 6)
        Y, h = relabel(X, rng)
        assert bool(is_universal(h)) == bool(has_afpp(X))


def test_identity_universal_iff_afpp_on_connected_graphs():
    for X in graphs_up_to_isomorphism(5, connected=True):
        assert bool(is_universal(identity_map(X))) == bool(has_afpp(X))
