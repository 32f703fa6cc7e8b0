import itertools

import pytest
from hypothesis import settings, strategies as st

from digitop.core import Cu, DigitalImage, Explicit

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graph_images(draw, min_points=1, max_points=6):
    n = draw(st.integers(min_points, max_points))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return DigitalImage([(i,) for i in range(n)], Explicit([e for e, b in zip(pairs, mask) if b]))


@st.composite
def lattice_images(draw, max_points=6, dim=2):
    cells = list(itertools.product(range(3), repeat=dim))
    pts = draw(st.lists(st.sampled_from(cells), min_size=1, max_size=max_points, unique=True))
    u = draw(st.integers(1, dim))
    return DigitalImage(pts, Cu(u))


def images(min_points=1, max_points=6):
    return st.one_of(graph_images(min_points, max_points), lattice_images(max_points))


@st.composite
def continuous_map_pairs(draw, max_points=4):
    """An image pair and a continuous map between them, drawn from the full list of continuous maps."""
    from digitop.search import continuous_maps

    X = draw(images(max_points=max_points))
    Y = draw(images(max_points=max_points))
    maps = continuous_maps(X, Y)
    return draw(st.sampled_from(maps))


def brute_continuous(X, Y):
    """Tables of all continuous maps X -> Y by checking every one of |Y|^|X| tables."""
    out = []
    for t in itertools.product(range(len(Y)), repeat=len(X)):
        if all(t[i] == t[j] or Y.is_adjacent(t[i], t[j]) for i, j in X.edges()):
            out.append(t)
    return out


@pytest.fixture
def unit_interval():
    return DigitalImage([(0,), (1,)], Cu(1))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
