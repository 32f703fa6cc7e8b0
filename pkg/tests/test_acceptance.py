"""Acceptance gate: every criterion runs with exact integer comparisons.

Each check id prints one ``PASS``/``FAIL`` line (shown in the pytest
terminal summary, or directly when this file is run as a script).  A few
headline numbers are re-derived here independently of ``digitop.checks``.
"""

import itertools
import sys

import pytest

from digitop.checks import CHECKS, run_checks
from digitop.constructions import antipode_map, interval, scc, sphere
from digitop.homology import euler_characteristic, homology, simplex_counts
from digitop.invariants import degree, lefschetz_number
from digitop.maps import DigitalMap, approximate_fixed_points, collapse_map
from digitop.search import count_continuous_maps, has_afpp

RESULTS: list[str] = []


@pytest.mark.parametrize("check_id", list(CHECKS))
def test_criterion(check_id):
    (result,) = run_checks(check_id)
    line = f"{'PASS' if result.passed else 'FAIL'} {result.id}: {result.detail}"
    RESULTS.append(line)
    print(line)
    assert result.passed, line


def test_headline_numbers():
    assert count_continuous_maps(interval(0, 1), interval(0, 1)) == 4
    assert sum(1 for t in itertools.product(range(3), repeat=3)
               if abs(t[0] - t[1]) <= 1 and abs(t[1] - t[2]) <= 1) == 17
    assert count_continuous_maps(interval(0, 2), interval(0, 2)) == 17

    S1, S2 = sphere(1), sphere(2)
    assert (homology(S1, 1).betti, homology(S2, 1).betti, homology(S2, 2).betti) == (1, 23, 0)
    assert homology(S2, 1).torsion == ()
    assert simplex_counts(S2)[:2] == [26, 48]
    assert euler_characteristic(S2) == -22 == 1 - 23

    I = interval(0, 1)
    assert lefschetz_number(DigitalMap(I, I, [1, 0])) == 1
    assert degree(antipode_map(S1), 1).value == 1
    assert degree(antipode_map(S2), 2).value is None
    assert degree(collapse_map(S1), 1).value == 0

    for m in range(4, 11):
        v = has_afpp(scc(m))
        assert not v and approximate_fixed_points(v.witness) == {}


def main() -> int:
    failed = 0
    for r in run_checks():
        print(f"{'PASS' if r.passed else 'FAIL'} {r.id}: {r.detail}")
        failed += not r.passed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
