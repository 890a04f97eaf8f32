from itertools import product

import pytest

from txygenus.algebra import X, Y
from txygenus.fixedpoints import FixedPoint, FixedPointData, negate_action, reduce
from txygenus.genus import genus_report, rigidity_check
from txygenus.search import (
    PREAMBLE,
    ScanParams,
    chi_two_census,
    enumerate_datasets,
    kosniowski_scan,
    point_universe,
)


def brute_force_orbits(n, m_max, w, dedupe=True):
    """Canonical reduced datasets by blind product enumeration, independent of the generator."""
    values = [v for v in range(-w, w + 1) if v]
    pts = [FixedPoint(s, ws) for s in (1, -1) for ws in product(values, repeat=n)]
    seen = set()
    for m in range(1, m_max + 1):
        for choice in product(pts, repeat=m):
            d = FixedPointData(n, choice)
            if reduce(d) != d:
                continue
            key = d.points
            if dedupe:
                key = max(d.points, negate_action(d).points)
            seen.add(key)
    return seen


def test_params_validation():
    for bad in [(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, -2)]:
        with pytest.raises(ValueError):
            ScanParams(*bad)
    assert ScanParams(5, 2, 2).k == 2


def test_universe_size():
    # multisets of size n from 2W values, times two signs
    assert len(point_universe(ScanParams(2, 1, 2))) == 2 * 10


def test_enumerate_n1_m1_w1():
    got = list(enumerate_datasets(ScanParams(1, 1, 1)))
    assert got == [
        FixedPointData.from_pairs(1, [([1], -1)]),
        FixedPointData.from_pairs(1, [([1], 1)]),
    ]


def test_enumerate_n1_m2_w1_membership(cp1, cancelling_pair):
    got = list(enumerate_datasets(ScanParams(1, 2, 1)))
    assert cp1 in got
    assert cancelling_pair not in got
    # 2 single points up to negation, plus 5 negation classes of reduced pairs
    assert len(got) == 7


@pytest.mark.parametrize("n, m_max, w", [(1, 2, 1), (1, 3, 2), (2, 2, 1), (2, 2, 2), (3, 2, 1)])
@pytest.mark.parametrize("dedupe", [True, False])
def test_enumeration_matches_brute_force(n, m_max, w, dedupe):
    got = [d.points for d in enumerate_datasets(ScanParams(n, m_max, w, dedupe))]
    assert len(got) == len(set(got))
    assert set(got) == brute_force_orbits(n, m_max, w, dedupe)


def test_scan_single_points_never_rigid():
    r = kosniowski_scan(ScanParams(2, 1, 3))
    assert r.total_enumerated > 0 and r.rigid_nonzero == [] and r.violations == []


def test_scan_n1_finds_cp1(cp1):
    r = kosniowski_scan(ScanParams(1, 2, 2))
    assert (cp1, X - Y) in r.rigid_nonzero
    assert r.violations == []
    assert r.rigid_count >= len(r.rigid_nonzero)


def test_scan_counts_match_exhaustive_check():
    p = ScanParams(2, 2, 1)
    rigid = [d for d in enumerate_datasets(p) if rigidity_check(d).rigid]
    r = kosniowski_scan(p)
    assert r.total_enumerated == len(list(enumerate_datasets(p)))
    assert r.rigid_count == len(rigid)


def test_scan_deterministic_across_jobs():
    p = ScanParams(3, 2, 2)
    assert kosniowski_scan(p, jobs=1).to_json() == kosniowski_scan(p, jobs=2).to_json()


def test_scan_report_json():
    r = kosniowski_scan(ScanParams(1, 2, 1)).to_json()
    assert r["preamble"] == PREAMBLE
    assert r["k"] == 0 and r["violations"] == []
    assert r["rigid_nonzero_count"] == len(r["rigid_nonzero"])


def test_rigid_nonzero_pass_report_invariants():
    for p in (ScanParams(1, 2, 2), ScanParams(3, 2, 2)):
        for d, const in kosniowski_scan(p).rigid_nonzero:
            r = genus_report(d)
            n = d.half_dim
            assert r.rigid and not const.is_zero()
            assert all(r.chi[l] == (-1) ** n * r.chi[n - l] for l in range(n + 1))
            assert (r.euler - r.top_chern) % 2 == 0


def test_progress_callback_sees_every_chunk():
    lines = []
    p = ScanParams(1, 2, 1)
    kosniowski_scan(p, progress=lines.append)
    assert len(lines) == len(point_universe(p))


def test_census_examples():
    hits = chi_two_census(ScanParams(1, 2, 2))
    assert hits and all(n == 1 and d.m == 2 for n, d in hits)
    assert chi_two_census(ScanParams(2, 2, 2)) == []
    with pytest.raises(ValueError):
        chi_two_census(ScanParams(2, 3, 2))


def test_census_n3_has_s6_type_data():
    for n, d in chi_two_census(ScanParams(3, 2, 2)):
        a, b = d.points
        assert n == 3
        assert sorted(-w for w in a.weights) == list(b.weights)
        assert sum(a.weights) == 0
