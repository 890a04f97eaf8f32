"""Exhaustive search over small fixed-point data for the lower bound on fixed points.

Every surgery-reduced dataset with at most ``max_points`` points and weights
in ``[-W, W] \\ {0}`` is tested for rigidity; rigid data with a nonzero genus
and ``m <= floor(n/2)`` would contradict the bound ``4 chi(M) > dim M``.
"""
from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from .algebra import BivarPoly, rf_series
from .fixedpoints import FixedPoint, FixedPointData, negate_action
from .genus import point_term, rigidity_check

__all__ = [
    "ScanParams",
    "ScanReport",
    "PREAMBLE",
    "point_universe",
    "enumerate_datasets",
    "enumerate_chunk",
    "kosniowski_scan",
    "chi_two_census",
]

PREAMBLE = (
    "Abstract fixed-point data only. Rigidity of the localization sum is necessary "
    "for realizability by a unitary S^1-manifold but not known to be sufficient, so "
    "this scan probes the combinatorial statement m >= floor(n/2) + 1 for rigid "
    "nonzero data; it cannot refute the geometric theorem."
)


@dataclass(frozen=True)
class ScanParams:
    half_dim: int
    max_points: int
    weight_bound: int
    dedupe_negation: bool = True

    def __post_init__(self):
        for name in ("half_dim", "max_points", "weight_bound"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")

    @property
    def k(self) -> int:
        return self.half_dim // 2


@dataclass
class ScanReport:
    params: ScanParams
    total_enumerated: int = 0
    rigid_count: int = 0
    rigid_nonzero: list[tuple[FixedPointData, BivarPoly]] = field(default_factory=list)
    violations: list[FixedPointData] = field(default_factory=list)

    def merge(self, other: "ScanReport") -> "ScanReport":
        return ScanReport(
            self.params,
            self.total_enumerated + other.total_enumerated,
            self.rigid_count + other.rigid_count,
            self.rigid_nonzero + other.rigid_nonzero,
            self.violations + other.violations,
        )

    def to_json(self) -> dict:
        p = self.params
        return {
            "preamble": PREAMBLE,
            "params": {
                "half_dim": p.half_dim,
                "max_points": p.max_points,
                "weight_bound": p.weight_bound,
                "dedupe_negation": p.dedupe_negation,
            },
            "k": p.k,
            "total_enumerated": self.total_enumerated,
            "rigid_count": self.rigid_count,
            "rigid_nonzero_count": len(self.rigid_nonzero),
            "rigid_nonzero": [
                {"dataset": d.to_json(), "constant": c.to_json()} for d, c in self.rigid_nonzero
            ],
            "violations": [d.to_json() for d in self.violations],
        }


def point_universe(p: ScanParams) -> list[FixedPoint]:
    values = [w for w in range(-p.weight_bound, p.weight_bound + 1) if w]
    pts = [
        FixedPoint(sign, ws)
        for sign in (-1, 1)
        for ws in combinations_with_replacement(values, p.half_dim)
    ]
    return sorted(pts)


def _reducible(points: tuple[FixedPoint, ...]) -> bool:
    seen: dict[tuple[int, ...], int] = {}
    for pt in points:
        s = seen.setdefault(pt.weights, pt.sign)
        if s != pt.sign:
            return True
    return False


def _keep_under_negation(d: FixedPointData) -> bool:
    # representative of {d, -d}: the larger canonical tuple, which prefers positive weights
    return d.points >= negate_action(d).points


def enumerate_chunk(p: ScanParams, index: int, universe: list[FixedPoint] | None = None) -> Iterator[FixedPointData]:
    """Datasets whose smallest point is ``universe[index]``, in canonical order."""
    if universe is None:
        universe = point_universe(p)
    first = universe[index]
    rest = universe[index:]
    for m in range(1, p.max_points + 1):
        for tail in combinations_with_replacement(rest, m - 1):
            pts = (first,) + tail
            if _reducible(pts):
                continue
            d = FixedPointData(p.half_dim, pts)
            if p.dedupe_negation and not _keep_under_negation(d):
                continue
            yield d


def enumerate_datasets(p: ScanParams) -> Iterator[FixedPointData]:
    """Every reduced canonical dataset with 1..max_points points, each exactly once."""
    universe = point_universe(p)
    for i in range(len(universe)):
        yield from enumerate_chunk(p, i, universe)


class _Prefilter:
    """Cheap necessary condition for rigidity: the low-order q-series is constant."""

    def __init__(self, order: int):
        self.order = order
        self._cache: dict[FixedPoint, object] = {}

    def _series(self, pt: FixedPoint):
        s = self._cache.get(pt)
        if s is None:
            s = rf_series(point_term(pt), self.order)
            if pt.sign < 0:
                s = -s
            self._cache[pt] = s
        return s

    def may_be_rigid(self, d: FixedPointData) -> bool:
        total = None
        for pt in d.points:
            s = self._series(pt)
            total = s if total is None else total + s
        return all(e == 0 for e in total.nonzero_exponents())


def _scan_chunk(args) -> ScanReport:
    p, index = args
    universe = point_universe(p)
    pre = _Prefilter(order=2 * p.weight_bound)
    report = ScanReport(p)
    for d in enumerate_chunk(p, index, universe):
        report.total_enumerated += 1
        if not pre.may_be_rigid(d):
            continue
        res = rigidity_check(d)
        if not res.rigid:
            continue
        report.rigid_count += 1
        if res.constant:
            report.rigid_nonzero.append((d, res.constant))
            if d.m <= p.k:
                report.violations.append(d)
    return report


def kosniowski_scan(
    p: ScanParams,
    jobs: int = 1,
    progress: Callable[[str], None] | None = None,
) -> ScanReport:
    """Scan every dataset in range; chunks (one per leading point) merge in fixed order."""
    n_chunks = len(point_universe(p))
    tasks = [(p, i) for i in range(n_chunks)]
    report = ScanReport(p)
    if jobs <= 1:
        results = map(_scan_chunk, tasks)
        for i, part in enumerate(results, 1):
            report = report.merge(part)
            if progress:
                progress(f"chunk {i}/{n_chunks}: {report.total_enumerated} enumerated, {report.rigid_count} rigid")
        return report
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for i, part in enumerate(pool.map(_scan_chunk, tasks, chunksize=1), 1):
            report = report.merge(part)
            if progress:
                progress(f"chunk {i}/{n_chunks}: {report.total_enumerated} enumerated, {report.rigid_count} rigid")
    return report


def chi_two_census(p: ScanParams, jobs: int = 1) -> list[tuple[int, FixedPointData]]:
    """Rigid nonzero data with exactly two fixed points, tagged by half dimension."""
    if p.max_points != 2:
        raise ValueError("the census runs with max_points = 2")
    report = kosniowski_scan(p, jobs=jobs)
    return [(p.half_dim, d) for d, _ in report.rigid_nonzero if d.m == 2]


def stderr_progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)
