"""Fixed-point data of a circle action with isolated fixed points.

A dataset is the half dimension ``n`` plus a list of fixed points, each
carrying ``n`` nonzero integer weights and an orientation sign ``+1``/``-1``.
Values are canonical on construction: weights sorted within a point, points
sorted by ``(sign, weights)``.
"""
from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable

__all__ = [
    "DatasetError",
    "FixedPoint",
    "FixedPointData",
    "WeightSplit",
    "validate",
    "split_weights",
    "reduce",
    "negate_action",
    "load_dataset",
    "dump_dataset",
]


class DatasetError(ValueError):
    """Raised for fixed-point data that violates the model's invariants."""


@dataclass(frozen=True, order=True)
class FixedPoint:
    sign: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DatasetError(f"sign must be +1 or -1, got {self.sign!r}")
        ws = tuple(self.weights)
        for w in ws:
            if not isinstance(w, int) or isinstance(w, bool):
                raise DatasetError(f"weights must be integers, got {w!r}")
            if w == 0:
                raise DatasetError("zero weight at a fixed point")
        object.__setattr__(self, "weights", tuple(sorted(ws)))

    @property
    def neg_count(self) -> int:
        return sum(1 for w in self.weights if w < 0)

    @property
    def pos_count(self) -> int:
        return len(self.weights) - self.neg_count

    def negated(self) -> "FixedPoint":
        return FixedPoint(self.sign, tuple(-w for w in self.weights))

    def to_json(self) -> dict:
        return {"weights": list(self.weights), "sign": self.sign}


@dataclass(frozen=True)
class FixedPointData:
    half_dim: int
    points: tuple[FixedPoint, ...] = ()

    def __post_init__(self):
        if not isinstance(self.half_dim, int) or isinstance(self.half_dim, bool) or self.half_dim < 1:
            raise DatasetError(f"half_dim must be a positive integer, got {self.half_dim!r}")
        pts = tuple(self.points)
        for p in pts:
            if not isinstance(p, FixedPoint):
                raise DatasetError(f"expected FixedPoint, got {type(p).__name__}")
            if len(p.weights) != self.half_dim:
                raise DatasetError(
                    f"fixed point has {len(p.weights)} weights, expected half_dim={self.half_dim}"
                )
        object.__setattr__(self, "points", tuple(sorted(pts)))

    @property
    def m(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        return self.half_dim

    @property
    def k(self) -> int:
        return self.half_dim // 2

    def max_abs_weight(self) -> int:
        return max((abs(w) for p in self.points for w in p.weights), default=0)

    def __add__(self, other: "FixedPointData") -> "FixedPointData":
        """Disjoint union of fixed-point data."""
        if other.half_dim != self.half_dim:
            raise DatasetError("cannot combine datasets of different dimension")
        return FixedPointData(self.half_dim, self.points + other.points)

    def flip_signs(self) -> "FixedPointData":
        """Reverse every orientation sign (the datum of the oppositely oriented manifold)."""
        return FixedPointData(self.half_dim, tuple(FixedPoint(-p.sign, p.weights) for p in self.points))

    def to_json(self) -> dict:
        return {"half_dim": self.half_dim, "points": [p.to_json() for p in self.points]}

    def digest(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    @classmethod
    def from_pairs(cls, half_dim: int, pairs: Iterable[tuple[Iterable[int], int]]) -> "FixedPointData":
        return cls(half_dim, tuple(FixedPoint(sign, tuple(ws)) for ws, sign in pairs))


@dataclass(frozen=True)
class WeightSplit:
    positives: tuple[int, ...]
    negatives: tuple[int, ...]

    @property
    def pos_count(self) -> int:
        return len(self.positives)

    @property
    def neg_count(self) -> int:
        return len(self.negatives)


_TOP_KEYS = {"half_dim", "points"}
_POINT_KEYS = {"weights", "sign"}


def _strict_int(v: Any, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise DatasetError(f"{what} must be an integer, got {v!r}")
    return v


def validate(raw: Any) -> FixedPointData:
    """Check and canonicalize a candidate dataset.

    Accepts a :class:`FixedPointData` (re-canonicalized) or a mapping in the
    JSON file shape ``{"half_dim": n, "points": [{"weights": [...], "sign": s}]}``.
    """
    if isinstance(raw, FixedPointData):
        return FixedPointData(raw.half_dim, raw.points)
    if not isinstance(raw, dict):
        raise DatasetError("dataset must be a JSON object")
    extra = set(raw) - _TOP_KEYS
    if extra:
        raise DatasetError(f"unknown dataset keys: {sorted(extra)}")
    missing = _TOP_KEYS - set(raw)
    if missing:
        raise DatasetError(f"missing dataset keys: {sorted(missing)}")
    half_dim = _strict_int(raw["half_dim"], "half_dim")
    if half_dim < 1:
        raise DatasetError(f"half_dim must be at least 1, got {half_dim}")
    if not isinstance(raw["points"], list):
        raise DatasetError("points must be an array")
    points = []
    for idx, entry in enumerate(raw["points"]):
        if not isinstance(entry, dict):
            raise DatasetError(f"point {idx} must be an object")
        extra = set(entry) - _POINT_KEYS
        if extra:
            raise DatasetError(f"unknown keys in point {idx}: {sorted(extra)}")
        if _POINT_KEYS - set(entry):
            raise DatasetError(f"point {idx} needs both 'weights' and 'sign'")
        weights = entry["weights"]
        if not isinstance(weights, list):
            raise DatasetError(f"weights of point {idx} must be an array")
        ws = tuple(_strict_int(w, f"weight of point {idx}") for w in weights)
        sign = _strict_int(entry["sign"], f"sign of point {idx}")
        points.append(FixedPoint(sign, ws))
    return FixedPointData(half_dim, tuple(points))


def split_weights(p: FixedPoint) -> WeightSplit:
    return WeightSplit(
        positives=tuple(w for w in p.weights if w > 0),
        negatives=tuple(w for w in p.weights if w < 0),
    )


def reduce(d: FixedPointData) -> FixedPointData:
    """Cancel pairs of points with equal weights and opposite signs.

    The outcome only depends on the net signed count per weight multiset, so
    the order in which pairs are removed does not matter.
    """
    net: Counter = Counter()
    for p in d.points:
        net[p.weights] += p.sign
    points = []
    for ws, c in net.items():
        sign = 1 if c > 0 else -1
        points.extend(FixedPoint(sign, ws) for _ in range(abs(c)))
    return FixedPointData(d.half_dim, tuple(points))


def negate_action(d: FixedPointData) -> FixedPointData:
    """Data of the inverse action: every weight changes sign."""
    return FixedPointData(d.half_dim, tuple(p.negated() for p in d.points))


def load_dataset(path: str | Path) -> FixedPointData:
    with open(path, encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DatasetError(f"{path}: not valid JSON ({exc})") from None
    return validate(raw)


def dump_dataset(d: FixedPointData, path: str | Path | None = None) -> str:
    text = json.dumps(d.to_json(), sort_keys=True, indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
