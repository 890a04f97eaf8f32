import json
import random

import pytest
from builders import random_dataset

from txygenus.fixedpoints import (
    DatasetError,
    FixedPoint,
    FixedPointData,
    dump_dataset,
    load_dataset,
    negate_action,
    reduce,
    split_weights,
    validate,
)


def raw(n, pairs, **extra):
    return {"half_dim": n, "points": [{"weights": list(w), "sign": s} for w, s in pairs], **extra}


def test_validate_cp1():
    d = validate(raw(1, [([1], 1), ([-1], 1)]))
    assert d.m == 2
    assert [p.weights for p in d.points] == [(-1,), (1,)]


def test_validate_rejects_zero_weight():
    with pytest.raises(DatasetError, match="zero weight"):
        validate(raw(2, [([0, 1], 1)]))


def test_validate_sorts_weights():
    d = validate(raw(2, [([2, 1], 1)]))
    assert d.points[0].weights == (1, 2)


@pytest.mark.parametrize(
    "bad",
    [
        raw(2, [([1], 1)]),
        raw(1, [([1], 0)]),
        raw(1, [([1], 2)]),
        raw(0, []),
        raw(1, [([1], 1)], extra=3),
        {"half_dim": 1, "points": [{"weights": [1], "sign": 1, "label": "p"}]},
        {"half_dim": 1},
        {"half_dim": True, "points": []},
        {"half_dim": 1, "points": [{"weights": [1.5], "sign": 1}]},
        [1, 2],
    ],
)
def test_validate_errors(bad):
    with pytest.raises(DatasetError):
        validate(bad)


def test_points_sorted_by_sign_then_weights():
    d = validate(raw(1, [([2], 1), ([1], -1), ([-1], 1)]))
    assert [(p.sign, p.weights) for p in d.points] == [(-1, (1,)), (1, (-1,)), (1, (2,))]


def test_validate_idempotent():
    rng = random.Random(3)
    for _ in range(50):
        d = random_dataset(rng)
        once = validate(d.to_json())
        assert validate(once) == once
        assert validate(once.to_json()) == once


@pytest.mark.parametrize(
    "weights, pos, neg",
    [((1, 2), 2, 0), ((-1, 1), 1, 1), ((-2, -1), 0, 2)],
)
def test_split_weights(weights, pos, neg):
    s = split_weights(FixedPoint(1, weights))
    assert (s.pos_count, s.neg_count) == (pos, neg)
    assert s.pos_count + s.neg_count == len(weights)
    assert all(w > 0 for w in s.positives) and all(w < 0 for w in s.negatives)


def test_reduce_examples():
    d = FixedPointData.from_pairs(2, [([1, 2], 1), ([1, 2], -1)])
    assert reduce(d).m == 0
    d = FixedPointData.from_pairs(2, [([1, 2], 1), ([1, 2], 1)])
    assert reduce(d) == d
    d = FixedPointData.from_pairs(1, [([1], 1), ([-1], 1), ([1], -1)])
    assert reduce(d) == FixedPointData.from_pairs(1, [([-1], 1)])


def _reduce_by_random_pairs(d: FixedPointData, rng: random.Random) -> FixedPointData:
    pts = list(d.points)
    while True:
        pairs = [
            (i, j)
            for i in range(len(pts))
            for j in range(i + 1, len(pts))
            if pts[i].weights == pts[j].weights and pts[i].sign != pts[j].sign
        ]
        if not pairs:
            return FixedPointData(d.half_dim, tuple(pts))
        i, j = rng.choice(pairs)
        pts = [p for t, p in enumerate(pts) if t not in (i, j)]


def test_reduce_is_confluent():
    rng = random.Random(11)
    for _ in range(100):
        d = random_dataset(rng, n=rng.randint(1, 2), m=rng.randint(0, 8), bound=2)
        assert _reduce_by_random_pairs(d, rng) == reduce(d)


def test_negate_examples(cp1):
    assert negate_action(cp1) == cp1
    d = FixedPointData.from_pairs(2, [([1, 2], 1)])
    assert negate_action(d) == FixedPointData.from_pairs(2, [([-2, -1], 1)])
    assert negate_action(FixedPointData(3)) == FixedPointData(3)


def test_negate_is_involution():
    rng = random.Random(5)
    for _ in range(100):
        d = random_dataset(rng)
        assert negate_action(negate_action(d)) == d


def test_file_roundtrip(tmp_path):
    d = FixedPointData.from_pairs(2, [([1, 2], 1), ([-1, 1], -1)])
    path = tmp_path / "d.json"
    dump_dataset(d, path)
    assert load_dataset(path) == d
    assert json.loads(path.read_text()) == d.to_json()


def test_load_rejects_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(DatasetError):
        load_dataset(path)


def test_digest_is_stable():
    a = FixedPointData.from_pairs(1, [([1], 1), ([-1], 1)])
    b = FixedPointData.from_pairs(1, [([-1], 1), ([1], 1)])
    assert a.digest() == b.digest()
