import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from afrokhlin import (
    ActionSpec,
    AffinePowerTail,
    FactorRangeError,
    FiniteActionError,
    InvalidActionSpec,
    PeriodicTail,
    RankPair,
    SupernaturalNumber,
    fixture,
    normalize,
    spec_from_json,
    spec_to_json,
    supernatural_of_algebra,
)
from specgen import random_spec

INF = math.inf


def test_normalize_examples():
    assert normalize(RankPair(1, 3)) == RankPair(3, 1)
    assert normalize(RankPair(3, 1)) == RankPair(3, 1)
    assert normalize(RankPair(2, 2)) == RankPair(2, 2)


def test_zero_size_factor_rejected():
    with pytest.raises(InvalidActionSpec):
        RankPair(0, 0)
    with pytest.raises(InvalidActionSpec):
        RankPair(-1, 2)


@given(st.integers(min_value=0, max_value=50), st.integers(min_value=0, max_value=50))
def test_normalize_idempotent(p, q):
    if p + q == 0:
        return
    once = normalize(RankPair(p, q))
    assert normalize(once) == once
    assert once.p >= once.q


def test_prefix_normalized_on_ingestion():
    spec = ActionSpec("x", (RankPair(1, 4),), PeriodicTail((RankPair(0, 2),)))
    assert spec.factor(1) == RankPair(4, 1)
    assert spec.factor(2) == RankPair(2, 0)


def test_factor_at_car2():
    # factor 3 acts on M_8 with ranks (2**2 + 1, 2**2 - 1)
    f = fixture("car2").factor(3)
    assert (f.p, f.q) == (5, 3)
    assert f.size == 8


def test_factor_at_car3():
    f = fixture("car3").factor(2)
    assert (f.p, f.q) == (3, 1)
    assert f.size == 4


def test_factor_at_deep_periodic():
    spec = ActionSpec("deep", (), PeriodicTail((RankPair(1, 1),)))
    assert spec.factor(10**6) == RankPair(1, 1)


def test_factor_at_finite_range():
    spec = ActionSpec("finite", (RankPair(2, 1), RankPair(3, 0)), None)
    assert spec.factor(2) == RankPair(3, 0)
    with pytest.raises(FactorRangeError):
        spec.factor(3)
    with pytest.raises(FactorRangeError):
        spec.factor(0)


def test_factor_agrees_with_prefix_then_cycles():
    rng = random.Random(7)
    for _ in range(50):
        spec = random_spec(rng)
        if not isinstance(spec.tail, PeriodicTail):
            continue
        n0 = len(spec.prefix)
        for i, pair in enumerate(spec.prefix):
            assert spec.factor(i + 1) == pair.normalized()
        period = spec.tail.period
        for n in range(n0 + 1, n0 + 2 * period + 1):
            assert spec.factor(n) == spec.factor(n + period)


def test_affine_tail_validation():
    with pytest.raises(InvalidActionSpec):
        AffinePowerTail(B=1, A=2, alpha=1, beta=0, gamma=1, delta=0)
    with pytest.raises(InvalidActionSpec):
        AffinePowerTail(B=2, A=2, alpha=2, beta=0, gamma=1, delta=0)
    with pytest.raises(InvalidActionSpec):
        AffinePowerTail(B=2, A=2, alpha=1, beta=3, gamma=1, delta=-2)
    with pytest.raises(InvalidActionSpec):
        # first tail factor would have a negative rank
        AffinePowerTail(B=2, A=2, alpha=2, beta=-5, gamma=0, delta=5)
    with pytest.raises(InvalidActionSpec):
        AffinePowerTail(B=2, A=0, alpha=0, beta=0, gamma=0, delta=0)


def test_supernatural_of_car1():
    assert supernatural_of_algebra(fixture("car1")).as_dict() == {2: INF}


def test_supernatural_of_car2():
    assert supernatural_of_algebra(fixture("car2")).as_dict() == {2: INF}


def test_supernatural_of_notcar():
    assert supernatural_of_algebra(fixture("notcar")).as_dict() == {2: 1, 3: INF}


def test_supernatural_constant_size():
    spec = ActionSpec("three", (), PeriodicTail((RankPair(2, 1),)))
    assert supernatural_of_algebra(spec).as_dict() == {3: INF}
    spec12 = ActionSpec("twelve", (), PeriodicTail((RankPair(11, 1),)))
    assert supernatural_of_algebra(spec12).as_dict() == {2: INF, 3: INF}


def test_supernatural_affine_primes():
    tail = AffinePowerTail(B=2, A=3, alpha=2, beta=0, gamma=1, delta=0)
    spec = ActionSpec("mixed", (RankPair(5, 0),), tail)
    assert supernatural_of_algebra(spec).as_dict() == {2: INF, 3: INF, 5: 1}


def test_supernatural_requires_tail():
    with pytest.raises(FiniteActionError):
        supernatural_of_algebra(ActionSpec("finite", (RankPair(1, 0),), None))


def test_supernatural_multiplication():
    a = SupernaturalNumber.from_dict({2: 3, 3: INF})
    b = SupernaturalNumber.from_dict({2: INF, 5: 1})
    assert (a * b).as_dict() == {2: INF, 3: INF, 5: 1}
    assert a * SupernaturalNumber.one() == a


def test_supernatural_of_int():
    assert SupernaturalNumber.of_int(360).as_dict() == {2: 3, 3: 2, 5: 1}
    assert SupernaturalNumber.of_int(1).as_dict() == {}


def test_json_round_trip_fixtures():
    for name in ("car1", "car2", "car3", "notcar"):
        spec = fixture(name)
        assert spec_from_json(spec_to_json(spec)) == spec


def test_json_round_trip_random():
    rng = random.Random(11)
    for _ in range(100):
        spec = random_spec(rng)
        assert spec_from_json(spec_to_json(spec)) == spec


def test_json_rejects_unknown_tail_kind():
    with pytest.raises(InvalidActionSpec):
        spec_from_json({"name": "x", "prefix": [], "tail": {"kind": "generator"}})


def test_json_rejects_bad_pairs():
    with pytest.raises(InvalidActionSpec):
        spec_from_json({"name": "x", "prefix": [[1]], "tail": {"kind": "none"}})
    with pytest.raises(InvalidActionSpec):
        spec_from_json(
            {"name": "x", "prefix": [], "tail": {"kind": "periodic", "pairs": []}}
        )
    with pytest.raises(InvalidActionSpec):
        spec_from_json({"name": "", "prefix": [], "tail": {"kind": "none"}})
