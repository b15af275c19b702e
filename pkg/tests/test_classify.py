import random
from fractions import Fraction

import pytest

from afrokhlin import (
    ActionSpec,
    FiniteActionError,
    PeriodicTail,
    RankPair,
    classification_report,
    condense,
    extreme_trace_count,
    fixture,
    gap,
    outer_verdict,
    strict_rokhlin_verdict,
    tracial_rokhlin_verdict,
)
from specgen import random_pair, random_spec


def test_car1_verdicts():
    r = classification_report(fixture("car1"))
    assert r.strict_rokhlin.is_yes
    assert r.tracial_rokhlin.is_yes
    assert r.outer.is_yes
    assert r.crossed_product_uhf.is_yes
    assert r.crossed_product_supernatural.as_dict() == {2: float("inf")}
    assert r.extreme_trace_count == 1


def test_car2_verdicts():
    r = classification_report(fixture("car2"))
    assert r.strict_rokhlin.is_no
    assert r.tracial_rokhlin.is_yes
    assert r.outer.is_yes
    assert r.crossed_product_simple.is_yes
    assert r.crossed_product_uhf.is_no
    assert r.extreme_trace_count == 1


def test_car3_verdicts():
    r = classification_report(fixture("car3"))
    assert r.strict_rokhlin.is_no
    assert r.tracial_rokhlin.is_no
    assert r.outer.is_yes
    assert r.crossed_product_uhf.is_no
    assert r.extreme_trace_count == 2
    w = r.tracial_rokhlin.witness
    assert w["m"] == 1
    assert w["lower"] > Fraction(1, 4)


def test_notcar_verdicts():
    r = classification_report(fixture("notcar"))
    assert r.tracial_rokhlin.is_yes
    assert r.strict_rokhlin.is_no
    assert r.outer.is_yes
    assert r.tracial_rokhlin.witness["tail_gap_max"] == Fraction(1, 3)


def test_strict_symmetric_period_entry():
    spec = ActionSpec("mix", (), PeriodicTail((RankPair(2, 2), RankPair(3, 0))))
    assert strict_rokhlin_verdict(spec).is_yes


def test_strict_no_witness_is_checkable():
    rng = random.Random(91)
    for _ in range(150):
        spec = random_spec(rng)
        v = strict_rokhlin_verdict(spec)
        if v.is_no:
            beyond = v.witness["none_beyond"]
            for n in range(beyond + 1, beyond + 40):
                assert gap(spec, n) != 0
            for i in v.witness["symmetric_indices"]:
                assert gap(spec, i) == 0


def test_outer_no_for_trivial_tail():
    spec = ActionSpec("inner", (), PeriodicTail((RankPair(2, 0),)))
    v = outer_verdict(spec)
    assert v.is_no
    assert v.witness["index"] == 0
    spec2 = ActionSpec("inner2", (RankPair(1, 1),), PeriodicTail((RankPair(2, 0),)))
    assert outer_verdict(spec2).witness["index"] == 1


def test_finite_action_rejected():
    finite = ActionSpec("finite", (RankPair(1, 0),), None)
    with pytest.raises(FiniteActionError):
        classification_report(finite)
    with pytest.raises(FiniteActionError):
        strict_rokhlin_verdict(finite)


def test_trace_count_follows_tracial():
    assert extreme_trace_count(fixture("car2")) == 1
    assert extreme_trace_count(fixture("car3")) == 2
    assert extreme_trace_count(fixture("car1")) == 1


def check_lattice(report):
    strict = report.strict_rokhlin
    tracial = report.tracial_rokhlin
    outer = report.outer
    assert not strict.is_unknown and not tracial.is_unknown and not outer.is_unknown
    if strict.is_yes:
        assert tracial.is_yes
    if tracial.is_yes:
        assert outer.is_yes
    assert outer.decision == report.crossed_product_simple.decision
    assert strict.decision == report.crossed_product_uhf.decision
    assert (report.extreme_trace_count == 1) == tracial.is_yes
    assert (report.extreme_trace_count == 2) == tracial.is_no
    if report.crossed_product_uhf.is_yes:
        assert report.crossed_product_supernatural is not None


def test_implication_lattice_small():
    rng = random.Random(17)
    for _ in range(200):
        check_lattice(classification_report(random_spec(rng)))


def condensed_within_prefix(spec, m, n):
    new_prefix = spec.prefix[:m] + (condense(spec, m, n),) + spec.prefix[n:]
    return ActionSpec(spec.name + "-condensed", new_prefix, spec.tail)


def test_verdicts_stable_under_condensation():
    rng = random.Random(19)
    done = 0
    while done < 150:
        spec = random_spec(rng)
        n0 = len(spec.prefix)
        if n0 < 2:
            continue
        done += 1
        m = rng.randint(0, n0 - 2)
        n = rng.randint(m + 1, n0)
        other = condensed_within_prefix(spec, m, n)
        a, b = classification_report(spec), classification_report(other)
        assert a.strict_rokhlin.decision == b.strict_rokhlin.decision
        assert a.tracial_rokhlin.decision == b.tracial_rokhlin.decision
        assert a.outer.decision == b.outer.decision
        assert a.extreme_trace_count == b.extreme_trace_count


def test_verdicts_stable_under_prefix_perturbation():
    rng = random.Random(29)
    for _ in range(150):
        spec = random_spec(rng)
        extra = tuple(random_pair(rng) for _ in range(rng.randint(1, 3)))
        other = ActionSpec(spec.name + "-padded", extra + spec.prefix, spec.tail)
        a, b = classification_report(spec), classification_report(other)
        assert a.strict_rokhlin.decision == b.strict_rokhlin.decision
        assert a.tracial_rokhlin.decision == b.tracial_rokhlin.decision
        assert a.outer.decision == b.outer.decision


def test_tracial_unknown_at_tiny_cutoff_then_decided():
    from afrokhlin import AffinePowerTail

    tail = AffinePowerTail(B=3, A=1, alpha=1, beta=-3, gamma=0, delta=3)
    spec = ActionSpec("slow", (), tail)
    shallow = tracial_rokhlin_verdict(spec, cutoff=1)
    assert shallow.is_unknown
    assert shallow.witness["cutoff"] == 1
    deep = tracial_rokhlin_verdict(spec, cutoff=64)
    assert deep.is_no
