import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from afrokhlin import (
    ActionSpec,
    K0Element,
    PeriodicTail,
    RankPair,
    RatInterval,
    UniqueTraceError,
    extreme_trace_vector,
    fixture,
    gap,
    invariant_trace_vector,
    mixing_matrix,
    trace_of_element,
)

unit_fractions = st.fractions(min_value=0, max_value=1, max_denominator=1000)


def entries(m):
    return m.entries


def test_mixing_matrix_examples():
    assert entries(mixing_matrix(Fraction(1))) == ((1, 0), (0, 1))
    h = Fraction(1, 2)
    assert entries(mixing_matrix(Fraction(0))) == ((h, h), (h, h))
    assert entries(mixing_matrix(h)) == (
        (Fraction(3, 4), Fraction(1, 4)),
        (Fraction(1, 4), Fraction(3, 4)),
    )


def test_mixing_matrix_rejects_out_of_range():
    with pytest.raises(ValueError):
        mixing_matrix(Fraction(3, 2))
    with pytest.raises(ValueError):
        mixing_matrix(Fraction(-1, 2))


@settings(max_examples=300, deadline=None)
@given(unit_fractions, unit_fractions)
def test_mixing_matrix_multiplicative(lam, mu):
    (a1, b1), _ = entries(mixing_matrix(lam))
    (a2, b2), _ = entries(mixing_matrix(mu))
    # generic 2x2 product of the two symmetric stochastic matrices
    same = a1 * a2 + b1 * b2
    cross = a1 * b2 + b1 * a2
    assert entries(mixing_matrix(lam * mu)) == ((same, cross), (cross, same))


def test_invariant_vector_is_half_half():
    for name in ("car1", "car2", "car3"):
        for n in (0, 3, 5):
            tv = invariant_trace_vector(fixture(name), n)
            assert (tv.r, tv.s) == (Fraction(1, 2), Fraction(1, 2))


def test_extreme_vector_car3_stage1():
    tv = extreme_trace_vector(fixture("car3"), 1, 1, cutoff=40)
    assert Fraction("0.64439") <= tv.r.lo <= tv.r.hi <= Fraction("0.64440")
    mirror = extreme_trace_vector(fixture("car3"), 0, 1, cutoff=40)
    assert (mirror.r, mirror.s) == (tv.s, tv.r)


def test_extreme_vector_trivial_tail_is_exact():
    # no prefix, trivial tail: the tail product is exactly 1
    spec = ActionSpec("inner", (), PeriodicTail((RankPair(3, 0),)))
    tv = extreme_trace_vector(spec, 1, 0)
    assert (tv.r, tv.s) == (Fraction(1), Fraction(0))
    tv0 = extreme_trace_vector(spec, 0, 0)
    assert (tv0.r, tv0.s) == (Fraction(0), Fraction(1))


def test_extreme_vector_degenerates_before_a_zero_gap():
    # car3 has its only zero gap at index 1, so stage 0 collapses to the center
    tv = extreme_trace_vector(fixture("car3"), 1, 0)
    assert (tv.r, tv.s) == (Fraction(1, 2), Fraction(1, 2))


def test_extreme_vector_refuses_unique_trace():
    with pytest.raises(UniqueTraceError):
        extreme_trace_vector(fixture("car2"), 1, 0)
    with pytest.raises(UniqueTraceError):
        extreme_trace_vector(fixture("car1"), 0, 2)


def test_compatibility_recursion_car3():
    spec = fixture("car3")
    prev = extreme_trace_vector(spec, 1, 0, cutoff=40)
    for n in range(1, 13):
        cur = extreme_trace_vector(spec, 1, n, cutoff=40)
        r, s = mixing_matrix(gap(spec, n)).apply(cur.r, cur.s)
        hull_r = RatInterval.hull(r)
        hull_prev = RatInterval.hull(prev.r)
        assert hull_r.intersects(hull_prev)
        assert hull_r.width <= Fraction(1, 10**9)
        prev = cur


def test_extreme_vectors_converge_to_endpoint():
    spec = fixture("car3")
    lowers = []
    for n in range(1, 13):
        tv = extreme_trace_vector(spec, 1, n, cutoff=40)
        lowers.append(RatInterval.hull(tv.r).lo)
    assert all(b > a for a, b in zip(lowers, lowers[1:]))
    assert lowers[-1] > Fraction(99, 100)


def test_trace_of_element_examples():
    spec = fixture("car3")
    n = 2
    t = spec.total_size(n)  # 2 * 4
    from afrokhlin.traces import TraceVector

    full = trace_of_element(spec, K0Element(n, t, 0), TraceVector(n, Fraction(1), Fraction(0)))
    assert full == 1
    inv = invariant_trace_vector(spec, n)
    assert trace_of_element(spec, K0Element(n, 1, 1), inv) == Fraction(1, t)
    # order unit has trace one under any weight pair
    tv = extreme_trace_vector(spec, 1, n, cutoff=40)
    unit = trace_of_element(spec, K0Element(n, t, t), tv)
    value = RatInterval.hull(unit)
    assert 1 in value and value.width <= Fraction(1, 10**8)


def test_trace_of_eta_car3():
    spec = fixture("car3")
    tv = extreme_trace_vector(spec, 1, 1, cutoff=40)
    value = RatInterval.hull(trace_of_element(spec, K0Element(1, 1, -1), tv))
    assert Fraction("0.1443") <= value.lo <= value.hi <= Fraction("0.1444")


def test_trace_stage_mismatch_rejected():
    spec = fixture("car3")
    tv = invariant_trace_vector(spec, 2)
    with pytest.raises(ValueError):
        trace_of_element(spec, K0Element(3, 1, 0), tv)
