"""Trace simplex of the crossed product, parametrized through mixing matrices.

A tracial state restricts at stage n to a weight pair (r_n, s_n) with
r_n + s_n = 1, one weight per matrix summand.  Consecutive stages are linked
by the doubly stochastic mixing matrix of the stage gap ratio, and the whole
simplex is swept out by applying the mixing matrix of the certified tail gap
product to an endpoint parameter (r, 1 - r).  When every tail product
vanishes the simplex is a point and only the flip-invariant trace (1/2, 1/2)
exists; extreme-trace queries then refuse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .actions import ActionSpec, FiniteActionError
from .classify import UndecidedError, tracial_rokhlin_verdict
from .intervals import RatInterval
from .products import DEFAULT_CUTOFF, TailUnknown, gap_product_tail, tail_result_interval

Weight = Fraction | RatInterval


class UniqueTraceError(ValueError):
    """Extreme-trace queries are refused when the trace simplex is a point."""


@dataclass(frozen=True)
class TraceVector:
    """Stage weight pair; represents the trace (a, b) -> r*tr(a) + s*tr(b)."""

    stage: int
    r: Weight
    s: Weight

    def __post_init__(self):
        total = RatInterval.hull(self.r) + RatInterval.hull(self.s)
        if 1 not in total:
            raise ValueError(f"weights must sum to 1, got enclosure {total}")


@dataclass(frozen=True)
class MixingMatrix:
    """The doubly stochastic matrix with entries (1 +- lam)/2.

    Multiplicative in lam: the entrywise product of the matrices for lam and
    mu is the matrix for lam * mu, and lam = 1 gives the identity.
    """

    lam: Weight

    def __post_init__(self):
        hull = RatInterval.hull(self.lam)
        if hull.lo < 0 or hull.hi > 1:
            raise ValueError(f"mixing parameter must lie in [0, 1], got {self.lam}")

    @property
    def entries(self) -> tuple[tuple[Weight, Weight], tuple[Weight, Weight]]:
        lam = self.lam
        same = (1 + RatInterval.hull(lam)) / 2
        cross = (1 - RatInterval.hull(lam)) / 2
        if isinstance(lam, Fraction) or isinstance(lam, int):
            same, cross = same.lo, cross.lo
        return ((same, cross), (cross, same))

    def apply(self, r: Weight, s: Weight) -> tuple[Weight, Weight]:
        (same, cross), _ = self.entries
        new_r = RatInterval.hull(same) * r + RatInterval.hull(cross) * s
        new_s = RatInterval.hull(cross) * r + RatInterval.hull(same) * s
        if new_r.is_exact and new_s.is_exact:
            return new_r.lo, new_s.lo
        return new_r, new_s


def mixing_matrix(lam: Weight) -> MixingMatrix:
    return MixingMatrix(lam)


def invariant_trace_vector(spec: ActionSpec, n: int) -> TraceVector:
    """The flip-fixed trace weights: exactly (1/2, 1/2) at every stage."""
    if n < 0:
        raise ValueError("stage must be >= 0")
    return TraceVector(n, Fraction(1, 2), Fraction(1, 2))


def extreme_trace_vector(
    spec: ActionSpec, extreme: int, n: int, cutoff: int = DEFAULT_CUTOFF
) -> TraceVector:
    """Stage weights of one of the two extreme traces.

    With L the certified tail gap product from stage n, extreme 1 has weights
    ((1 + L)/2, (1 - L)/2) and extreme 0 the swap.  Requires a spec whose
    trace simplex actually has two extreme points.
    """
    if extreme not in (0, 1):
        raise ValueError("extreme must be 0 or 1")
    if n < 0:
        raise ValueError("stage must be >= 0")
    tracial = tracial_rokhlin_verdict(spec, cutoff)
    if tracial.is_yes:
        raise UniqueTraceError(
            f"action {spec.name!r} has a unique tracial state; "
            "only the invariant trace vector exists"
        )
    if tracial.is_unknown:
        raise UndecidedError(
            f"trace count undecided at cutoff {cutoff} for action {spec.name!r}"
        )
    result = gap_product_tail(spec, n, cutoff)
    if isinstance(result, TailUnknown):
        raise UndecidedError(
            f"tail product undecided at cutoff {cutoff} for stage {n}"
        )
    tail = tail_result_interval(result)
    r = (1 + tail) / 2
    s = (1 - tail) / 2
    if r.is_exact:
        r, s = r.lo, s.lo
    if extreme == 1:
        return TraceVector(n, r, s)
    return TraceVector(n, s, r)


def trace_of_element(spec: ActionSpec, el, tv: TraceVector) -> Weight:
    """Pair a stage K0 vector with a stage trace: (r*a + s*b) / t(n)."""
    if el.stage != tv.stage:
        raise ValueError(
            f"stage mismatch: element at {el.stage}, trace vector at {tv.stage}"
        )
    if el.stage > 0 and spec.tail is None and el.stage > len(spec.prefix):
        raise FiniteActionError("stage beyond the final factor of a finite action")
    total = spec.total_size(el.stage)
    value = (RatInterval.hull(tv.r) * el.a + RatInterval.hull(tv.s) * el.b) / total
    return value.lo if value.is_exact else value
