"""Exact gap ratios, their finite products, and certified tail products.

Every factor ``(p, q)`` carries a gap ratio ``(p - q) / (p + q)`` in [0, 1]
(after normalization).  The master invariants of the whole toolkit are the
finite products of gap ratios over factor ranges and their limits along the
tail.  A tail product is zero exactly when some later factor has gap zero or
the sum of ``1 - gap`` diverges; each supported tail family admits a closed
form divergence test, so the zero/positive decision is exact.  Positive tail
products are certified by rational intervals: an explicit partial product
times a geometric remainder bound.

No floating point enters any result; see `afrokhlin.intervals`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .actions import (
    ActionSpec,
    AffinePowerTail,
    FiniteActionError,
    PeriodicTail,
    RankPair,
)
from .intervals import RatInterval

DEFAULT_CUTOFF = 64


@dataclass(frozen=True)
class TailZero:
    """The tail product is exactly zero.

    Exactly one witness field is set: ``zero_index`` points at a factor with
    gap zero beyond the range start, ``divergence`` names the comparison test
    certifying that the sum of (1 - gap) diverges.
    """

    zero_index: int | None = None
    divergence: str | None = None

    def __post_init__(self):
        if (self.zero_index is None) == (self.divergence is None):
            raise ValueError("TailZero needs exactly one witness")


@dataclass(frozen=True)
class TailPositive:
    """Certified enclosure 0 < lower <= true tail product <= upper <= 1."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if not (0 < self.lower <= self.upper <= 1):
            raise ValueError(f"invalid positive enclosure [{self.lower}, {self.upper}]")

    @property
    def interval(self) -> RatInterval:
        return RatInterval(self.lower, self.upper)


@dataclass(frozen=True)
class TailUnknown:
    """Cutoff exhausted before a certificate applied; partial enclosure only."""

    cutoff: int
    lower: Fraction
    upper: Fraction

    @property
    def interval(self) -> RatInterval:
        return RatInterval(self.lower, self.upper)


TailProductResult = TailZero | TailPositive | TailUnknown


def gap(spec: ActionSpec, n: int) -> Fraction:
    """Gap ratio (p - q)/(p + q) of the normalized factor at index n."""
    return spec.factor(n).gap


def gap_product(spec: ActionSpec, m: int, n: int) -> Fraction:
    """Product of the gap ratios of factors m+1 .. n; empty ranges give 1."""
    if m < 0:
        raise ValueError(f"range start must be >= 0, got {m}")
    if n < m:
        raise ValueError(f"range end {n} precedes start {m}")
    out = Fraction(1)
    for i in range(m + 1, n + 1):
        out *= spec.factor(i).gap
    return out


def condense(spec: ActionSpec, m: int, n: int) -> RankPair:
    """Collapse factors m+1 .. n into one equivalent factor.

    The result (P, Q) has P + Q equal to the product of the collapsed matrix
    sizes and P - Q equal to the product of the collapsed rank differences,
    so its gap ratio is the product of the collapsed gap ratios.
    """
    if m < 0 or n <= m:
        raise ValueError(f"condense needs a nonempty range 0 <= m < n, got {m}..{n}")
    size = 1
    diff = 1
    for i in range(m + 1, n + 1):
        f = spec.factor(i)
        size *= f.size
        diff *= f.p - f.q
    return RankPair((size + diff) // 2, (size - diff) // 2)


def affine_isolated_zero(tail: AffinePowerTail) -> int | None:
    """Tail position j of the unique factor with gap zero, if one exists.

    The raw rank difference is c*B**j + d with c = alpha - gamma and
    d = 2*beta; it vanishes for at most one j because B**j is injective.
    """
    c = tail.alpha - tail.gamma
    d = 2 * tail.beta
    if c == 0:
        return None
    if (-d) % c != 0:
        return None
    x = (-d) // c
    if x < tail.B:
        return None
    j = 0
    while x % tail.B == 0:
        x //= tail.B
        j += 1
    return j if x == 1 else None


def first_zero_gap_after(spec: ActionSpec, stage: int) -> int | None:
    """Smallest factor index n > stage with gap ratio zero, or None."""
    n0 = len(spec.prefix)
    for i in range(max(stage, 0) + 1, n0 + 1):
        if spec.prefix[i - 1].symmetric:
            return i
    tail = spec.tail
    if tail is None:
        return None
    if isinstance(tail, PeriodicTail):
        symmetric = {i for i, p in enumerate(tail.pairs) if p.symmetric}
        if not symmetric:
            return None
        start = max(stage + 1, n0 + 1)
        for n in range(start, start + tail.period):
            if (n - n0 - 1) % tail.period in symmetric:
                return n
        return None
    c = tail.alpha - tail.gamma
    if c == 0 and tail.beta == 0:
        return max(stage + 1, n0 + 1)
    j = affine_isolated_zero(tail)
    if j is not None and n0 + j > stage:
        return n0 + j
    return None


def last_zero_gap_index(spec: ActionSpec) -> int:
    """Largest factor index with gap zero, or 0 if none exists.

    Only meaningful when finitely many zero gaps exist (the caller decides
    that from the tail rule first).
    """
    last = max(
        (i + 1 for i, p in enumerate(spec.prefix) if p.symmetric), default=0
    )
    if isinstance(spec.tail, AffinePowerTail):
        j = affine_isolated_zero(spec.tail)
        if j is not None:
            last = max(last, len(spec.prefix) + j)
    return last


def gap_product_tail(
    spec: ActionSpec, m: int, cutoff: int = DEFAULT_CUTOFF
) -> TailProductResult:
    """Decide the limit of gap_product(spec, m, n) as n grows.

    Returns TailZero with a witness (a later zero gap, or a named divergence
    test for the sum of 1 - gap), TailPositive with a certified rational
    enclosure, or TailUnknown when the geometric certificate does not engage
    within ``cutoff`` tail factors.
    """
    if m < 0:
        raise ValueError(f"range start must be >= 0, got {m}")
    if cutoff < 1:
        raise ValueError("cutoff must be positive")
    if spec.tail is None:
        raise FiniteActionError("tail products need an infinite action")
    n0 = len(spec.prefix)
    z = first_zero_gap_after(spec, m)
    if z is not None:
        return TailZero(zero_index=z)

    tail = spec.tail
    if isinstance(tail, PeriodicTail):
        small = [p.gap for p in tail.pairs if p.gap < 1]
        if small:
            worst = max(small)
            return TailZero(
                divergence=(
                    f"a factor with gap ratio {worst} recurs every {tail.period} "
                    f"factors, so the sum of (1 - gap) dominates the divergent "
                    f"constant series with term {1 - worst}"
                )
            )
        value = gap_product(spec, m, max(m, n0))
        return TailPositive(value, value)

    c = tail.alpha - tail.gamma
    if abs(c) < tail.A:
        limit = Fraction(abs(c), tail.A)
        return TailZero(
            divergence=(
                f"gap ratios converge to {limit} < 1, so the sum of (1 - gap) "
                f"dominates the divergent constant series with term {1 - limit}"
            )
        )

    # |c| == A: the smaller rank is eventually the constant e, and beyond the
    # settling point 1 - gap = 2*e / (A * B**j), a geometric series.
    e = tail.delta if tail.gamma == 0 else tail.beta
    j_settle = 1
    while tail.A * tail.B**j_settle < 2 * e:
        j_settle += 1
    if j_settle > cutoff:
        upper = gap_product(spec, m, max(m, n0 + cutoff))
        return TailUnknown(cutoff=cutoff, lower=Fraction(0), upper=upper)
    depth = max(j_settle, m - n0) + cutoff
    end = n0 + depth
    partial = gap_product(spec, m, end)
    remainder = Fraction(2 * e, tail.A * (tail.B - 1) * tail.B**depth)
    return TailPositive(partial * (1 - remainder), partial)


def tail_result_interval(result: TailProductResult) -> RatInterval:
    if isinstance(result, TailZero):
        return RatInterval.exact(0)
    return result.interval
