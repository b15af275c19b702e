"""Decision procedures for the classification of product-type symmetries.

All three headline properties are conditions on the tail alone ("infinitely
many factors such that ..."), so each verdict is decided exactly from the
tail rule; the prefix only influences witnesses.  Verdicts are three-valued:
yes and no always carry a checkable witness, unknown carries the cutoff that
was exhausted.  Unknown never collapses to no.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .actions import (
    ActionSpec,
    FiniteActionError,
    PeriodicTail,
    SupernaturalNumber,
    supernatural_of_algebra,
)
from .citations import cite
from .intervals import round_down, round_up
from .products import (
    DEFAULT_CUTOFF,
    TailPositive,
    TailUnknown,
    TailZero,
    affine_isolated_zero,
    gap_product_tail,
    last_zero_gap_index,
)

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


class UndecidedError(RuntimeError):
    """A computation required a decided verdict but got unknown."""


@dataclass(frozen=True)
class Verdict:
    decision: str
    witness: dict
    citations: tuple[str, ...]

    def __post_init__(self):
        if self.decision not in (YES, NO, UNKNOWN):
            raise ValueError(f"bad decision {self.decision!r}")

    @property
    def is_yes(self) -> bool:
        return self.decision == YES

    @property
    def is_no(self) -> bool:
        return self.decision == NO

    @property
    def is_unknown(self) -> bool:
        return self.decision == UNKNOWN


def _require_infinite(spec: ActionSpec):
    if spec.tail is None:
        raise FiniteActionError(
            f"action {spec.name!r} has only finitely many factors; "
            "classification verdicts are defined for infinite actions only"
        )


def _prefix_symmetric_indices(spec: ActionSpec) -> list[int]:
    return [i + 1 for i, p in enumerate(spec.prefix) if p.symmetric]


def strict_rokhlin_verdict(spec: ActionSpec) -> Verdict:
    """Yes iff infinitely many factors have gap ratio zero."""
    _require_infinite(spec)
    n0 = len(spec.prefix)
    tail = spec.tail
    anchors = cite("strict-rokhlin-criterion", "rank-exchange")
    if isinstance(tail, PeriodicTail):
        for i, pair in enumerate(tail.pairs):
            if pair.symmetric:
                return Verdict(
                    YES,
                    {
                        "kind": "recurring_symmetric_factor",
                        "period_position": i + 1,
                        "first_index": n0 + i + 1,
                        "pair": [pair.p, pair.q],
                    },
                    anchors,
                )
    elif tail.alpha == tail.gamma and tail.beta == 0:
        return Verdict(
            YES,
            {"kind": "identically_symmetric_tail", "first_index": n0 + 1},
            anchors,
        )
    sym = _prefix_symmetric_indices(spec)
    if not isinstance(tail, PeriodicTail):
        j = affine_isolated_zero(tail)
        if j is not None:
            sym.append(n0 + j)
    return Verdict(
        NO,
        {
            "kind": "finitely_many_symmetric_factors",
            "symmetric_indices": sym,
            "none_beyond": max([n0] + sym),
        },
        anchors,
    )


def tracial_rokhlin_verdict(spec: ActionSpec, cutoff: int = DEFAULT_CUTOFF) -> Verdict:
    """Yes iff every tail gap product vanishes.

    The condition only depends on the tail rule: finitely many zero gaps never
    make every tail product vanish, so the decision reduces to a recurring
    zero gap or a divergent sum of (1 - gap) along the tail.
    """
    _require_infinite(spec)
    n0 = len(spec.prefix)
    tail = spec.tail
    anchors = cite("tracial-rokhlin-criterion")
    if isinstance(tail, PeriodicTail):
        tail_vanishes = any(p.gap < 1 for p in tail.pairs)
    else:
        tail_vanishes = abs(tail.alpha - tail.gamma) < tail.A
    if tail_vanishes:
        certificate = gap_product_tail(spec, n0, cutoff)
        assert isinstance(certificate, TailZero)
        witness: dict = {"kind": "vanishing_tail_products"}
        if certificate.zero_index is not None:
            witness["recurring_zero_gap_index"] = certificate.zero_index
        else:
            witness["divergence"] = certificate.divergence
        if isinstance(tail, PeriodicTail):
            gaps = [p.gap for p in tail.pairs]
            if all(g < 1 for g in gaps):
                witness["tail_gap_max"] = max(gaps)
        else:
            witness["tail_gap_limit"] = Fraction(abs(tail.alpha - tail.gamma), tail.A)
        return Verdict(YES, witness, anchors)

    m = last_zero_gap_index(spec)
    result = gap_product_tail(spec, m, cutoff)
    if isinstance(result, TailUnknown):
        return Verdict(
            UNKNOWN,
            {
                "kind": "cutoff_exhausted",
                "cutoff": cutoff,
                "m": m,
                "partial_upper": round_up(result.upper),
            },
            anchors,
        )
    assert isinstance(result, TailPositive)
    # witness endpoints are rounded outward, so they still bracket the limit
    return Verdict(
        NO,
        {
            "kind": "positive_tail_product",
            "m": m,
            "lower": round_down(result.lower),
            "upper": round_up(result.upper),
        },
        anchors,
    )


def outer_verdict(spec: ActionSpec) -> Verdict:
    """Yes iff infinitely many factors have a nonzero smaller rank.

    When no, only finitely many factors move anything, the symmetry is
    conjugation by a finite tensor of sign unitaries, and the crossed product
    splits into two copies of the ambient algebra.
    """
    _require_infinite(spec)
    n0 = len(spec.prefix)
    tail = spec.tail
    anchors = cite("outerness-criterion")
    if isinstance(tail, PeriodicTail):
        for i, pair in enumerate(tail.pairs):
            if pair.q > 0:
                return Verdict(
                    YES,
                    {
                        "kind": "recurring_nonzero_smaller_rank",
                        "period_position": i + 1,
                        "first_index": n0 + i + 1,
                        "pair": [pair.p, pair.q],
                    },
                    anchors,
                )
    else:
        # Each raw rank is affine in B**j: eventually unbounded when its
        # leading coefficient is positive, constant otherwise.  The smaller
        # normalized rank is eventually positive iff both are.
        p_eventual = None if tail.alpha > 0 else tail.beta
        q_eventual = None if tail.gamma > 0 else tail.delta
        if (p_eventual is None or p_eventual > 0) and (
            q_eventual is None or q_eventual > 0
        ):
            eventual = p_eventual if q_eventual is None else q_eventual
            return Verdict(
                YES,
                {
                    "kind": "recurring_nonzero_smaller_rank",
                    "eventual_smaller_rank": (
                        "unbounded" if eventual is None else eventual
                    ),
                },
                anchors,
            )
        # Otherwise validation forces the constant side to be identically
        # zero, so no tail factor has a nonzero smaller rank at all.
    last = max((i + 1 for i, p in enumerate(spec.prefix) if p.q > 0), default=0)
    return Verdict(
        NO,
        {
            "kind": "inner_beyond",
            "index": last,
            "crossed_product": "splits into two copies of the ambient algebra",
        },
        cite("outerness-criterion", "inner-splitting"),
    )


def crossed_product_simple_verdict(spec: ActionSpec) -> Verdict:
    """Simplicity of the crossed product; same decision as outerness."""
    outer = outer_verdict(spec)
    return Verdict(outer.decision, outer.witness, cite("outerness-criterion"))


def crossed_product_uhf_verdict(
    spec: ActionSpec,
) -> tuple[Verdict, SupernaturalNumber | None]:
    """UHF-ness of the crossed product; same decision as strict Rokhlin.

    When yes, the crossed product is the matrix colimit of sizes t(n) and its
    supernatural number equals that of the ambient algebra.
    """
    strict = strict_rokhlin_verdict(spec)
    anchors = cite("strict-rokhlin-criterion", "uhf-supernatural")
    if strict.is_yes:
        sn = supernatural_of_algebra(spec)
        witness = dict(strict.witness)
        witness["supernatural"] = sn
        return Verdict(YES, witness, anchors), sn
    return Verdict(strict.decision, strict.witness, anchors), None


def extreme_trace_count(spec: ActionSpec, cutoff: int = DEFAULT_CUTOFF) -> int | str:
    """1 when every tail gap product vanishes, 2 otherwise."""
    tracial = tracial_rokhlin_verdict(spec, cutoff)
    if tracial.is_yes:
        return 1
    if tracial.is_no:
        return 2
    return UNKNOWN


ALWAYS_TRUE_FACTS: dict[str, tuple[str, ...]] = {
    "action_strictly_approx_representable": cite("strictly-approx-representable"),
    "dual_action_strict_rokhlin": cite("dual-strict-rokhlin"),
    "crossed_product_AF": cite("crossed-product-af"),
}


@dataclass(frozen=True)
class ClassificationReport:
    """Full verdict sheet for one infinite product-type symmetry."""

    spec: ActionSpec
    strict_rokhlin: Verdict
    tracial_rokhlin: Verdict
    outer: Verdict
    crossed_product_simple: Verdict
    crossed_product_uhf: Verdict
    crossed_product_supernatural: SupernaturalNumber | None
    extreme_trace_count: int | str
    cutoff: int

    @property
    def has_unknown(self) -> bool:
        verdicts = (
            self.strict_rokhlin,
            self.tracial_rokhlin,
            self.outer,
            self.crossed_product_simple,
            self.crossed_product_uhf,
        )
        return any(v.is_unknown for v in verdicts) or self.extreme_trace_count == UNKNOWN

    def dual_facts(self) -> dict[str, tuple[str, tuple[str, ...]]]:
        """Derived facts about the dual symmetry, with their anchors."""
        return {
            "dual_action_strictly_approx_representable": (
                self.strict_rokhlin.decision,
                cite("dual-tracial-duality"),
            ),
            "dual_action_tracially_approx_representable": (
                self.tracial_rokhlin.decision,
                cite("dual-tracial-duality"),
            ),
        }


def classification_report(
    spec: ActionSpec, cutoff: int = DEFAULT_CUTOFF
) -> ClassificationReport:
    _require_infinite(spec)
    uhf, sn = crossed_product_uhf_verdict(spec)
    return ClassificationReport(
        spec=spec,
        strict_rokhlin=strict_rokhlin_verdict(spec),
        tracial_rokhlin=tracial_rokhlin_verdict(spec, cutoff),
        outer=outer_verdict(spec),
        crossed_product_simple=crossed_product_simple_verdict(spec),
        crossed_product_uhf=uhf,
        crossed_product_supernatural=sn,
        extreme_trace_count=extreme_trace_count(spec, cutoff),
        cutoff=cutoff,
    )
