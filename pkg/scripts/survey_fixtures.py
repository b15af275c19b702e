#!/usr/bin/env python3
"""Print the verdict sheet for every built-in fixture, plus the headline
K-theory facts about the class (1, -1) at stage 1."""

from afrokhlin import (
    K0Element,
    classification_report,
    fixture,
    flip,
    is_equal,
    is_positive,
    is_zero,
)
from afrokhlin.fixtures import FIXTURE_NAMES

COLUMNS = ("strict", "tracial", "outer", "simple", "uhf", "traces")


def row(name: str) -> list[str]:
    r = classification_report(fixture(name))
    return [
        name,
        r.strict_rokhlin.decision,
        r.tracial_rokhlin.decision,
        r.outer.decision,
        r.crossed_product_simple.decision,
        r.crossed_product_uhf.decision
        + (f" ({r.crossed_product_supernatural})" if r.crossed_product_supernatural else ""),
        str(r.extreme_trace_count),
    ]


def main() -> None:
    rows = [["fixture", *COLUMNS]] + [row(name) for name in FIXTURE_NAMES]
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)))

    print()
    eta = K0Element(1, 1, -1)
    for name in FIXTURE_NAMES:
        spec = fixture(name)
        facts = [
            f"zero={is_zero(spec, eta)}",
            f"flip=-self={is_equal(spec, flip(eta), -eta)}",
            f"positive={is_positive(spec, eta).decision}",
            f"-positive={is_positive(spec, -eta).decision}",
        ]
        print(f"(1,-1)@1 on {name}: " + ", ".join(facts))


if __name__ == "__main__":
    main()
