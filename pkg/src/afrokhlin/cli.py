"""Command line front end.

Exit codes: 0 decided, 2 input error, 3 a verdict stayed unknown at the
cutoff, 4 domain precondition failed (non-free action).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from .actions import (
    ActionSpec,
    FactorRangeError,
    FiniteActionError,
    InvalidActionSpec,
    spec_from_json,
)
from .cantor import (
    InvalidCover,
    InvalidGSet,
    NotFreeError,
    cover_from_json,
    default_cover,
    greedy_tower,
    gset_from_json,
    tower_to_json,
)
from .citations import cite
from .classify import UndecidedError, classification_report
from .fixtures import FIXTURE_NAMES, fixture
from .ktheory import (
    FgAbPresentation,
    K0Element,
    fgab_colimit,
    flip,
    is_equal,
    is_positive,
    is_totally_ordered,
    is_zero,
)
from .products import DEFAULT_CUTOFF, condense, gap_product
from .report import (
    classification_json,
    classification_text,
    element_json,
    envelope,
    jsonify,
    presentation_json,
    trace_vector_json,
    verdict_json,
    weight_str,
)
from .traces import UniqueTraceError, extreme_trace_vector, invariant_trace_vector

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNKNOWN = 3
EXIT_DOMAIN = 4


def _default_cutoff() -> int:
    env = os.environ.get("AFROKHLIN_CUTOFF")
    if env is None:
        return DEFAULT_CUTOFF
    try:
        value = int(env)
    except ValueError:
        raise InvalidActionSpec(f"AFROKHLIN_CUTOFF must be an integer, got {env!r}")
    if value < 1:
        raise InvalidActionSpec("AFROKHLIN_CUTOFF must be positive")
    return value


def resolve_spec(arg: str) -> ActionSpec:
    if arg in FIXTURE_NAMES:
        return fixture(arg)
    path = Path(arg)
    if not path.exists():
        raise InvalidActionSpec(
            f"{arg!r} is neither a built-in fixture ({', '.join(FIXTURE_NAMES)}) "
            "nor an existing spec file"
        )
    with open(path, "r", encoding="utf-8") as fh:
        return spec_from_json(json.load(fh))


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    elif not args.quiet:
        print(text)


_ELEMENT_RE = re.compile(r"^(-?\d+),(-?\d+)@(\d+)$")


def parse_element(text: str) -> K0Element:
    m = _ELEMENT_RE.match(text.strip())
    if not m:
        raise InvalidActionSpec(
            f"malformed element {text!r}; expected 'a,b@stage' like '1,-1@1'"
        )
    return K0Element(stage=int(m.group(3)), a=int(m.group(1)), b=int(m.group(2)))


def cmd_classify(args) -> int:
    spec = resolve_spec(args.spec)
    report = classification_report(spec, args.cutoff)
    _emit(args, classification_json(report), classification_text(report))
    return EXIT_UNKNOWN if report.has_unknown else EXIT_OK


def cmd_ktheory(args) -> int:
    spec = resolve_spec(args.spec)
    el = parse_element(args.element)
    doc = envelope("ktheory", spec, args.cutoff)
    section: dict = {"element": element_json(el), "query": args.query}
    lines = [f"element ({el.a}, {el.b}) at stage {el.stage} on {spec.name!r}"]
    unknown = False
    if args.query == "positive":
        pos = is_positive(spec, el, args.cutoff)
        neg = is_positive(spec, -el, args.cutoff)
        section["positive"] = verdict_json(pos)
        section["negative_positive"] = verdict_json(neg)
        lines.append(f"- positive: {pos.decision}")
        lines.append(f"- negative of it positive: {neg.decision}")
        unknown = pos.is_unknown or neg.is_unknown
    elif args.query == "equal-zero":
        zero = is_zero(spec, el)
        section["equal_zero"] = zero
        lines.append(f"- equals the zero class: {'yes' if zero else 'no'}")
    else:  # flip
        flipped = flip(el)
        section["flipped"] = element_json(flipped)
        section["equal_to_input"] = is_equal(spec, flipped, el)
        section["equal_to_negation"] = is_equal(spec, flipped, -el)
        lines.append(f"- dual flip: ({flipped.a}, {flipped.b}) at stage {flipped.stage}")
        lines.append(f"- flip equals input: {'yes' if section['equal_to_input'] else 'no'}")
        lines.append(
            f"- flip equals negation: {'yes' if section['equal_to_negation'] else 'no'}"
        )
    total = is_totally_ordered(spec)
    section["totally_ordered"] = verdict_json(total)
    lines.append(f"- K0 of the crossed product totally ordered: {total.decision}")
    doc["ktheory"] = section
    _emit(args, doc, "\n".join(lines))
    return EXIT_UNKNOWN if (unknown or total.is_unknown) else EXIT_OK


def cmd_traces(args) -> int:
    spec = resolve_spec(args.spec)
    if args.extreme == "inv":
        tv = invariant_trace_vector(spec, args.stage)
        which = "invariant"
    else:
        tv = extreme_trace_vector(spec, int(args.extreme), args.stage, args.cutoff)
        which = f"extreme{args.extreme}"
    doc = envelope("traces", spec, args.cutoff)
    doc["traces"] = {"which": which, "vector": trace_vector_json(tv)}
    text = (
        f"{which} trace weights of {spec.name!r} at stage {tv.stage}: "
        f"r = {weight_str(tv.r)}, s = {weight_str(tv.s)}"
    )
    _emit(args, doc, text)
    return EXIT_OK


_RANGE_RE = re.compile(r"^(\d+)\.\.(\d+)$")


def cmd_condense(args) -> int:
    spec = resolve_spec(args.spec)
    m = _RANGE_RE.match(args.range.strip())
    if not m:
        raise InvalidActionSpec(f"malformed range {args.range!r}; expected 'm..n'")
    lo, hi = int(m.group(1)), int(m.group(2))
    pair = condense(spec, lo, hi)
    doc = envelope("condense", spec, None)
    doc["condense"] = {
        "range": [lo, hi],
        "pair": [pair.p, pair.q],
        "size": pair.size,
        "gap": jsonify(pair.gap),
        "gap_product_check": jsonify(gap_product(spec, lo, hi)),
        "citations": list(cite("condensation")),
    }
    text = (
        f"factors {lo + 1}..{hi} of {spec.name!r} condense to ({pair.p}, {pair.q}) "
        f"in M_{pair.size} with gap ratio {pair.gap}"
    )
    _emit(args, doc, text)
    return EXIT_OK


def bratteli_dot(spec: ActionSpec, stages: int) -> str:
    lines = ["digraph bratteli {", "  rankdir=TB;"]
    for n in range(1, stages + 1):
        t = spec.total_size(n)
        lines.append(f'  L{n} [label="{t}"];')
        lines.append(f'  R{n} [label="{t}"];')
    for n in range(2, stages + 1):
        f = spec.factor(n)
        lines.append(f'  L{n - 1} -> L{n} [label="{f.p}"];')
        lines.append(f'  R{n - 1} -> R{n} [label="{f.p}"];')
        lines.append(f'  L{n - 1} -> R{n} [label="{f.q}"];')
        lines.append(f'  R{n - 1} -> L{n} [label="{f.q}"];')
    lines.append("}")
    return "\n".join(lines)


def cmd_bratteli(args) -> int:
    spec = resolve_spec(args.spec)
    if args.stages < 1:
        raise InvalidActionSpec("--stages must be >= 1")
    if args.format != "dot":
        raise InvalidActionSpec(f"unsupported format {args.format!r}; only 'dot'")
    spec.factor(args.stages)  # raises early for finite actions that are too short
    dot = bratteli_dot(spec, args.stages)
    if args.json:
        doc = envelope("bratteli", spec, None)
        doc["bratteli"] = {"stages": args.stages, "format": "dot", "dot": dot}
        print(json.dumps(doc, indent=2))
    elif not args.quiet:
        print(dot)
    return EXIT_OK


def _parse_r_sequence(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise InvalidActionSpec(f"malformed r-sequence {text!r}; expected 'r1,r2,...'")
    if not values:
        raise InvalidActionSpec("r-sequence must be nonempty")
    if any(r < 1 for r in values):
        raise InvalidActionSpec("every r must be >= 1")
    return values


def cmd_torsion(args) -> int:
    if args.m < 1:
        raise InvalidActionSpec("--m must be >= 1")
    rs = _parse_r_sequence(args.r)
    doc = envelope("torsion", None, None)
    if args.notor:
        # K1 stage maps are isomorphisms of Z; K0 stages are copies of Z^2,
        # so the colimit is torsion-free whatever the stage maps are.
        k1 = fgab_colimit(FgAbPresentation(1), [[[1]] for _ in rs])
        doc["torsion_family"] = {
            "variant": "torsion_free",
            "m": args.m,
            "r": list(rs),
            "k1": presentation_json(k1),
            "k0": {
                "torsion_free": True,
                "stage_groups": "Z^2",
                "citations": list(cite("torsion-free-family")),
            },
            "citations": list(cite("torsion-free-family")),
        }
        text = (
            f"torsion-free family (m={args.m}, r={list(rs)}): "
            f"K1 = {k1}, K0 torsion-free (colimit of Z^2 stages)"
        )
        unknown = False
    else:
        initial = FgAbPresentation(1, (2**args.m,))
        maps = [[[2 * r + 1, 0], [0, 1]] for r in rs]
        k0 = fgab_colimit(initial, maps)
        doc["torsion_family"] = {
            "variant": "torsion",
            "m": args.m,
            "r": list(rs),
            "k0": presentation_json(k0),
            "k0_torsion_subgroup": (
                " (+) ".join(f"Z/{d}" for d in k0.torsion) if k0.torsion else "0"
            ),
            "k1": {"value": "0", "citations": list(cite("torsion-family-k0"))},
            "citations": list(cite("torsion-family-k0")),
        }
        text = (
            f"torsion family (m={args.m}, r={list(rs)}): K0 = {k0}, "
            f"torsion subgroup Z/{2**args.m}, K1 = 0"
        )
        unknown = False
    _emit(args, doc, text)
    return EXIT_UNKNOWN if unknown else EXIT_OK


def cmd_cantor(args) -> int:
    with open(args.gset, "r", encoding="utf-8") as fh:
        gs = gset_from_json(json.load(fh))
    if args.cover:
        with open(args.cover, "r", encoding="utf-8") as fh:
            cover = cover_from_json(json.load(fh), gs)
    else:
        cover = default_cover(gs)
    tower = greedy_tower(gs, cover)
    doc = envelope("cantor", None, None)
    doc["cantor"] = {
        "elements": list(gs.elements),
        "group_order": gs.order,
        "tower": tower_to_json(gs, tower),
        "citations": list(cite("cantor-tower")),
    }
    base = ", ".join(sorted(gs.elements[x] for x in tower.base))
    text = f"tower base of size {len(tower.base)}: {{{base}}}"
    _emit(args, doc, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--cutoff",
        type=int,
        default=None,
        help=f"tail certification depth (default {DEFAULT_CUTOFF}, env AFROKHLIN_CUTOFF)",
    )
    shared.add_argument("--json", action="store_true", help="emit a JSON report")
    shared.add_argument("--quiet", action="store_true", help="suppress text output")

    parser = argparse.ArgumentParser(
        prog="afrokhlin",
        description=(
            "classify product-type order-two symmetries of infinite matrix tensor "
            "products, compute crossed-product K-theory and traces, and build "
            "Rokhlin towers for free finite group actions"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[shared], help="full verdict sheet")
    p.add_argument("spec", help="fixture name or spec JSON file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("ktheory", parents=[shared], help="K0 element queries")
    p.add_argument("spec")
    p.add_argument("--element", required=True, help="a,b@stage, e.g. 1,-1@1")
    p.add_argument(
        "--query", required=True, choices=("positive", "equal-zero", "flip")
    )
    p.set_defaults(func=cmd_ktheory)

    p = sub.add_parser("traces", parents=[shared], help="trace simplex weights")
    p.add_argument("spec")
    p.add_argument("--stage", type=int, required=True)
    p.add_argument("--extreme", required=True, choices=("0", "1", "inv"))
    p.set_defaults(func=cmd_traces)

    p = sub.add_parser("condense", parents=[shared], help="collapse a factor block")
    p.add_argument("spec")
    p.add_argument("--range", required=True, help="m..n collapses factors m+1..n")
    p.set_defaults(func=cmd_condense)

    p = sub.add_parser("bratteli", parents=[shared], help="stage diagram as DOT")
    p.add_argument("spec")
    p.add_argument("--stages", type=int, required=True)
    p.add_argument("--format", default="dot", choices=("dot",))
    p.set_defaults(func=cmd_bratteli)

    p = sub.add_parser(
        "torsion", parents=[shared], help="K-theory of the torsion example family"
    )
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", required=True, help="comma-separated positive integers")
    p.add_argument(
        "--notor",
        action="store_true",
        help="use the torsion-free variant (K1 = Z, torsion-free K0)",
    )
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("cantor", parents=[shared], help="Rokhlin tower for a G-set")
    p.add_argument("gset", help="G-set JSON file")
    p.add_argument("--cover", default=None, help="cover JSON file (default: singletons)")
    p.set_defaults(func=cmd_cantor)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cutoff is None:
            args.cutoff = _default_cutoff()
        elif args.cutoff < 1:
            raise InvalidActionSpec("--cutoff must be positive")
        return args.func(args)
    except NotFreeError as exc:
        g, x = exc.witness
        print(f"error: {exc} (witness g={g}, x={x})", file=sys.stderr)
        return EXIT_DOMAIN
    except json.JSONDecodeError as exc:
        print(
            f"error: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return EXIT_INPUT
    except UndecidedError as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (
        InvalidActionSpec,
        InvalidGSet,
        InvalidCover,
        FiniteActionError,
        FactorRangeError,
        UniqueTraceError,
        OSError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
