"""Command-line front end over JSON subset-family documents.

Exit codes partition outcomes: 0 when the command succeeds and any checked
predicate holds, 1 when a predicate is false or an extension hypothesis
fails, 2 on malformed input or usage errors.  Emitted families are in
canonical ascending order, so outputs are byte-stable across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .sets import (
    CapacityError,
    SubsetFamily,
    Universe,
    WidthMismatchError,
    complement,
    set_notation,
)
from .checks import (
    AxiomReport,
    Violation,
    has_fip,
    is_filter,
    is_filter_base,
    is_free_ultrafilter,
    is_max_filter,
    is_ultrafilter,
)
from .construct import PreconditionError, base_from_family, fep, filter_from_family
from .census import CENSUS_CAP, enumerate_filters, enumerate_ultrafilters
from .cofinite import COFINITE, FINITE, CofiniteSet, frechet_contains


class DocumentError(ValueError):
    """The input file does not match the JSON document schema."""


REPORT_KINDS = {
    "filter": is_filter,
    "base": is_filter_base,
    "ultrafilter": is_ultrafilter,
    "maxfilter": is_max_filter,
    "free": is_free_ultrafilter,
}
CHECK_KINDS = (*REPORT_KINDS, "fip", "frechet")
EXTEND_TARGETS = ("base", "filter", "ultrafilter")


def parse_family(text: str) -> tuple[Universe, SubsetFamily]:
    """Decode a ``{"universe": [...], "family": [[...], ...]}`` document."""
    data = _load_object(text)
    if set(data) != {"universe", "family"}:
        raise DocumentError(
            'family document must have exactly the keys "universe" and "family"'
        )
    labels = data["universe"]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise DocumentError('"universe" must be a list of element names')
    universe = Universe(tuple(labels))
    rows = data["family"]
    if not isinstance(rows, list):
        raise DocumentError('"family" must be a list of subsets')
    known = set(labels)
    members = []
    for row in rows:
        if not isinstance(row, list) or not all(isinstance(x, str) for x in row):
            raise DocumentError("each family member must be a list of element names")
        for name in row:
            if name not in known:
                raise DocumentError(f"unknown element name {name!r}")
        members.append(universe.subset(row))
    return universe, SubsetFamily(members, universe.size)


def parse_cofinite(text: str) -> CofiniteSet:
    """Decode a ``{"cofinite": {"mode": ..., "support": [...]}}`` document."""
    data = _load_object(text)
    if set(data) != {"cofinite"}:
        raise DocumentError('cofinite document must have exactly the key "cofinite"')
    body = data["cofinite"]
    if not isinstance(body, dict) or set(body) != {"mode", "support"}:
        raise DocumentError(
            'the "cofinite" value must be an object with keys "mode" and "support"'
        )
    if body["mode"] not in (FINITE, COFINITE):
        raise DocumentError(f'"mode" must be "{FINITE}" or "{COFINITE}"')
    support = body["support"]
    if not isinstance(support, list):
        raise DocumentError('"support" must be a list of naturals')
    try:
        return CofiniteSet(tuple(support), body["mode"])
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def _load_object(text: str) -> dict:
    data = json.loads(text)
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    return data


def family_document(universe: Universe, family: SubsetFamily) -> str:
    """Serialize to the canonical on-disk form (ascending member order)."""
    doc = {
        "universe": list(universe.labels),
        "family": [list(universe.names(member)) for member in family.members],
    }
    return json.dumps(doc, indent=2) + "\n"


def describe_failure(report: AxiomReport, universe: Universe) -> str:
    """Human-readable violation text with witnesses as element names."""
    axiom = report.failed_axiom
    witness = report.witness
    show = lambda s: set_notation(universe, s)
    if axiom is Violation.NOT_INTERSECTION_CLOSED and len(witness) == 2:
        return f"intersection of {show(witness[0])} and {show(witness[1])} is not a member"
    if axiom is Violation.NOT_UPWARD_CLOSED and len(witness) == 2:
        return f"{show(witness[0])} is a member but its superset {show(witness[1])} is not"
    if axiom is Violation.DICHOTOMY_FAILS:
        comp = complement(universe, witness[0])
        return f"neither {show(witness[0])} nor its complement {show(comp)} is a member"
    if axiom is Violation.NOT_MAXIMAL:
        return f"adjoining {show(witness[0])} yields a strictly larger filter"
    if axiom is Violation.FINITE_MEMBER:
        return f"finite member {show(witness[0])} is present"
    return axiom.value


def cmd_check(args: argparse.Namespace) -> int:
    text = Path(args.input).read_text(encoding="utf-8")
    if args.kind == "frechet":
        member = frechet_contains(parse_cofinite(text))
        print("true" if member else "false")
        return 0 if member else 1
    universe, family = parse_family(text)
    if args.kind == "fip":
        verdict = has_fip(family)
        print("true" if verdict else "false")
        return 0 if verdict else 1
    report = REPORT_KINDS[args.kind](family, universe)
    if report:
        print("true")
        return 0
    print(f"false: {describe_failure(report, universe)}")
    return 1


def cmd_extend(args: argparse.Namespace) -> int:
    text = Path(args.input).read_text(encoding="utf-8")
    universe, family = parse_family(text)
    if not family.member_bits:
        raise PreconditionError("the family is empty")
    if not has_fip(family):
        raise PreconditionError("finite intersection property fails")
    if args.to == "base":
        result = base_from_family(family)
    elif args.to == "filter":
        result = filter_from_family(family, universe)
    else:
        trace = None
        if args.trace:
            trace = lambda considered, adjoined: print(
                f"considered {set_notation(universe, considered)}; "
                f"adjoined {set_notation(universe, adjoined)}",
                file=sys.stderr,
            )
        result = fep(family, universe, trace=trace)
    rendered = family_document(universe, result)
    if args.output:
        Path(args.output).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= CENSUS_CAP:
        raise DocumentError(f"--n must be between 1 and {CENSUS_CAP}, got {args.n}")
    universe = Universe(tuple(f"e{i}" for i in range(args.n)))
    if args.kind == "filters":
        result = enumerate_filters(universe)
    else:
        result = enumerate_ultrafilters(universe)
    print(result.count)
    if not args.count_only:
        for family in result.families:
            inner = ", ".join(set_notation(universe, m) for m in family.members)
            print("{" + inner + "}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="setfilters",
        description="Check, extend, and enumerate filters over finite ground sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="test a predicate on a family document")
    check.add_argument("--kind", choices=CHECK_KINDS, required=True)
    check.add_argument("--input", required=True, help="path to a JSON document")
    check.set_defaults(func=cmd_check)

    extend = sub.add_parser("extend", help="extend a family and emit the result")
    extend.add_argument("--to", choices=EXTEND_TARGETS, required=True)
    extend.add_argument("--input", required=True, help="path to a JSON document")
    extend.add_argument("--output", help="write the result here instead of stdout")
    extend.add_argument(
        "--trace",
        action="store_true",
        help="print each greedy extension step to stderr",
    )
    extend.set_defaults(func=cmd_extend)

    enum = sub.add_parser("enumerate", help="list filters or ultrafilters")
    enum.add_argument("--n", type=int, required=True, help="universe size")
    enum.add_argument("--kind", choices=("filters", "ultrafilters"), required=True)
    enum.add_argument("--count-only", action="store_true")
    enum.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (
        DocumentError,
        CapacityError,
        WidthMismatchError,
        json.JSONDecodeError,
        OSError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
