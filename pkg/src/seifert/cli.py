"""Command-line front end.

Commands: normalize, eq, bound, reverse, info, conjecture,
census gen, census check.  Default output is human-readable text;
``--json`` switches to a single JSON document whose field names mirror
the library types.

Exit codes: 0 success, 1 usage or parse error, 2 validation failure,
3 census violation found.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .census import (
    CensusFormatError,
    ComparisonReport,
    compare,
    enumerate_nonorientable_closed,
    ingest_census,
)
from .complexity import (
    conjectured_complexity,
    sharper_bound_note,
    upper_bound,
)
from .core import (
    ComplexityBound,
    SeifertParams,
    boundary_profile,
    euler_char_base,
    is_closed,
    is_orientable,
    orbifold_summary,
    validate,
)
from .normal_form import normalize, reverse_orientation
from .notation import ParseError, format_params, parse_params

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_VIOLATION = 3


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the interface
    # reserves 2 for validation failures, so remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _CliError(EXIT_USAGE, f"{self.prog}: error: {message}")


def _parse_valid(text: str) -> SeifertParams:
    try:
        params = parse_params(text)
    except ParseError as exc:
        raise _CliError(EXIT_USAGE, str(exc)) from exc
    problems = validate(params)
    if problems:
        raise _CliError(
            EXIT_INVALID,
            "invalid parameters:\n  " + "\n  ".join(problems))
    return params


def _bound_doc(bound: ComplexityBound) -> dict:
    return {
        "value": bound.value,
        "case_tag": bound.case_tag.value,
        "exact": bound.exact,
        "label": bound.label,
    }


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(lines))


def _cmd_normalize(args) -> int:
    params = _parse_valid(args.params)
    result = format_params(normalize(params))
    _emit(args, {"params": args.params, "normalized": result}, [result])
    return EXIT_OK


def _cmd_eq(args) -> int:
    left = normalize(_parse_valid(args.left))
    right = normalize(_parse_valid(args.right))
    same = left == right
    doc = {
        "equivalent": same,
        "normalized_left": format_params(left),
        "normalized_right": format_params(right),
    }
    _emit(args, doc, ["equivalent" if same else "not equivalent"])
    return EXIT_OK


def _cmd_bound(args) -> int:
    params = _parse_valid(args.params)
    P = normalize(params)
    bound = upper_bound(P)
    note = sharper_bound_note(P)
    doc = {"params": args.params, "normalized": format_params(P),
           **_bound_doc(bound), "note": note}
    lines = [
        f"normalized: {format_params(P)}",
        f"value: {bound.value}",
        f"case: {bound.case_tag.value}",
        f"exact: {'yes' if bound.exact else 'no'}",
    ]
    if bound.label:
        lines.append(f"label: {bound.label}")
    if note:
        lines.append(note)
    _emit(args, doc, lines)
    return EXIT_OK


def _cmd_reverse(args) -> int:
    params = _parse_valid(args.params)
    try:
        result = format_params(reverse_orientation(params))
    except ValueError as exc:
        raise _CliError(EXIT_INVALID, str(exc)) from exc
    _emit(args, {"params": args.params, "reversed": result}, [result])
    return EXIT_OK


def _cmd_info(args) -> int:
    params = _parse_valid(args.params)
    P = normalize(params)
    profile = boundary_profile(P)
    orbifold = orbifold_summary(P)
    doc = {
        "params": args.params,
        "normalized": format_params(P),
        "orientable": is_orientable(P),
        "closed": is_closed(P),
        "euler_char_base": euler_char_base(P),
        "boundary_profile": asdict(profile),
        "orbifold_summary": asdict(orbifold),
    }
    cone = ",".join(f"({p},{q})" for p, q in orbifold.cone_points) or "none"
    lines = [
        f"normalized: {format_params(P)}",
        f"orientable: {'yes' if doc['orientable'] else 'no'}",
        f"closed: {'yes' if doc['closed'] else 'no'}",
        f"base euler characteristic: {doc['euler_char_base']}",
        f"boundary: {profile.tori} tori, {profile.klein_regular} regular "
        f"Klein bottles, {profile.klein_with_exceptional} Klein bottles with "
        f"exceptional fibres ({profile.exceptional_annuli} exceptional annuli)",
        f"base orbifold: genus {orbifold.genus} "
        f"({'orientable' if orbifold.orientable_base else 'non-orientable'}), "
        f"cone points {cone}, {orbifold.reflector_circles} reflector circles, "
        f"{orbifold.reflector_arcs} reflector arcs, "
        f"{orbifold.underlying_boundary_components} boundary components, "
        f"{orbifold.minus_decorations} '-' decorations",
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def _cmd_conjecture(args) -> int:
    params = _parse_valid(args.params)
    try:
        value = conjectured_complexity(params)
    except ValueError as exc:
        raise _CliError(EXIT_INVALID, str(exc)) from exc
    if value is None:
        note = ("not applicable: recognized reducible fibration, "
                "outside the scope of the conjecture")
    else:
        note = None
    doc = {"params": args.params,
           "normalized": format_params(normalize(params)),
           "conjectured_complexity": value, "note": note}
    _emit(args, doc, [note if value is None else f"conjectured complexity: {value}"])
    return EXIT_OK


def _census_entry_doc(params, bound) -> dict:
    return {"params": format_params(params), **_bound_doc(bound)}


def _cmd_census_gen(args) -> int:
    entries = enumerate_nonorientable_closed(args.cmax)
    if args.json:
        text = json.dumps({"cmax": args.cmax, "count": len(entries),
                           "entries": [_census_entry_doc(P, bd)
                                       for P, bd in entries]},
                          indent=2) + "\n"
    else:
        lines = [f"# closed non-orientable census, bound <= {args.cmax} "
                 f"({len(entries)} entries)",
                 "# params\tvalue\tcase_tag\texact\tlabel"]
        for P, bound in entries:
            lines.append(f"{format_params(P)}\t{bound.value}\t"
                         f"{bound.case_tag.value}\t"
                         f"{'yes' if bound.exact else 'no'}\t"
                         f"{bound.label or '-'}")
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _report_doc(report: ComparisonReport) -> dict:
    return {
        "rows": [{
            "name": row.name,
            "normalized": format_params(row.normalized),
            "recorded": row.recorded,
            "bound": _bound_doc(row.bound),
            "status": row.status,
        } for row in report.rows],
        "summary": {
            "rows": len(report.rows),
            "sharp": report.sharp,
            "overestimates": len(report.overestimates),
            "violations": report.violations,
        },
        "notes": list(report.notes),
    }


def _cmd_census_check(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as handle:
            records = ingest_census(handle)
    except OSError as exc:
        raise _CliError(EXIT_USAGE, f"cannot read {args.file}: {exc}") from exc
    except CensusFormatError as exc:
        raise _CliError(EXIT_INVALID, f"{args.file}: {exc}") from exc
    report = compare(records, args.cmax)
    if args.json:
        print(json.dumps(_report_doc(report), indent=2))
    else:
        for row in report.rows:
            print(f"{row.name}\t{format_params(row.normalized)}\t"
                  f"recorded={row.recorded}\tbound={row.bound.value}\t"
                  f"{row.status}")
        print(f"rows: {len(report.rows)}  sharp: {report.sharp}  "
              f"overestimates: {len(report.overestimates)}  "
              f"violations: {report.violations}")
        for row in report.overestimates:
            print(f"overestimate: {row.name} [{row.bound.case_tag.value}] "
                  f"{row.status}")
        for note in report.notes:
            print(f"note: {note}")
    return EXIT_VIOLATION if report.violations else EXIT_OK


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="seifert",
        description="Invariants, canonical forms and complexity bounds "
                    "of Seifert fibre spaces in bracket notation.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true",
                       help="emit a JSON document instead of text")
        p.set_defaults(func=func)
        return p

    p = add("normalize", _cmd_normalize, "print the canonical form")
    p.add_argument("params")

    p = add("eq", _cmd_eq,
            "test fibre-preserving equivalence of two parameter sets")
    p.add_argument("left")
    p.add_argument("right")

    p = add("bound", _cmd_bound, "complexity upper bound with case tag")
    p.add_argument("params")

    p = add("reverse", _cmd_reverse,
            "canonical form of the orientation-reversed space")
    p.add_argument("params")

    p = add("info", _cmd_info,
            "orientability, closedness, boundary and base orbifold")
    p.add_argument("params")

    p = add("conjecture", _cmd_conjecture,
            "conjectured exact complexity (closed non-orientable)")
    p.add_argument("params")

    census_parser = sub.add_parser("census", help="census tools")
    census_sub = census_parser.add_subparsers(dest="census_command",
                                              required=True)

    p = census_sub.add_parser("gen",
                              help="enumerate the closed non-orientable "
                                   "census up to a bound budget")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cmax", type=int, required=True)
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_census_gen)

    p = census_sub.add_parser("check",
                              help="compare the bound against a census TSV")
    p.add_argument("--json", action="store_true")
    p.add_argument("--file", required=True)
    p.add_argument("--cmax", type=int, default=None)
    p.set_defaults(func=_cmd_census_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
