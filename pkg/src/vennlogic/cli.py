"""Command-line front end.

Usage:
    vennlogic codify -e "x & y" -v x,y
    vennlogic eval -e "x ^ y" -a "x=0.6;y=0.3" --logic fuzzy
    vennlogic eval -e "x & y" -a "x=0.5,0.3,0.2;y=0.4,0.4,0.2" --logic neutrosophic
    vennlogic table 1 --format csv
    vennlogic table 2 -a "x=0.5,0.3,0.2;y=0.4,0.4,0.2" --order TIF
    vennlogic parts 3
    vennlogic selftest --seed 42

Assignments are name=value entries joined by ';'.  Fuzzy values take a bare
truth (falsehood is its complement) or an explicit "t,f" pair; neutrosophic
values take all three components "T,I,F"; boolean values take 0 or 1.

Exit codes: 0 success, 2 usage or syntax error, 3 numeric precondition
violation, 4 selftest failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .errors import (
    ArityMismatch,
    DisjointnessViolation,
    DomainError,
    LengthMismatch,
    OracleTooLarge,
    ParseError,
    TooManyVariables,
    UnknownVariable,
    VerificationFailure,
)
from .evaluate import (
    Assignment,
    evaluate_operator,
    fuzzy_operator_table,
    neutro_operator_table,
)
from .expr import compile_expr, parse
from .logic_core import FuzzyValue, PrevalenceOrder
from .venn import enumerate_parts

DEFAULT_TABLE2_ASSIGN = "x=0.5,0.3,0.2;y=0.4,0.4,0.2"

_USAGE_ERRORS = (
    ParseError,
    UnknownVariable,
    ArityMismatch,
    LengthMismatch,
    TooManyVariables,
)
_NUMERIC_ERRORS = (
    DomainError,
    DisjointnessViolation,
    OracleTooLarge,
    VerificationFailure,
)


def _round12(x: float) -> float:
    return float(format(x, ".12g"))


def _fmt(x) -> str:
    if x is None:
        return ""
    return format(x, ".12g")


def _value_to_json(v):
    if isinstance(v, FuzzyValue):
        return {"t": _round12(v.t), "f": _round12(v.f)}
    return {"T": _round12(v.T), "I": _round12(v.I), "F": _round12(v.F)}


def _emit_json(payload) -> None:
    print(json.dumps(payload, ensure_ascii=False))


def _emit_csv(header, rows) -> None:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    print(out.getvalue(), end="")


def _emit_markdown(header, rows) -> None:
    print("| " + " | ".join(header) + " |")
    print("|" + "|".join(" --- " for _ in header) + "|")
    for row in rows:
        print("| " + " | ".join(str(c) for c in row) + " |")


def _parse_vars(text: str) -> tuple[str, ...]:
    names = tuple(name.strip() for name in text.split(","))
    if any(not name for name in names):
        raise ParseError(f"bad variable list {text!r}", 0, {"name"})
    return names


def _parse_assignment(text: str, logic: str) -> Assignment:
    names: list[str] = []
    rows: list[list[float]] = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, eq, rhs = chunk.partition("=")
        name = name.strip()
        if not eq or not name:
            raise ParseError(f"bad assignment entry {chunk!r}", 0, {"name=value"})
        try:
            comps = [float(c) for c in rhs.split(",")]
        except ValueError:
            raise ParseError(
                f"variable {name!r}: non-numeric component in {rhs!r}",
                0,
                {"number"},
            ) from None
        names.append(name)
        rows.append(comps)
    if not names:
        raise ParseError("empty assignment", 0, {"name=value"})

    if logic == "neutrosophic":
        for name, comps in zip(names, rows):
            if len(comps) != 3:
                raise ArityMismatch(
                    f"variable {name!r}: neutrosophic values need T,I,F"
                )
        return Assignment.neutrosophic(names, [tuple(r) for r in rows])

    values = []
    for name, comps in zip(names, rows):
        if logic == "boolean":
            if len(comps) != 1 or comps[0] not in (0.0, 1.0):
                raise ArityMismatch(f"variable {name!r}: boolean values are 0 or 1")
            values.append(FuzzyValue.from_truth(comps[0]))
        elif len(comps) == 1:
            if not 0.0 <= comps[0] <= 1.0:
                raise DomainError(
                    f"variable {name!r}: truth {comps[0]!r} outside [0, 1]"
                )
            values.append(FuzzyValue.from_truth(comps[0]))
        elif len(comps) == 2:
            try:
                values.append(FuzzyValue(comps[0], comps[1]))
            except DomainError as exc:
                raise DomainError(f"variable {name!r}: {exc}") from None
        else:
            raise ArityMismatch(
                f"variable {name!r}: fuzzy values take t or t,f"
            )
    return Assignment(tuple(names), tuple(values))


def _ordered_assignment(a: Assignment, var_names) -> Assignment:
    if tuple(var_names) == a.names:
        return a
    missing = [name for name in var_names if name not in a.names]
    extra = [name for name in a.names if name not in var_names]
    if missing or extra:
        raise ArityMismatch(
            "assignment does not match declared variables"
            + (f", missing: {', '.join(missing)}" if missing else "")
            + (f", unexpected: {', '.join(extra)}" if extra else "")
        )
    lookup = dict(zip(a.names, a.values))
    return Assignment(tuple(var_names), tuple(lookup[n] for n in var_names))


def cmd_codify(args) -> int:
    tree = parse(args.expr)
    names = _parse_vars(args.vars)
    spec = compile_expr(tree, names)
    parts = spec.shaded_parts()
    labels = [p.label() for p in parts]
    if args.format == "json":
        _emit_json(
            {
                "expression": args.expr,
                "vars": list(names),
                "n": spec.n,
                "index": spec.shaded,
                "parts": labels,
                "bits": [p.mask for p in parts],
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ("expression", "n", "index", "parts"),
            [(args.expr, spec.n, spec.shaded, " ".join(labels))],
        )
    else:
        print(f"expression: `{args.expr}`  vars: {', '.join(names)}")
        print(f"index: {spec.shaded}")
        _emit_markdown(("part", "bit"), [(p.label(), p.mask) for p in parts])
    return 0


def cmd_eval(args) -> int:
    assignment = _parse_assignment(args.assign, args.logic)
    names = _parse_vars(args.vars) if args.vars else assignment.names
    assignment = _ordered_assignment(assignment, names)
    tree = parse(args.expr)
    spec = compile_expr(tree, names)
    order = PrevalenceOrder.from_string(args.order)
    report = evaluate_operator(spec, assignment, order=order, with_oracle=args.oracle)
    if args.format == "json":
        _emit_json(
            {
                "expression": args.expr,
                "vars": list(names),
                "logic": args.logic,
                "order": str(order),
                "index": spec.shaded,
                "parts": {p.label(): _value_to_json(v) for p, v in report.part_values},
                "aggregate": _value_to_json(report.aggregate),
                "strategy": report.strategy,
                "tau": None if report.tau is None else _round12(report.tau),
                "oracle_delta": None
                if report.oracle_delta is None
                else _round12(report.oracle_delta),
                "partition_residual": _round12(report.partition_residual),
            }
        )
        return 0
    if assignment.kind == "fuzzy":
        header = ("part", "shaded", "t", "f")
        rows = [
            (p.label(), int(spec.is_shaded(p.mask)), _fmt(v.t), _fmt(v.f))
            for p, v in report.part_values
        ]
        rows.append(
            ("aggregate", "", _fmt(report.aggregate.t), _fmt(report.aggregate.f))
        )
    else:
        header = ("part", "shaded", "T", "I", "F")
        rows = [
            (p.label(), int(spec.is_shaded(p.mask)), _fmt(v.T), _fmt(v.I), _fmt(v.F))
            for p, v in report.part_values
        ]
        rows.append(
            (
                "aggregate",
                "",
                _fmt(report.aggregate.T),
                _fmt(report.aggregate.I),
                _fmt(report.aggregate.F),
            )
        )
    if args.format == "csv":
        _emit_csv(header, rows)
    else:
        _emit_markdown(header, rows)
        print(f"strategy: {report.strategy}")
        if report.tau is not None:
            print(f"tau: {_fmt(report.tau)}")
        if report.oracle_delta is not None:
            print(f"oracle delta: {_fmt(report.oracle_delta)}")
    return 0


def cmd_table(args) -> int:
    if args.which == 1:
        rows = fuzzy_operator_table()
        if args.format == "json":
            _emit_json(
                {
                    "table": 1,
                    "row_to_index": [r.index for r in rows],
                    "rows": [
                        {
                            "row": r.row,
                            "index": r.index,
                            "truth": r.truth_poly,
                            "symbol": r.symbol,
                            "name": r.name,
                        }
                        for r in rows
                    ],
                }
            )
        else:
            table = [
                (r.row, r.index, r.truth_poly, r.symbol, r.name) for r in rows
            ]
            header = ("row", "index", "truth", "symbol", "name")
            if args.format == "csv":
                _emit_csv(header, table)
            else:
                _emit_markdown(header, table)
        return 0
    assignment = _parse_assignment(args.assign or DEFAULT_TABLE2_ASSIGN, "neutrosophic")
    order = PrevalenceOrder.from_string(args.order)
    rows = neutro_operator_table(assignment, order)
    if args.format == "json":
        _emit_json(
            {
                "table": 2,
                "assignment": {
                    name: _value_to_json(value)
                    for name, value in zip(assignment.names, assignment.values)
                },
                "order": str(order),
                "row_to_index": [r.index for r in rows],
                "rows": [
                    {
                        "row": r.row,
                        "index": r.index,
                        "name": r.name,
                        "value": _value_to_json(r.value),
                        "strategy": r.strategy,
                        "tau": None if r.tau is None else _round12(r.tau),
                    }
                    for r in rows
                ],
            }
        )
    else:
        table = [
            (
                r.row,
                r.index,
                r.name,
                _fmt(r.value.T),
                _fmt(r.value.I),
                _fmt(r.value.F),
                r.strategy,
                _fmt(r.tau),
            )
            for r in rows
        ]
        header = ("row", "index", "name", "T", "I", "F", "strategy", "tau")
        if args.format == "csv":
            _emit_csv(header, table)
        else:
            _emit_markdown(header, table)
    return 0


def cmd_parts(args) -> int:
    parts = enumerate_parts(args.n)
    if args.format == "json":
        _emit_json(
            {
                "n": args.n,
                "parts": [{"label": p.label(), "mask": p.mask} for p in parts],
            }
        )
    elif args.format == "csv":
        _emit_csv(("label", "mask"), [(p.label(), p.mask) for p in parts])
    else:
        _emit_markdown(("label", "mask"), [(p.label(), p.mask) for p in parts])
    return 0


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    ok = run_selftest(seed=args.seed, inject_failure=args.inject_failure)
    return 0 if ok else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vennlogic",
        description="Codify propositional operators as shaded diagram parts "
        "and evaluate them under boolean, fuzzy, or neutrosophic assignments.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("json", "csv", "markdown"),
            default="json",
            help="output format (default json)",
        )

    codify = sub.add_parser("codify", help="compile an expression to shaded parts")
    codify.add_argument("-e", "--expr", required=True, help="expression text")
    codify.add_argument(
        "-v", "--vars", required=True, help="comma-separated variable order"
    )
    add_format(codify)
    codify.set_defaults(handler=cmd_codify)

    evalp = sub.add_parser("eval", help="evaluate an expression under an assignment")
    evalp.add_argument("-e", "--expr", required=True, help="expression text")
    evalp.add_argument(
        "-v", "--vars", help="variable order (default: assignment order)"
    )
    evalp.add_argument(
        "-a",
        "--assign",
        required=True,
        help="assignment, e.g. \"x=0.6;y=0.3\" or \"x=0.5,0.3,0.2;y=...\"",
    )
    evalp.add_argument(
        "--logic",
        choices=("boolean", "fuzzy", "neutrosophic"),
        default="fuzzy",
    )
    evalp.add_argument(
        "--order",
        choices=("TIF", "ITF", "TFI"),
        default="TIF",
        help="prevalence order, weakest to strongest",
    )
    evalp.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against the brute-force expansion and report the delta",
    )
    add_format(evalp)
    evalp.set_defaults(handler=cmd_eval)

    table = sub.add_parser("table", help="print an operator catalog table")
    table.add_argument("which", type=int, choices=(1, 2))
    table.add_argument(
        "-a",
        "--assign",
        help=f"neutrosophic assignment for table 2 "
        f"(default \"{DEFAULT_TABLE2_ASSIGN}\")",
    )
    table.add_argument(
        "--order", choices=("TIF", "ITF", "TFI"), default="TIF"
    )
    add_format(table)
    table.set_defaults(handler=cmd_table)

    partsp = sub.add_parser("parts", help="list the codification for n variables")
    partsp.add_argument("n", type=int)
    add_format(partsp)
    partsp.set_defaults(handler=cmd_parts)

    selftest = sub.add_parser("selftest", help="run the seeded property suites")
    selftest.add_argument("--seed", type=int, default=0)
    selftest.add_argument(
        "--inject-failure", action="store_true", help=argparse.SUPPRESS
    )
    selftest.set_defaults(handler=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _NUMERIC_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
