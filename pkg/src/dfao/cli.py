"""Command-line interface.

Exit codes: 0 for success (and corpus all-PASS / machines equivalent),
1 for analysis or parse errors, corpus failures and non-equivalence,
2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .autfile import parse_raw, serialize
from .automaton import Dfao, are_equivalent, validate
from .corpus import evaluate_all
from .dot import to_dot
from .dyadic import DyadicDistance
from .errors import DfaoError, InstanceTooLarge
from .minimize import intrinsic_automaton
from .opacity import AnalysisReport, PathWitness, analyze_sequence, shortest_inhomogeneous_path
from .oracle import brute_force_opacity, oracle_bound


def _load(path: str) -> tuple[Dfao, tuple[str, ...]]:
    dfao, pruned = validate(parse_raw(Path(path).read_text()))
    if pruned:
        print(
            f"warning: pruned unreachable states: {', '.join(pruned)}",
            file=sys.stderr,
        )
    return dfao, pruned


def _format_word(word: tuple[int, ...], k: int) -> str:
    sep = "" if k <= 10 else ","
    return sep.join(str(d) for d in word)


def _fraction_json(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator}


def _dyadic_json(value: DyadicDistance) -> dict:
    return _fraction_json(value.as_fraction())


def _witness_json(witness: PathWitness, intrinsic: Dfao) -> dict:
    return {
        "word": _format_word(witness.word, intrinsic.k),
        "state": intrinsic.states[witness.collide_state],
        "pos_a": witness.position_a,
        "pos_b": witness.position_b,
    }


def _report_json(
    report: AnalysisReport,
    name: str | None,
    input_states: int,
    oracle_result: tuple[int, DyadicDistance] | None,
) -> dict:
    obj: dict = {}
    if name is not None:
        obj["name"] = name
    obj["k"] = report.k
    obj["states"] = input_states
    obj["strictly_accessible"] = report.strictly_accessible
    obj["classification"] = report.classification.value
    obj["opacity"] = _fraction_json(report.opacity.as_fraction())
    obj["complexity"] = _fraction_json(report.complexity)
    if report.witness is not None:
        obj["witness"] = _witness_json(report.witness, report.intrinsic)
    obj["inhomogeneous_states"] = [
        report.intrinsic.states[s]
        for s, verdict in enumerate(report.state_homogeneity)
        if not verdict.homogeneous
    ]
    obj["minimized_states"] = report.states_count
    if oracle_result is not None:
        bound, value = oracle_result
        obj["oracle"] = {"L": bound, "value": _dyadic_json(value)}
    return obj


def _cmd_analyze(args) -> int:
    dfao, _ = _load(args.file)
    report = analyze_sequence(dfao)
    oracle_result = None
    oracle_note = None
    if args.oracle:
        bound = oracle_bound(report.intrinsic.automaton)
        try:
            value = brute_force_opacity(report.intrinsic.automaton, bound)
            oracle_result = (bound, value)
        except InstanceTooLarge as exc:
            oracle_note = str(exc)

    if args.json:
        obj = _report_json(report, args.file, len(dfao.states), oracle_result)
        print(json.dumps(obj))
        return 0

    intrinsic = report.intrinsic
    rows = [
        ("name", args.file),
        ("k", str(report.k)),
        ("input states", str(len(dfao.states))),
        ("intrinsic states", str(report.states_count)),
        ("strictly accessible", "yes" if report.strictly_accessible else "no"),
        ("classification", report.classification.value),
        ("opacity", str(report.opacity)),
        ("opacity complexity", str(report.complexity)),
    ]
    if report.witness is None:
        rows.append(("shortest witness", "none (every path is homogeneous)"))
    else:
        w = report.witness
        rows.append(
            (
                "shortest witness",
                f"{_format_word(w.word, report.k)} (clashes at state "
                f"{intrinsic.states[w.collide_state]}, edges {w.position_a} "
                f"and {w.position_b})",
            )
        )
    inhomogeneous = [
        intrinsic.states[s]
        for s, verdict in enumerate(report.state_homogeneity)
        if not verdict.homogeneous
    ]
    rows.append(("inhomogeneous states", ", ".join(inhomogeneous) or "none"))
    if oracle_result is not None:
        bound, value = oracle_result
        agrees = value == report.opacity.as_dyadic()
        rows.append(
            (
                "oracle",
                f"{value} at length bound {bound} "
                f"({'agrees' if agrees else 'DISAGREES'})",
            )
        )
    elif oracle_note is not None:
        rows.append(("oracle", f"skipped: {oracle_note}"))
    width = max(len(label) for label, _ in rows)
    for label, value in rows:
        print(f"{label.ljust(width)}  {value}")
    return 0


def _cmd_minimize(args) -> int:
    dfao, _ = _load(args.file)
    fm = intrinsic_automaton(dfao)
    text = serialize(fm.target)
    mapping_lines = [
        f"{fm.source.states[s]} -> {fm.target.states[fm.assignment[s]]}"
        for s in range(len(fm.source.states))
    ]
    if args.output is not None:
        Path(args.output).write_text(text)
        for line in mapping_lines:
            print(line)
    else:
        sys.stdout.write(text)
        for line in mapping_lines:
            print(line, file=sys.stderr)
    return 0


def _cmd_generate(args) -> int:
    dfao, _ = _load(args.file)
    print(args.sep.join(dfao.generate(args.count)))
    return 0


def _cmd_dot(args) -> int:
    dfao, _ = _load(args.file)
    witness = None
    if args.witness:
        witness = shortest_inhomogeneous_path(dfao.automaton)
        if witness is None:
            print("note: no clashing path to highlight", file=sys.stderr)
    sys.stdout.write(to_dot(dfao, witness))
    return 0


def _cmd_corpus(args) -> int:
    results = evaluate_all()
    if args.json:
        rows = []
        for r in results:
            rows.append(
                {
                    "name": r.entry.name,
                    "k": r.report.k,
                    "states": r.report.states_count,
                    "classification": r.report.classification.value,
                    "opacity": _fraction_json(r.report.opacity.as_fraction()),
                    "complexity": _fraction_json(r.report.complexity),
                    "witness_length": (
                        None if r.report.witness is None else len(r.report.witness.word)
                    ),
                    "oracle_length": r.oracle_length,
                    "oracle_value": _dyadic_json(r.oracle_value),
                    "sequence_ok": r.sequence_ok,
                    "pass": r.passed,
                }
            )
        print(json.dumps(rows))
    else:
        header = (
            "entry",
            "k",
            "states",
            "classification",
            "opacity",
            "complexity",
            "witness",
            "oracle",
            "sequence",
            "result",
        )
        table = [header]
        for r in results:
            table.append(
                (
                    r.entry.name,
                    str(r.report.k),
                    str(r.report.states_count),
                    r.report.classification.value,
                    str(r.report.opacity),
                    str(r.report.complexity),
                    (
                        "-"
                        if r.report.witness is None
                        else str(len(r.report.witness.word))
                    ),
                    "agree" if r.oracle_ok else "MISMATCH",
                    "n/a" if r.sequence_ok is None else ("ok" if r.sequence_ok else "FAIL"),
                    "PASS" if r.passed else "FAIL",
                )
            )
        widths = [max(len(row[i]) for row in table) for i in range(len(header))]
        for row in table:
            print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return 0 if all(r.passed for r in results) else 1


def _cmd_equiv(args) -> int:
    d1, _ = _load(args.file1)
    d2, _ = _load(args.file2)
    if are_equivalent(d1, d2):
        print("equivalent")
        return 0
    print("not equivalent")
    return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dfao",
        description="Analyze digit machines: opacity, minimization, sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="opacity report for a machine file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="confirm the value by brute-force enumeration",
    )
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("minimize", help="write the intrinsic machine")
    p.add_argument("file")
    p.add_argument("-o", "--output", help="write the .aut here instead of stdout")
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("generate", help="print the first terms of the sequence")
    p.add_argument("file")
    p.add_argument("-n", "--count", type=int, required=True, help="number of terms")
    p.add_argument("--sep", default=" ", help="term separator (default: space)")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("dot", help="Graphviz rendering of a machine file")
    p.add_argument("file")
    p.add_argument(
        "--witness",
        action="store_true",
        help="highlight the shortest clashing path, if any",
    )
    p.set_defaults(func=_cmd_dot)

    p = sub.add_parser("corpus", help="check every bundled machine, print a table")
    p.add_argument("--json", action="store_true", help="machine-readable rows")
    p.set_defaults(func=_cmd_corpus)

    p = sub.add_parser("equiv", help="do two machine files generate the same words")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_equiv)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DfaoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
