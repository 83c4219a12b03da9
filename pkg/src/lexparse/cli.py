"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage/input error.
Files are read as raw bytes and mapped symbol-for-byte (latin-1), so any
byte alphabet works; symbols not covered by the ordering spec are a
validation error, never an implicit alphabet extension.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .alphabet import AlphabetOrdering
from .fibwords import FibSpec
from .parse import (
    LexParse,
    MalformedParseError,
    decode,
    from_dict,
    from_lines,
    lex_parse,
    phrase_strings,
    to_dict,
    to_lines,
)
from .sensitivity import (
    EditRow,
    ao_sensitivity_scan,
    edit_sensitivity_scan,
    sensitivity_growth_table,
)
from .verify import GROUP_NAMES, all_passed, run_verification

DEFAULT_MAX_N = 10_000_000

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


class CliError(Exception):
    """Input or usage problem; rendered to stderr and mapped to exit code 2."""


def _max_n() -> int:
    raw = os.environ.get("LEXPARSE_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"LEXPARSE_MAX_N must be an integer, got {raw!r}") from None


def _add_input_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--text", help="inline input string")
    g.add_argument("--file", help="input file (read as raw bytes)")
    g.add_argument("--gen", help="generator spec: <fib|gib|T|phi>:<k>")


def _resolve_text(args: argparse.Namespace) -> str:
    if args.text is not None:
        if not args.text:
            raise CliError("--text must be non-empty")
        return args.text
    if args.file is not None:
        try:
            data = open(args.file, "rb").read()
        except OSError as exc:
            raise CliError(f"cannot read {args.file}: {exc}") from None
        if not data:
            raise CliError(f"{args.file} is empty")
        return data.decode("latin-1")
    spec = FibSpec.parse(args.gen)
    cap = _max_n()
    length = spec.length()
    if length > cap:
        raise CliError(
            f"{args.gen} generates {length} symbols, above the cap {cap} "
            "(raise LEXPARSE_MAX_N to allow it)"
        )
    return spec.build()


def _resolve_ordering(args: argparse.Namespace, text: str) -> AlphabetOrdering:
    if getattr(args, "order", None):
        try:
            ordering = AlphabetOrdering.from_string(args.order)
            ordering.require_covers(text)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        return ordering
    return AlphabetOrdering.standard(text)


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="latin-1", newline="") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _ratio_str(r) -> str:
    return f"{r.numerator}/{r.denominator} ({float(r):.3f})"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# --- parse ------------------------------------------------------------------


def _cmd_parse(args: argparse.Namespace) -> int:
    text = _resolve_text(args)
    ordering = _resolve_ordering(args, text)
    parse = lex_parse(text, ordering)
    if args.format == "json":
        _emit(json.dumps(to_dict(parse), indent=2) + "\n", args.out)
    elif args.format == "lexparse":
        _emit(to_lines(parse), args.out)
    elif args.format == "csv":
        rows = []
        for idx, ((start, length), ph) in enumerate(zip(parse.spans(), parse.phrases), 1):
            kind = "E" if ph.is_explicit else "C"
            source = "" if ph.is_explicit else ph.source
            rows.append([idx, start, length, kind, source])
        _emit(_csv_text(["index", "start", "length", "kind", "source"], rows), args.out)
    else:
        _emit(_parse_table(parse, text, ordering), args.out)
    return EXIT_OK


def _parse_table(parse: LexParse, text: str, ordering: AlphabetOrdering) -> str:
    lines = [f"lex-parse  n={parse.n}  ordering={ordering.spec}  v={parse.v}"]
    lines.append(f"{'idx':>4} {'start':>8} {'len':>8} {'kind':>4} {'source':>8}  content")
    contents = phrase_strings(parse, text)
    for idx, ((start, length), ph, s) in enumerate(
        zip(parse.spans(), parse.phrases, contents), 1
    ):
        kind = "E" if ph.is_explicit else "C"
        source = "" if ph.is_explicit else str(ph.source)
        preview = s if len(s) <= 24 else s[:21] + "..."
        lines.append(f"{idx:>4} {start:>8} {length:>8} {kind:>4} {source:>8}  {preview}")
    return "\n".join(lines) + "\n"


# --- scan -------------------------------------------------------------------


def _cmd_scan(args: argparse.Namespace) -> int:
    text = _resolve_text(args)
    if args.what == "edit":
        if not args.kind:
            raise CliError("scan edit requires --kind <sub|ins|del>")
        ordering = _resolve_ordering(args, text)
        try:
            report = edit_sensitivity_scan(text, args.kind, ordering, keep_rows=args.rows)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        return _emit_edit_report(args, report)
    try:
        report = ao_sensitivity_scan(text)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    return _emit_ao_report(args, report)


def _emit_edit_report(args: argparse.Namespace, report) -> int:
    w = report.witness
    if args.format == "json":
        obj = {
            "kind": report.kind,
            "ordering": report.ordering.spec,
            "v_base": report.base_v,
            "max_v": report.max_v,
            "max_ratio": [report.max_ratio.numerator, report.max_ratio.denominator],
            "candidates": report.candidates,
            "witness": {"position": w.position, "old": w.old, "new": w.new},
        }
        if report.rows is not None:
            obj["rows"] = [
                {"position": r.position, "old": r.old, "new": r.new, "v": r.v}
                for r in report.rows
            ]
        _emit(json.dumps(obj, indent=2) + "\n", args.out)
    elif args.format == "csv":
        header = ["kind", "position", "old", "new", "v_base", "v_edited", "ratio"]
        # without --rows only the witness row is emitted
        source_rows = report.rows if report.rows is not None else (
            EditRow(report.kind, w.position, w.old, w.new, report.max_v),
        )
        rows = [
            [report.kind, r.position, r.old or "", r.new or "", report.base_v, r.v,
             f"{r.v}/{report.base_v}"]
            for r in source_rows
        ]
        _emit(_csv_text(header, rows), args.out)
    else:
        lines = [
            f"edit-sensitivity scan  kind={report.kind}  ordering={report.ordering.spec}",
            f"candidates: {report.candidates}",
            f"v(base) = {report.base_v}",
            f"max v(edited) = {report.max_v}",
            f"max ratio = {_ratio_str(report.max_ratio)}",
            f"witness: position {w.position}, {w.old!r} -> {w.new!r}",
        ]
        if report.rows is not None:
            lines.append("rows:")
            lines.extend(
                f"  {r.position:>8} {str(r.old or '-'):>3} {str(r.new or '-'):>3} v={r.v}"
                for r in report.rows
            )
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _emit_ao_report(args: argparse.Namespace, report) -> int:
    if args.format == "json":
        obj = {
            "per_ordering": report.per_ordering,
            "max_v": report.max_v,
            "min_v": report.min_v,
            "ratio": [report.ratio.numerator, report.ratio.denominator],
            "argmax": report.argmax,
            "argmin": report.argmin,
        }
        _emit(json.dumps(obj, indent=2) + "\n", args.out)
    elif args.format == "csv":
        rows = [[spec, v] for spec, v in report.per_ordering.items()]
        _emit(_csv_text(["ordering", "v"], rows), args.out)
    else:
        lines = ["alphabet-ordering scan"]
        lines.extend(f"  {spec}: v={v}" for spec, v in report.per_ordering.items())
        lines.append(f"max v = {report.max_v} ({report.argmax})")
        lines.append(f"min v = {report.min_v} ({report.argmin})")
        lines.append(f"ratio = {_ratio_str(report.ratio)}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# --- growth -----------------------------------------------------------------


def _cmd_growth(args: argparse.Namespace) -> int:
    k_min, k_max = _parse_range(args.k)
    try:
        rows = sensitivity_growth_table(k_min, k_max, max_n=_max_n())
    except ValueError as exc:
        raise CliError(str(exc)) from None
    csv_rows = [
        [r.k, r.n, r.base_v, r.witness_v, f"{r.ratio.numerator}/{r.ratio.denominator}"]
        for r in rows
    ]
    _emit(_csv_text(["k", "n", "v_base", "witness_v", "ratio"], csv_rows), args.out)
    return EXIT_OK


# --- verify -----------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> int:
    k_min, k_max = _parse_range(args.k)
    try:
        results = run_verification(range(k_min, k_max + 1), only=args.only)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    lines = [r.line() for r in results]
    passed = all_passed(results)
    asserted = [r for r in results if r.asserted]
    lines.append(
        f"{'OK' if passed else 'FAILED'}: {sum(r.ok for r in asserted)}/{len(asserted)} "
        f"checks passed, {len(results) - len(asserted)} informational"
    )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def _parse_range(spec: str) -> tuple[int, int]:
    lo, sep, hi = spec.partition("..")
    try:
        if sep:
            k_min, k_max = int(lo), int(hi)
        else:
            k_min = k_max = int(lo)
    except ValueError:
        raise CliError(f"bad range {spec!r}; expected <a..b> or <k>") from None
    if k_min > k_max:
        raise CliError(f"empty range {spec!r}")
    return k_min, k_max


# --- gen / decode ------------------------------------------------------------


def _cmd_gen(args: argparse.Namespace) -> int:
    text = _resolve_text(args)
    _emit(text + ("\n" if args.out is None else ""), args.out)
    return EXIT_OK


def _cmd_decode(args: argparse.Namespace) -> int:
    if args.file:
        try:
            payload = open(args.file, "rb").read().decode("latin-1")
        except OSError as exc:
            raise CliError(f"cannot read {args.file}: {exc}") from None
    else:
        payload = sys.stdin.read()
    payload_stripped = payload.lstrip()
    try:
        if payload_stripped.startswith("{"):
            parse = from_dict(json.loads(payload))
        else:
            parse = from_lines(payload)
        text = decode(parse)
    except (MalformedParseError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot decode parse: {exc}") from None
    _emit(text + ("\n" if args.out is None else ""), args.out)
    return EXIT_OK


# --- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lexparse",
        description="Lex-parse construction, sensitivity scans and structural verification.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pp = sub.add_parser("parse", help="compute the lex-parse of a text")
    _add_input_args(pp)
    pp.add_argument("--order", help="ordering spec, smallest symbol first (e.g. ab, $ab)")
    pp.add_argument("--format", choices=("human", "csv", "json", "lexparse"), default="human")
    pp.add_argument("--out", help="write output to this path instead of stdout")
    pp.set_defaults(func=_cmd_parse)

    ps = sub.add_parser("scan", help="exhaustive sensitivity scans")
    ps.add_argument("what", choices=("edit", "ao"), help="edit-sensitivity or ordering-sensitivity")
    _add_input_args(ps)
    ps.add_argument("--kind", help="edit kind for edit scans: sub, ins or del")
    ps.add_argument("--order", help="ordering spec; extra symbols widen the insert alphabet")
    ps.add_argument("--rows", action="store_true", help="retain one row per candidate")
    ps.add_argument("--format", choices=("human", "csv", "json"), default="human")
    ps.add_argument("--out", help="write output to this path instead of stdout")
    ps.set_defaults(func=_cmd_scan)

    pg = sub.add_parser("growth", help="witness-ratio growth table over the even family (CSV)")
    pg.add_argument("--k", required=True, help="index range, e.g. 6..12")
    pg.add_argument("--out", help="write output to this path instead of stdout")
    pg.set_defaults(func=_cmd_growth)

    pv = sub.add_parser("verify", help="run the structural verification suite")
    pv.add_argument("--k", required=True, help="index range, e.g. 6..12")
    pv.add_argument("--only", choices=GROUP_NAMES, help="restrict to one check group")
    pv.add_argument("--out", help="write output to this path instead of stdout")
    pv.set_defaults(func=_cmd_verify)

    pgen = sub.add_parser("gen", help="emit a generated word")
    _add_input_args(pgen)
    pgen.add_argument("--out", help="write output to this path instead of stdout")
    pgen.set_defaults(func=_cmd_gen)

    pd = sub.add_parser("decode", help="decode a serialized parse back to its text")
    pd.add_argument("--file", help="serialized parse (line records or JSON); stdin if omitted")
    pd.add_argument("--out", help="write output to this path instead of stdout")
    pd.set_defaults(func=_cmd_decode)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
