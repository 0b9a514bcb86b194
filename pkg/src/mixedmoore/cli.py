"""Command-line interface: ``mixedmoore <subcommand> [options]``.

Exit codes: 0 success, 1 assertion or consistency failure, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bounds
from .bounds import BoundConsistencyError, MixedParams
from .golden import REFERENCE_SERIES, GOLDEN_KMAX
from .mixedgraph import (
    GraphError,
    INF,
    check_moore,
    digons_to_undirected,
    format_mixed,
    kautz_mixed,
    moore_tree,
    parse_mixed,
    to_dot,
)

FORMATS = ("plain", "csv", "json", "markdown")


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _emit_rows(header: list[str], rows: list[list], fmt: str, out) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    elif fmt == "json":
        payload = [dict(zip(header, (str(c) for c in row))) for row in rows]
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "markdown":
        out.write("| " + " | ".join(header) + " |\n")
        out.write("|" + "---|" * len(header) + "\n")
        for row in rows:
            out.write("| " + " | ".join(str(c) for c in row) + " |\n")
    else:
        widths = [max(len(str(x)) for x in [h] + [row[i] for row in rows]) for i, h in enumerate(header)]
        out.write("  ".join(h.rjust(wd) for h, wd in zip(header, widths)).rstrip() + "\n")
        for row in rows:
            out.write("  ".join(str(c).rjust(wd) for c, wd in zip(row, widths)).rstrip() + "\n")


def cmd_bound(args, out) -> int:
    report = bounds.bound_report(MixedParams(args.z, args.r, args.k))
    if args.format == "json":
        d = report.to_dict()
        if args.formula == "corrected":
            d.pop("old")
        elif args.formula == "old":
            d.pop("corrected")
        if not args.levels:
            d.pop("levels")
        out.write(json.dumps(d, indent=2) + "\n")
        return 0

    header = ["z", "r", "k"]
    row: list = [args.z, args.r, args.k]
    if args.formula in ("corrected", "both"):
        header.append("corrected")
        row.append(report.corrected)
    if args.formula in ("old", "both"):
        header.append("old")
        row.append(report.old)
    if args.levels:
        header.append("levels")
        row.append(" ".join(str(x) for x in report.levels))
    if args.format == "plain":
        for h, c in zip(header, row):
            out.write(f"{h}: {c}\n")
        out.write(f"degenerate: {report.degenerate_kind.value}\n")
        out.write(f"closed_form_checked: {'yes' if report.closed_form_used else 'no'}\n")
        if report.classical is not None:
            out.write(f"classical: {report.classical}\n")
    else:
        _emit_rows(header, [row], args.format, out)
    return 0


def _ratio(old: int, corrected: int) -> str:
    return f"{old / corrected:.6f}"


def cmd_table(args, out) -> int:
    rows = []
    for k in range(1, args.kmax + 1):
        p = MixedParams(args.z, args.r, k)
        corrected = bounds.bound_report(p).corrected if k <= 100 else bounds.moore_bound(p)
        rows.append([k, corrected, bounds.old_bound(p)])
    if args.format in ("plain", "markdown"):
        rows = [row + [_ratio(row[2], row[1])] for row in rows]
        _emit_rows(["k", "corrected", "old", "ratio"], rows, args.format, out)
    else:
        _emit_rows(["k", "corrected", "old"], rows, args.format, out)
    return 0


def cmd_compare(args, out) -> int:
    status = 0
    for (z, r), golden in REFERENCE_SERIES.items():
        series = {"corrected": [], "old": []}
        for k in range(1, args.kmax + 1):
            p = MixedParams(z, r, k)
            series["corrected"].append(bounds.moore_bound(p))
            series["old"].append(bounds.old_bound(p))
        out.write(f"# z={z} r={r}\n")
        _emit_rows(
            ["k", "corrected", "old"],
            [[k + 1, c, o] for k, (c, o) in enumerate(zip(series["corrected"], series["old"]))],
            "csv",
            out,
        )
        n = min(args.kmax, GOLDEN_KMAX)
        for name in ("corrected", "old"):
            mismatch = next(
                (k + 1 for k in range(n) if series[name][k] != golden[name][k]), None
            )
            if mismatch is None:
                out.write(f"PASS z={z} r={r} {name} (k=1..{n})\n")
            else:
                status = 1
                out.write(
                    f"FAIL z={z} r={r} {name}: first difference at k={mismatch} "
                    f"(got {series[name][mismatch - 1]}, expected {golden[name][mismatch - 1]})\n"
                )
    return status


def cmd_tree(args, out) -> int:
    tree = moore_tree(MixedParams(args.z, args.r, args.k))
    if args.format == "dot":
        out.write(to_dot(tree.graph, name="MooreTree"))
    else:
        out.write(format_mixed(tree.graph))
    return 0


def cmd_check(args, out) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}")
    g = parse_mixed(text)
    if args.normalize_digons:
        g = digons_to_undirected(g)
    report = check_moore(g)
    d = report.to_dict()
    if args.format == "json":
        out.write(json.dumps(d, indent=2) + "\n")
    elif args.format == "plain":
        for key, value in d.items():
            out.write(f"{key}: {'-' if value is None else value}\n")
    else:
        _emit_rows(list(d), [["" if v is None else v for v in d.values()]], args.format, out)
    if args.expect_moore:
        return 0 if report.attains_bound else 1
    return 0


def cmd_kautz(args, out) -> int:
    text = format_mixed(kautz_mixed(args.z))
    if args.out is None:
        out.write(text)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedmoore",
        description="Moore bounds for mixed graphs and bound-attainment checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def zr(p, z_type=_nonneg):
        p.add_argument("--z", type=z_type, required=True, help="maximum out-degree")
        p.add_argument("--r", type=_nonneg, required=True, help="maximum undirected degree")

    p = sub.add_parser("bound", help="bound values for one (z, r, k)")
    zr(p)
    p.add_argument("--k", type=_positive, required=True, help="diameter")
    p.add_argument("--formula", choices=("corrected", "old", "both"), default="both")
    p.add_argument("--levels", action="store_true", help="show distance-partition counts")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("table", help="corrected and old bounds for k = 1..kmax")
    zr(p)
    p.add_argument("--kmax", type=_positive, required=True)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("compare", help="regenerate the published comparison series")
    p.add_argument("--kmax", type=_positive, default=GOLDEN_KMAX)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("tree", help="export the labelled Moore tree")
    zr(p)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--format", choices=("mixed", "dot"), default="mixed")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("check", help="measure a graph file against the bound")
    p.add_argument("--file", required=True)
    p.add_argument("--expect-moore", action="store_true", help="exit 1 unless the bound is attained")
    p.add_argument("--normalize-digons", action="store_true", help="treat opposite arc pairs as edges")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("kautz", help="write the Kautz mixed graph for out-degree z")
    p.add_argument("--z", type=_positive, required=True)
    p.add_argument("--out", default=None, help="output path (default: standard output)")
    p.set_defaults(func=cmd_kautz)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (GraphError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BoundConsistencyError, AssertionError) as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1


def run(argv) -> tuple[int, str]:
    """Run the CLI in-process and capture standard output."""
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
