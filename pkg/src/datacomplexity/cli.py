"""Command-line front end: CSV in, JSON report and optional SVG chart out.

Exit codes: 0 success, 2 for CSV/flag validation problems (the diagnostic
names the offending row or column), 3 when a measure fails (the diagnostic
names the measure).
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from .calculator import CANONICAL_IDS, ComplexityCalculator
from .dataset import build_dataset
from .errors import DataComplexityError, MeasureEvaluationError
from .svg import render_svg


class CsvFormatError(DataComplexityError):
    """CSV contents do not form a valid numeric dataset."""


def _parse_labels(tokens: list[str]):
    """Prefer int labels, then float, falling back to the raw strings."""
    for cast in (int, float):
        try:
            return [cast(t) for t in tokens]
        except ValueError:
            continue
    return tokens


def load_csv(path, label_col=None, label_last=False, delimiter=",", header=True):
    """Read a CSV into (features, labels, column_names).

    Every non-label cell must parse as a finite real; failures are reported
    with 1-based data row numbers and column names.
    """
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            rows = list(csv.reader(fh, delimiter=delimiter))
    except OSError as exc:
        raise CsvFormatError(f"cannot read {path}: {exc.strerror or exc}") from exc
    rows = [r for r in rows if r]
    if not rows:
        raise CsvFormatError(f"{path}: file is empty")
    if header:
        names = [c.strip() for c in rows[0]]
        body = rows[1:]
    else:
        names = [f"col{k}" for k in range(len(rows[0]))]
        body = rows
    if not body:
        raise CsvFormatError(f"{path}: no data rows")
    if label_col is not None:
        if label_col not in names:
            raise CsvFormatError(f"label column {label_col!r} not found in header")
        label_idx = names.index(label_col)
    elif label_last:
        label_idx = len(names) - 1
    else:
        label_idx = len(names) - 1
    features, labels = [], []
    for rnum, row in enumerate(body, start=1):
        if len(row) != len(names):
            raise CsvFormatError(
                f"row {rnum}: expected {len(names)} fields, found {len(row)}"
            )
        feat_row = []
        for cnum, tok in enumerate(row):
            if cnum == label_idx:
                continue
            tok = tok.strip()
            try:
                value = float(tok)
            except ValueError:
                raise CsvFormatError(
                    f"row {rnum}, column {names[cnum]!r}: "
                    f"cannot parse {tok!r} as a number"
                ) from None
            if not math.isfinite(value):
                raise CsvFormatError(
                    f"row {rnum}, column {names[cnum]!r}: non-finite value {tok!r}"
                )
            feat_row.append(value)
        if not feat_row:
            raise CsvFormatError("no feature columns besides the label column")
        features.append(feat_row)
        labels.append(row[label_idx].strip())
    feature_names = [nm for k, nm in enumerate(names) if k != label_idx]
    return features, _parse_labels(labels), feature_names


def _round6(x: float) -> float:
    return float(f"{float(x):.6g}")


def report_to_json(report: dict) -> str:
    """Serialize a report with measure values at 6 significant digits.

    The score is recomputed as the exact mean of the rounded values so that
    parsing the document and averaging ``complexities`` reproduces ``score``.
    """
    complexities = {k: _round6(v) for k, v in report["complexities"].items()}
    score = sum(complexities.values()) / len(complexities)
    doc = {
        "n_samples": int(report["n_samples"]),
        "n_features": int(report["n_features"]),
        "n_classes": int(report["n_classes"]),
        "classes": report["classes"],
        "prior_probability": [_round6(p) for p in report["prior_probability"]],
        "score": score,
        "complexities": complexities,
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_analyze(args) -> int:
    try:
        features, labels, _ = load_csv(
            args.path,
            label_col=args.label_col,
            label_last=args.label_last,
            delimiter=args.delimiter,
            header=not args.no_header,
        )
        dataset = build_dataset(features, labels)
        measures = args.measures.split(",") if args.measures else None
        weights = (
            [float(w) for w in args.weights.split(",")] if args.weights else None
        )
        calc = ComplexityCalculator(measures=measures, weights=weights, seed=args.seed)
    except (DataComplexityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        calc.fit(dataset)
    except MeasureEvaluationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    payload = report_to_json(calc.report())
    if args.json and args.json != "-":
        try:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as exc:
            print(f"error: cannot write {args.json}: {exc.strerror}", file=sys.stderr)
            return 2
        if not args.quiet:
            print(f"report written to {args.json}", file=sys.stderr)
    else:
        sys.stdout.write(payload)
    if weights is not None and not args.quiet:
        print(f"weighted score: {calc.score():.6g}", file=sys.stderr)
    if args.svg:
        try:
            render_svg(calc.plot_data(), args.svg)
        except OSError as exc:
            print(f"error: cannot write {args.svg}: {exc.strerror}", file=sys.stderr)
            return 2
        if not args.quiet:
            print(f"chart written to {args.svg}", file=sys.stderr)
    return 0


def cmd_list_measures(_args) -> int:
    for mid in CANONICAL_IDS:
        print(mid)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="datacomplexity",
        description="Complexity measures for binary classification CSV datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="compute the complexity report for a CSV file")
    an.add_argument("path", help="CSV file with one label column")
    label = an.add_mutually_exclusive_group()
    label.add_argument("--label-col", help="label column name (needs a header)")
    label.add_argument(
        "--label-last",
        action="store_true",
        help="use the last column as labels (default)",
    )
    an.add_argument("--measures", help="comma-separated measure ids (default: all)")
    an.add_argument("--weights", help="comma-separated positive weights for score")
    an.add_argument("--seed", type=int, default=0, help="seed for stochastic measures")
    an.add_argument("--json", help="write the JSON report here ('-' for stdout)")
    an.add_argument("--svg", help="write the polar chart SVG here")
    an.add_argument("--delimiter", default=",", help="CSV delimiter (default ',')")
    an.add_argument("--no-header", action="store_true", help="CSV has no header row")
    an.add_argument("--quiet", action="store_true", help="suppress status messages")
    an.set_defaults(func=cmd_analyze)

    ls = sub.add_parser("list-measures", help="print the 22 measure ids in order")
    ls.set_defaults(func=cmd_list_measures)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze" and args.no_header and args.label_col:
        print("error: --label-col needs a header row", file=sys.stderr)
        return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
