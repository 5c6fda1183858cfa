"""Command-line interface: extract, index, query, evaluate, curves.

Defaults are scheme 18,10, metric d1, and n = 10. Usage and argument-parse
errors exit with status 2; runtime failures (unreadable files, bad indexes)
print a diagnostic and exit with status 1. Identical invocations on identical
inputs produce byte-identical output files.
"""

import argparse
import os
import sys

from .descriptor import QuantizationScheme, extract_feature_from_file
from .errors import CbirError
from .evaluation import (
    evaluate_all,
    format_report_table,
    sweep_curves,
    write_curves_csv,
    write_report_json,
)
from .metrics import normalize_metric
from .retrieval import query as run_query
from .store import build_index, ingest_dataset, load_index, save_index

WORKERS_ENV = "DSCOP_CBIR_WORKERS"

NATURAL_SWEEP = list(range(10, 101, 10))
TEXTURE_SWEEP = list(range(16, 97, 16))


def _scheme_arg(text):
    try:
        return QuantizationScheme.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _metric_arg(text):
    try:
        return normalize_metric(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _steps_arg(text):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sweep list {text!r}, expected e.g. 10,20,30")


def _workers_arg(text):
    if text == "auto":
        return os.cpu_count() or 1
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"workers must be an integer or 'auto', got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("workers must be >= 1")
    return value


def _default_workers():
    env = os.environ.get(WORKERS_ENV)
    if env:
        if env == "auto":
            return os.cpu_count() or 1
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _feature_record_line(record_id, label, vec):
    values = " ".join(float(x).hex() for x in vec)
    return f"{record_id}\t{label}\t{values}\n"


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dscop-cbir",
        description="Content-based image retrieval with inter-channel HSV "
        "voting histograms and the DSCoP texture pattern.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="extract one image's feature vector")
    p.add_argument("--image", required=True)
    p.add_argument("--scheme", type=_scheme_arg, default=QuantizationScheme(18, 10))
    p.add_argument("--out", help="write the record here instead of stdout")

    p = sub.add_parser("index", help="ingest a dataset and build a feature index")
    p.add_argument("--dataset", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--scheme", type=_scheme_arg, default=QuantizationScheme(18, 10))
    p.add_argument("--metric", type=_metric_arg, default="d1")
    p.add_argument("--workers", type=_workers_arg, default=None)

    p = sub.add_parser("query", help="rank index records against a query image")
    p.add_argument("--index", required=True)
    p.add_argument("--image", required=True)
    p.add_argument("--metric", type=_metric_arg, default=None)
    p.add_argument("-n", type=int, default=10)
    p.add_argument("--query-id", default=None, help="record id of the query image")
    p.add_argument(
        "--exclude-self",
        action="store_true",
        help="drop the --query-id record from the candidates",
    )

    p = sub.add_parser("evaluate", help="precision/recall over every indexed image")
    p.add_argument("--index", required=True)
    p.add_argument("--metric", type=_metric_arg, default=None)
    p.add_argument("-n", type=int, default=10)
    p.add_argument("--out", help="write report JSON here (plus .txt table)")
    p.add_argument("--exclude-self", action="store_true")

    p = sub.add_parser("curves", help="precision/recall curve data over an n sweep")
    p.add_argument("--index", required=True)
    p.add_argument("--metric", type=_metric_arg, default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--steps", type=_steps_arg, default=None, help="comma-separated n values")
    p.add_argument(
        "--step16",
        action="store_true",
        help="use the 16,32,...,96 texture-database sweep instead of 10,20,...,100",
    )
    return parser


def cmd_extract(args):
    vec = extract_feature_from_file(args.image, args.scheme)
    line = _feature_record_line(args.image, "-", vec)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(line)
    else:
        sys.stdout.write(line)
    return 0


def cmd_index(args):
    workers = args.workers if args.workers is not None else _default_workers()
    images = ingest_dataset(args.dataset)
    index = build_index(images, scheme=args.scheme, metric_default=args.metric, workers=workers)
    save_index(index, args.out)
    print(f"indexed {len(index)} images from {len(index.class_sizes)} classes -> {args.out}")
    return 0


def cmd_query(args):
    if args.exclude_self and not args.query_id:
        raise ValueError("--exclude-self requires --query-id")
    index = load_index(args.index)
    vec = extract_feature_from_file(args.image, index.scheme)
    result = run_query(
        index,
        vec,
        metric=args.metric,
        n=args.n,
        exclude_id=args.query_id if args.exclude_self else None,
        query_id=args.query_id,
    )
    print(f"metric {result.metric}  n {len(result.hits)}")
    for rank, (hit_id, label, dist) in enumerate(result.hits, start=1):
        print(f"{rank}\t{dist!r}\t{hit_id}\t{label}")
    return 0


def cmd_evaluate(args):
    index = load_index(args.index)
    report = evaluate_all(index, metric=args.metric, n=args.n, exclude_self=args.exclude_self)
    print(format_report_table(report))
    if args.out:
        write_report_json(report, args.out)
        table_path = os.path.splitext(args.out)[0] + ".txt"
        with open(table_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(format_report_table(report) + "\n")
        print(f"wrote {args.out} and {table_path}")
    return 0


def cmd_curves(args):
    index = load_index(args.index)
    if args.steps is not None:
        steps = args.steps
    elif args.step16:
        steps = TEXTURE_SWEEP
    else:
        steps = NATURAL_SWEEP
    curves = sweep_curves(index, steps, metric=args.metric)
    write_curves_csv(curves, args.out)
    print(f"wrote {len(curves.points)} sweep points -> {args.out}")
    return 0


_COMMANDS = {
    "extract": cmd_extract,
    "index": cmd_index,
    "query": cmd_query,
    "evaluate": cmd_evaluate,
    "curves": cmd_curves,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (CbirError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
