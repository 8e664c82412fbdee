"""``credit-weights`` command line.

Exit codes: 0 success, 1 validation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from credit_weights.corpus import CorpusFormat, WeightFormat, format_fraction, load_corpus, write_weights
from credit_weights.index import build_profiles, ranked
from credit_weights.report import (
    ReportConfig,
    curves_to_csv,
    features_table,
    fig1_csv,
    fig2_csv,
    fig2_dataset,
    table_geometric,
    table_harmonic,
    table_type1,
    write_artifacts,
)
from credit_weights.schemes import (
    CreditWeightsError,
    InconsistentEndpoints,
    Scheme,
    SchemeSpec,
    alpha_from_endpoints,
    max_alpha,
)

FORMAT_ENV = "CREDIT_WEIGHTS_FORMAT"
TABLES = ("table2", "table3", "table4", "table5", "fig1", "fig2", "all")


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    """Parse ``a/b`` or a decimal literal exactly (``0.05`` -> ``1/20``)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction or decimal: {text!r}") from None


def _scheme(args) -> SchemeSpec:
    kind = Scheme(args.scheme)
    if kind is Scheme.TYPE2 and args.alpha is None:
        raise UsageError("--alpha is required for --scheme type2")
    if kind is not Scheme.TYPE2 and args.alpha is not None:
        raise UsageError(f"--alpha is only valid with --scheme type2, not {kind.value}")
    return SchemeSpec(kind, args.alpha)


def cmd_weights(args, out) -> int:
    spec = _scheme(args)
    fmt = args.format or os.environ.get(FORMAT_ENV) or WeightFormat.CSV_FRACTION.value
    try:
        fmt = WeightFormat(fmt)
    except ValueError:
        raise UsageError(f"unknown format {fmt!r}") from None
    out.write(write_weights(spec.weights(args.k), fmt))
    return 0


def cmd_alpha(args, out) -> int:
    bound_mode = args.mu is not None
    inversion_mode = args.w1 is not None or args.wk is not None
    if bound_mode == inversion_mode:
        raise UsageError("give either --mu, or both --w1 and --wk")
    if bound_mode:
        bound = max_alpha(args.k, args.mu)
        strictness = "strict" if bound.strict else "non-strict"
        out.write(f"{format_fraction(bound.max_alpha)} ({strictness})\n")
        return 0
    if args.w1 is None or args.wk is None:
        raise UsageError("inversion mode needs both --w1 and --wk")
    try:
        alpha = alpha_from_endpoints(args.k, args.w1, args.wk)
    except InconsistentEndpoints as exc:
        out.write(f"{format_fraction(exc.alpha)} (inconsistent-endpoints)\n")
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out.write(f"{format_fraction(alpha)} (consistent)\n")
    return 0


def cmd_index(args, out) -> int:
    spec = _scheme(args)
    doc = load_corpus(args.corpus, args.corpus_format)
    profiles = build_profiles(doc.papers, spec)
    for p in ranked(profiles):
        out.write(f"{p.author_id} {p.paper_count} {p.weighted_h}\n")
    return 0


def cmd_table(args, out) -> int:
    config = ReportConfig(max_k=args.max_k)
    if args.name == "all":
        if args.out_dir is None:
            raise UsageError("table all requires --out-dir")
        for path in write_artifacts(args.out_dir, config):
            print(path, file=sys.stderr)
        return 0
    tables = {"table2": table_type1, "table3": table_geometric, "table4": table_harmonic}
    if args.name in tables:
        table = tables[args.name](config.max_k)
        text = table.to_markdown() if args.markdown else table.to_csv()
    elif args.name == "table5":
        text = features_table(config).to_markdown()
    elif args.name == "fig1":
        text = fig1_csv(config)
    else:
        text = fig2_csv(config)
    if args.out_dir is not None:
        suffix = ".md" if args.markdown or args.name == "table5" else ".csv"
        path = Path(args.out_dir) / f"{args.name}{suffix}"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8", newline="\n")
    else:
        out.write(text)
    return 0


def cmd_compare(args, out) -> int:
    out.write(curves_to_csv(fig2_dataset(args.k, args.alpha), "position", "weight"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="credit-weights",
        description="Positional credit weights for multi-author papers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    schemes = [s.value for s in Scheme]

    p = sub.add_parser("weights", help="print one weight vector")
    p.add_argument("--scheme", required=True, choices=schemes)
    p.add_argument("-k", type=int, required=True, help="number of authors")
    p.add_argument("--alpha", type=rational, help="decrement parameter (type2 only)")
    p.add_argument("--format", choices=[f.value for f in WeightFormat],
                   help=f"output format (default: ${FORMAT_ENV} or csv-fraction)")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("alpha", help="alpha bound for a floor, or alpha from endpoints")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--mu", type=rational, help="floor on the last author's weight")
    p.add_argument("--w1", type=rational, help="first author's weight")
    p.add_argument("--wk", type=rational, help="last author's weight")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("table", help="regenerate a weight table or plot dataset")
    p.add_argument("name", choices=TABLES)
    p.add_argument("--max-k", type=int, default=10)
    p.add_argument("--markdown", action="store_true", help="markdown instead of CSV")
    p.add_argument("--out-dir", help="write files here instead of stdout")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("index", help="weighted h-index per author for a corpus")
    p.add_argument("corpus")
    p.add_argument("--scheme", required=True, choices=schemes)
    p.add_argument("--alpha", type=rational)
    p.add_argument("--corpus-format", choices=[f.value for f in CorpusFormat],
                   help="default: csv for *.csv, JSON lines otherwise")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("compare", help="weights of every scheme for k authors")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--alpha", type=rational, required=True)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except (CreditWeightsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
