"""Command-line interface: planetoid-convert --dataset NAME --in DIR --out FILE."""

from __future__ import annotations

import argparse
import sys

from .convert import ConversionError, convert


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="planetoid-convert",
        description="Convert a public Planetoid citation dataset into a graph bundle")
    parser.add_argument("--dataset", required=True, choices=("citeseer", "cora", "pubmed"))
    parser.add_argument("--in", dest="input_dir", required=True,
                        help="directory holding the ind.NAME.* files")
    parser.add_argument("--out", dest="output_path", required=True,
                        help="bundle file to write")
    args = parser.parse_args(argv)
    try:
        report = convert(args.dataset, args.input_dir, args.output_path)
    except (ConversionError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    print(f"{report.dataset}: {report.nodes} nodes, {report.citation_links} citation links "
          f"({report.unique_pairs} unique pairs), {report.classes} classes, "
          f"{report.feature_dim} feature dims -> {args.output_path}")
    if report.test_index_gaps:
        print(f"note: filled {report.test_index_gaps} test-index gaps with zero rows")
    return 0


if __name__ == "__main__":
    sys.exit(main())
