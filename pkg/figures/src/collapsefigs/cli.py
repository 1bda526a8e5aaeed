"""`render` command: CSV in, image out.

Exit codes: 0 success, 64 usage, 65 schema mismatch or unreadable input.
"""

from __future__ import annotations

import argparse
import sys

from .render import FigureSpec, SchemaError, render

EXIT_OK = 0
EXIT_USAGE = 64
EXIT_SCHEMA = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="render", description=__doc__)
    parser.add_argument("--fig", type=int, choices=(1, 2, 3), required=True)
    parser.add_argument("--in", dest="input_csv", required=True)
    parser.add_argument("--out", dest="output_image", required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    spec = FigureSpec(
        figure_id=args.fig, input_csv=args.input_csv, output_image=args.output_image
    )
    try:
        result = render(spec)
    except (SchemaError, OSError) as exc:
        print(f"render: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    summary = f"figure {result.figure_id}: {result.rows} rows -> {result.output_image}"
    if result.figure_id == 3:
        summary += f" ({len(result.crossings)} crossing(s): " + ", ".join(
            f"{c:.4f}" for c in result.crossings
        ) + ")"
    print(summary)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
