"""Command-line figure generation for a simulation run directory."""

from __future__ import annotations

import argparse
import sys

from .bundle import BundleError, PlotBundle
from .figures import ALL_FIGURES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="formtrack-plots",
        description="Render trajectory, energy, settling, and consensus figures "
                    "from a formtrack run directory.",
    )
    parser.add_argument("--run-dir", required=True,
                        help="directory containing trajectory.csv, metrics.csv, summary.json")
    parser.add_argument("--out", required=True, help="output directory for SVG files")
    parser.add_argument("--only", choices=sorted(ALL_FIGURES), default=None,
                        help="render a single figure instead of all four")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        bundle = PlotBundle.from_run_dir(args.run_dir, args.out)
        names = [args.only] if args.only else sorted(ALL_FIGURES)
        for name in names:
            result = ALL_FIGURES[name](bundle)
            print(f"{name}: {result.path}")
    except (BundleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
