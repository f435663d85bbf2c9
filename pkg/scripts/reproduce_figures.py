#!/usr/bin/env python3
"""Write every reference figure panel (CSV + SVG) and the engine
discrepancy report to a directory.  Equivalent to `twomode figures`."""

import argparse
from pathlib import Path

from twomode.sweep import reproduce_figures


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("figures_out"),
                        help="output directory (default: ./figures_out)")
    args = parser.parse_args()
    results = reproduce_figures(args.out)
    for name in sorted(results):
        ok = sum(1 for r in results[name] if r.status == "ok")
        print(f"{name}: {ok}/{len(results[name])} ok rows")
    print(f"files written to {args.out}")


if __name__ == "__main__":
    main()
