#!/usr/bin/env python3
"""Example experiment: antibunching depth versus p for several q values.

Sweeps the order-(9,1) antibunching witness for the generalized binomial
state at M = 10 over a fine p grid, writes CSV + SVG, and prints where the
witness is deepest.
"""

import argparse
from pathlib import Path

from twomode.moments import Engine
from twomode.sweep import SweepConfig, run_sweep
from twomode.witnesses import Witness


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("antibunching_out"))
    parser.add_argument("--M", dest="total", type=int, default=10)
    parser.add_argument("--orders", default="9,1", help="l,m of the witness")
    args = parser.parse_args()

    l_txt, m_txt = args.orders.split(",")
    config = SweepConfig(
        state_family="ngbs",
        total=args.total,
        q_list=(-0.01, -0.005, 0.0, 0.005, 0.01),
        p_grid=(0.01, 0.99, 197),
        witnesses=(Witness("hoa", l=int(l_txt), m=int(m_txt)),),
        engines=(Engine.ORACLE,),
        output_path=args.out,
        output_format="svg+csv",
    )
    rows = run_sweep(config)
    ok_rows = [r for r in rows if r.status == "ok"]
    for q in sorted({r.q for r in ok_rows}):
        best = min((r for r in ok_rows if r.q == q), key=lambda r: r.value)
        flag = "antibunched" if best.nonclassical else "no antibunching"
        print(f"q={q:+.3f}: min value {best.value:+.4f} at p={best.p:.3f} ({flag})")
    print(f"rows and charts written to {args.out}")


if __name__ == "__main__":
    main()
