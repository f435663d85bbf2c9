#!/usr/bin/env python3
"""Print the nonclassicality classification table over the standard grid,
optionally restricted in q or M.  Equivalent to `twomode table1`."""

import argparse

from twomode.sweep import STANDARD_M, STANDARD_Q, format_table1, table1_report


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", default=None, help="comma-separated q values")
    parser.add_argument("--M", dest="totals", default=None,
                        help="comma-separated total photon numbers")
    args = parser.parse_args()
    q_values = STANDARD_Q
    m_values = STANDARD_M
    if args.q:
        q_values = tuple(float(tok) for tok in args.q.split(","))
    if args.totals:
        m_values = tuple(int(tok) for tok in args.totals.split(","))
    rows = table1_report(m_values=m_values, q_values=q_values)
    print(format_table1(rows))
    print()
    for row in rows:
        print(f"  {row.label}: minimum witness value {row.minimum:+.6g}")


if __name__ == "__main__":
    main()
