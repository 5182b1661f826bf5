#!/usr/bin/env python3
"""Franel-Landau sums for growing orders, optionally plotted on log axes."""

import sys

import numpy as np

from fareyseq import analysis


def main(m_max=300):
    rows = analysis.franel_table(m_max, verify=True)
    orders = np.array([r.order for r in rows])
    stats = np.array([r.statistic for r in rows])
    for r in rows[:10] + rows[-3:]:
        print(f"m={r.order:4d}  |F_m|={r.count:6d}  sum={r.statistic:.12g}")

    # slope of log(sum) against log(m) over the upper half; a descriptive number only
    tail = orders > m_max // 2
    slope = np.polyfit(np.log(orders[tail]), np.log(stats[tail]), 1)[0]
    print(f"\nlog-log slope over m in ({m_max // 2}, {m_max}]: {slope:.3f}")

    if "--plot" in sys.argv:
        import matplotlib.pyplot as plt

        plt.loglog(orders, stats, ".", ms=3)
        plt.xlabel("m")
        plt.ylabel("Franel-Landau sum")
        plt.show()


if __name__ == "__main__":
    main()
