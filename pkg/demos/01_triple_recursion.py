#!/usr/bin/env python3
"""Walk the triple recursion from F_1 upward and watch fractions being born."""

from fareyseq import core
from fareyseq.serialize import paper_display


def main():
    seq = core.generate(1)
    print("F_1:", paper_display(seq))
    for _ in range(5):
        seq, born = core.step(seq)
        print(f"\nF_{seq.order}:", paper_display(seq))
        print("  created:", ", ".join(f"{cf.fraction} (s_f={cf.s_f}, i_f={cf.i_f})" for cf in born))
        print(f"  |C_{seq.order - 1}| = {len(born)} = phi({seq.order})")

    # the next-term recursion gives the same fractions without any s bookkeeping
    m = 12
    classic = core.generate_classic(m)
    print(f"\nF_{m} has {len(classic)} terms; classic == triple recursion:",
          classic == core.generate(m).fractions())


if __name__ == "__main__":
    main()
