#!/usr/bin/env python3
"""The orders at which a fraction (or a denominator) carries a given countdown."""

from fareyseq import core, cycles


def main():
    for n in (1, 2):
        f = (n, 3)
        print(f"{n}/3: s_f = {cycles.s_initial(f)}")
        for c in (1, 2, 3):
            print(f"   countdown {c}: {cycles.cycle_set(f, c).render()}  first terms {cycles.cycle_set(f, c).take(4)}")

    print()
    for d, c in ((3, 1), (4, 3), (5, 1), (6, 1)):
        print(cycles.cycle_set_for_denominator(d, c).render())

    # cross-check one set against generated sequences
    s51 = cycles.cycle_set_for_denominator(5, 1)
    hits = [seq.order for seq in core.iter_sequences(30) if ((seq.d == 5) & (seq.s == 1)).any()]
    print("\norders <= 30 where a denominator-5 fraction has s = 1:", hits)
    print("same orders from the residue set:             ", [m for m in range(1, 31) if m in s51])

    print("\ntruncated enumeration ems(3, 1, 4):", cycles.ems(3, 1, 4))


if __name__ == "__main__":
    main()
