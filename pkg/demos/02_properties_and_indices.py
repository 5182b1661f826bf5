#!/usr/bin/env python3
"""Check the seven structural properties, the gap law and the index formula."""

from fareyseq import analysis, core


def main():
    print("order  properties 1..7")
    for reg in core.iter_sequences(16, with_registry=True):
        if reg.order < 2:
            continue
        marks = "".join("✓" if r.holds else "✗" for r in analysis.check_all(reg.order, reg=reg))
        print(f"{reg.order:5d}  {marks}")

    # 1/3 is born in F_3 with s_f = 2; its gap to the right shrinks in steps
    cf = core.registry(3).created_fraction((1, 3))
    print("\ngap after 1/3:", ", ".join(f"m={m}: {analysis.gap(cf, m)}" for m in range(3, 11)))

    m = 9
    reg = core.registry(m)
    print(f"\nindex of each fraction in F_{m} from creation counts:")
    for f in reg.sequence.fractions():
        print(f"  {str(f):>5}  ->  {analysis.order_index(f, m, reg)}")


if __name__ == "__main__":
    main()
