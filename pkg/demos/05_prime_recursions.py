#!/usr/bin/env python3
"""Primes and twin primes read off intersections of countdown sets."""

from fareyseq import primes
from fareyseq.errors import TruncationExhausted


def main():
    print("sieve, p <= 60:", [p for p in range(2, 61) if primes.is_prime_farey(p)])
    print("lesser twins <= 200:", [p for p in range(3, 201) if primes.is_lesser_twin_farey(p)])
    print("prime recursion:", primes.prime_stream(20))
    print("twin recursion: ", [tuple(t) for t in primes.twin_stream(12)])

    # the truncated-set program, with budgets too small and large enough
    for k_max in (1, 10, 200):
        lines = []
        try:
            primes.twin_primes_report(12, k_max, lines)
            print(f"\nk_max={k_max}:")
            print("\n".join(lines))
        except TruncationExhausted as exc:
            print(f"\nk_max={k_max}: {exc}")


if __name__ == "__main__":
    main()
