"""Brute-force references, deliberately naive and independent of the main paths.

Nothing here imports the recursion code; gcd, ordering and primality are
all re-derived from scratch.
"""

from __future__ import annotations

import fractions
from dataclasses import dataclass

import numpy as np

from .errors import ComputationCapExceeded, InvariantError


@dataclass(frozen=True)
class OracleConfig:
    max_order: int = 2_000
    max_n: int = 10_000_000

    def __post_init__(self):
        if self.max_order < 1 or self.max_n < 1:
            raise ValueError("oracle caps must be positive")


DEFAULT = OracleConfig()


def _euclid(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def naive_farey(m: int, config: OracleConfig = DEFAULT) -> list[tuple[int, int]]:
    """All reduced ``n/d`` with ``0 <= n <= d <= m``, sorted by value."""
    if m < 1:
        raise InvariantError("m must be >= 1")
    if m > config.max_order:
        raise ComputationCapExceeded(f"naive_farey({m}) exceeds max_order={config.max_order}")
    out = [(n, d) for d in range(1, m + 1) for n in range(0, d + 1) if _euclid(n, d) == 1]
    out.sort(key=lambda t: fractions.Fraction(*t))
    return out


def naive_totient(k: int) -> int:
    return sum(1 for j in range(1, k + 1) if _euclid(j, k) == 1)


def _first_between(a, b, c, d, q):
    """Is there a numerator p with a/b < p/q < c/d?"""
    p = a * q // b + 1
    return p * d < c * q


def naive_s(f, m: int, config: OracleConfig = DEFAULT) -> int:
    """Number of orders after ``m`` until something is inserted right after ``f``.

    Finds the successor of ``f`` in the sorted enumeration of ``F_m``, then
    tries denominators ``m+1, m+2, ...`` for a fraction strictly between.
    """
    a, b = int(f[0]), int(f[1])
    seq = naive_farey(m, config)
    try:
        i = seq.index((a, b))
    except ValueError:
        raise InvariantError(f"{a}/{b} is not in F_{m}") from None
    if i == len(seq) - 1:
        raise InvariantError("1/1 has no successor")
    c, d = seq[i + 1]
    q = m + 1
    while not _first_between(a, b, c, d, q):
        q += 1
        if q > m + config.max_order:
            raise ComputationCapExceeded("naive_s scan did not terminate")
    return q - m


def naive_s_table(m: int, config: OracleConfig = DEFAULT) -> tuple[list[tuple[int, int]], np.ndarray]:
    """``naive_s`` for every non-terminal fraction of ``F_m`` at once."""
    seq = naive_farey(m, config)
    arr = np.array(seq, dtype=np.int64)
    a, b = arr[:-1, 0], arr[:-1, 1]
    c, d = arr[1:, 0], arr[1:, 1]
    out = np.zeros(len(a), dtype=np.int64)
    todo = np.arange(len(a))
    t = 1
    while todo.size:
        q = m + t
        p = a[todo] * q // b[todo] + 1
        hit = p * d[todo] < c[todo] * q
        out[todo[hit]] = t
        todo = todo[~hit]
        t += 1
        if t > config.max_order + m:
            raise ComputationCapExceeded("naive_s_table scan did not terminate")
    return seq, out


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def naive_primes(limit: int) -> list[int]:
    return [p for p in range(2, limit + 1) if trial_division_is_prime(p)]


def naive_twins(limit: int) -> list[tuple[int, int]]:
    """Twin pairs ``(p, p+2)`` with ``p <= limit``."""
    return [(p, p + 2) for p in range(3, limit + 1)
            if trial_division_is_prime(p) and trial_division_is_prime(p + 2)]
