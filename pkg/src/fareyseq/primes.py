"""Prime and twin-prime sieves and recursions built on the cycle sets.

``p`` is prime when ``p - 1`` lies in the countdown-1 set of every
denominator ``1 .. p-1``; ``p`` is the lesser of a twin pair when, in
addition, ``p - 1`` lies in the countdown-3 set of every denominator
``3 .. p-1``.  The recursions grow an intersection of such sets and read
the next prime (pair) off its minimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from . import cycles
from .errors import ComputationCapExceeded, InvariantError, TruncationExhausted

#: Upper bound on candidates scanned by a single minimum search.
SCAN_CAP = 10_000_000


class TwinPair(NamedTuple):
    p: int
    q: int

    @classmethod
    def at(cls, p: int) -> "TwinPair":
        return cls(p, p + 2)


def _in(d: int, c: int, m: int) -> bool:
    return cycles.table_contains(d, c, m)


def is_prime_farey(p: int) -> bool:
    """Membership of ``p - 1`` in every countdown-1 set for ``d = 1 .. p-1``."""
    if p < 2:
        raise InvariantError(f"p must be >= 2, got {p}")
    m = p - 1
    return all(_in(d, 1, m) for d in range(1, p))


def is_prime_fractional(p: int) -> bool:
    """The same sieve phrased as divisibility.

    Asks, for every ``d = 1 .. p-1``, for a fraction created with
    denominator ``d`` whose ``s_f`` satisfies ``d | (p - s_f)``.
    """
    if p < 2:
        raise InvariantError(f"p must be >= 2, got {p}")
    for d in range(1, p):
        _, sfs = cycles.s_initial_table(d)
        if not np.any((p - sfs) % d == 0):
            return False
    return True


def is_lesser_twin_farey(p: int) -> bool:
    """Does ``p - 1`` lie in both countdown sets for every admissible denominator?

    Denominators 1 and 2 never carry a countdown of 3, so only the
    countdown-1 condition applies to them.
    """
    if p < 3:
        raise InvariantError(f"p must be >= 3, got {p}")
    m = p - 1
    return all(_in(d, 1, m) and (d < 3 or _in(d, 3, m)) for d in range(1, p))


@dataclass
class SieveAccumulator:
    """Running intersection of cycle sets, with a floor below which nothing survives.

    Predicates are ``(d, c)`` pairs naming the countdown-``c`` set of
    denominator ``d``.
    """

    predicates: list[tuple[int, int]] = field(default_factory=list)
    floor: int = 1
    scan_cap: int = SCAN_CAP

    def add(self, d: int, c: int) -> None:
        self.predicates.append((d, c))

    def __contains__(self, m: int) -> bool:
        return all(_in(d, c, m) for d, c in self.predicates)

    def minimum(self, test: Callable[[int], bool] | None = None) -> int:
        """Smallest member at or above the floor; raises the floor to it."""
        test = test or self.__contains__
        m = self.floor
        limit = self.floor + self.scan_cap
        while not test(m):
            m += 1
            if m > limit:
                raise ComputationCapExceeded(f"no member found in [{self.floor}, {limit}]")
        self.floor = m
        return m


def prime_stream(count: int, strict: bool = False) -> list[int]:
    """The odd primes ``3, 5, 7, 11, ...`` from the intersection recursion.

    As written, each step intersects only the countdown-1 set of the prime
    just emitted.  ``strict=True`` instead demands membership for every
    denominator up to the candidate, i.e. the full sieve.
    """
    if count < 1:
        raise InvariantError("count must be >= 1")
    acc = SieveAccumulator([(2, 1)])
    d = 3
    out = [d]
    strict_test = (lambda m: all(_in(k, 1, m) for k in range(1, m + 1))) if strict else None
    while len(out) < count:
        acc.add(d, 1)
        if strict:
            acc.floor = max(acc.floor, d)
        d = 1 + acc.minimum(strict_test)
        out.append(d)
    return out


def twin_stream(count: int) -> list[TwinPair]:
    """Twin pairs ``(3,5), (5,7), (11,13), ...`` from the incremental recursion."""
    if count < 1:
        raise InvariantError("count must be >= 1")
    acc = SieveAccumulator([(3, 1), (3, 3)])
    d = 3
    out = [TwinPair.at(d)]
    while len(out) < count:
        nxt = 1 + acc.minimum()
        for k in range(d + 1, nxt + 1):
            acc.add(k, 1)
            acc.add(k, 3)
        d = nxt
        out.append(TwinPair.at(d))
    return out


class _Truncated:
    """A finite intersection of truncated cycle sets and the range it is exact on."""

    def __init__(self, values: np.ndarray, horizon: int):
        self.values = values
        self.horizon = horizon

    def intersect(self, d: int, c: int, k_max: int) -> None:
        self.values = np.intersect1d(self.values, cycles.ems_array(d, c, k_max), assume_unique=True)
        self.horizon = min(self.horizon, cycles.ems_horizon(d, c, k_max))

    def certified_min(self, i: int) -> int:
        if self.values.size == 0:
            raise TruncationExhausted(f"intersection empty before twin pair #{i}; raise k_max")
        low = int(self.values[0])
        if low > self.horizon:
            raise TruncationExhausted(
                f"minimum {low} lies beyond the exact horizon {self.horizon} at twin pair #{i}; raise k_max"
            )
        return low


def twin_primes_report(count: int, k_max: int, lines: list[str] | None = None) -> list[TwinPair]:
    """Replay of the truncated-set twin-prime program.

    Intersections run over the finite sets ``ems(d, c, k_max)``.  Each
    minimum is accepted only when it falls inside the range where every
    truncated set still equals its infinite counterpart; otherwise
    :class:`TruncationExhausted` is raised.  ``Twin Pair #i: {p, q}`` lines
    are appended to ``lines`` when given.
    """
    if count < 1 or k_max < 1:
        raise InvariantError("count and k_max must be >= 1")
    pairs: list[TwinPair] = []

    def emit(p: int) -> None:
        pairs.append(TwinPair.at(p))
        if lines is not None:
            lines.append(f"Twin Pair #{len(pairs)}: {{{p}, {p + 2}}}")

    live = _Truncated(cycles.ems_array(3, 1, k_max), cycles.ems_horizon(3, 1, k_max))
    live.intersect(3, 3, k_max)
    p = 3
    # the program always reports at least two pairs; stop as soon as we have enough
    if count == 1:
        emit(p)
        return pairs
    q = live.certified_min(2) + 1
    i = 1
    while i < count - 1:
        emit(p)
        for j in range(p + 1, q + 1):
            live.intersect(j, 1, k_max)
            live.intersect(j, 3, k_max)
        p = q
        q = live.certified_min(i + 2) + 1
        i += 1
    emit(p)
    emit(q)
    return pairs
