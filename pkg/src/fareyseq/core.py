"""Farey sequence generation: the next-term recursion and the triple recursion.

The triple recursion carries, for every fraction, a countdown ``s`` to the
next order in which a mediant is inserted right after it.  One step turns
``F_m`` into ``F_{m+1}``::

    for each non-terminal (n, d, s) followed by (n', d', .):
        s > 1:  emit (n, d, s - 1)
        s == 1: emit (n, d, d) then the created mediant (n + n', d + d', d')
    emit (1, 1, 0)

Two implementations exist: :func:`iter_step` follows the loop literally over
any iterable of triples, :func:`step` does the same work on numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator

import numpy as np

from .errors import ComputationCapExceeded, InvariantError
from .model import CreatedFraction, FareySequence, FareyTriple, Fraction, check_word

#: Orders above this are refused by the materialising generators.
MAX_ORDER = 10_000


def _check_order(m: int) -> None:
    if m < 1:
        raise InvariantError(f"order must be >= 1, got {m}")
    if m > MAX_ORDER:
        raise ComputationCapExceeded(f"order {m} exceeds MAX_ORDER={MAX_ORDER}")


# -- totients -----------------------------------------------------------------

def totient(k: int) -> int:
    """Euler's phi by trial-division factorisation."""
    if k < 1:
        raise InvariantError(f"totient needs k >= 1, got {k}")
    result, rest = k, k
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if rest > 1:
        result -= result // rest
    return result


def totient_summatory(m: int) -> int:
    """``Phi(m) = phi(1) + ... + phi(m)``; ``len(F_m) == Phi(m) + 1``."""
    if m < 1:
        raise InvariantError(f"totient_summatory needs m >= 1, got {m}")
    return sum(totient(k) for k in range(1, m + 1))


# -- the classic next-term recursion -----------------------------------------

def mediant(a: Fraction, b: Fraction) -> Fraction:
    """``(a.n + b.n) / (a.d + b.d)``; refuses results that would need reducing."""
    if not a < b:
        raise InvariantError(f"mediant needs a < b, got {a} and {b}")
    n, d = a[0] + b[0], a[1] + b[1]
    check_word(n, d)
    if gcd(n, d) != 1:
        raise InvariantError(f"{a} and {b} are not Farey neighbours ({n}/{d} is reducible)")
    return Fraction(n, d)


def next_term(f_prev: Fraction, f_curr: Fraction, m: int) -> Fraction:
    """Successor of ``f_curr`` in ``F_m`` given its predecessor ``f_prev``."""
    a, b = f_prev
    c, d = f_curr
    # neighbours in F_m: unimodular, and their mediant does not fit in F_m
    if c * b - a * d != 1 or b + d <= m or max(b, d) > m or (c, d) == (1, 1):
        raise InvariantError(f"{f_prev}, {f_curr} are not consecutive in F_{m}")
    q = (f_prev[1] + m) // f_curr[1]
    n = q * f_curr[0] - f_prev[0]
    d = q * f_curr[1] - f_prev[1]
    check_word(abs(q * f_curr[1]), abs(q * f_curr[0]))
    if d < 1 or d > m or n < 0 or n > d or n * f_curr[1] - f_curr[0] * d != 1:
        raise InvariantError(f"{f_prev}, {f_curr} are not consecutive in F_{m}")
    return Fraction(n, d)


def iter_classic(m: int) -> Iterator[Fraction]:
    """Stream ``F_m`` in O(1) memory with :func:`next_term`."""
    if m < 1:
        raise InvariantError(f"order must be >= 1, got {m}")
    prev, curr = Fraction(0, 1), Fraction(1, m)
    yield prev
    yield curr
    while curr != (1, 1):
        prev, curr = curr, next_term(prev, curr, m)
        yield curr


def generate_classic(m: int) -> list[Fraction]:
    _check_order(m)
    return list(iter_classic(m))


# -- the triple recursion ------------------------------------------------------

def initial_sequence() -> FareySequence:
    """``F_2 = (0,1,1) || (1,2,1) || (1,1,0)``."""
    return FareySequence(2, [0, 1, 1], [1, 2, 1], [1, 1, 0])


def _base_sequence() -> FareySequence:
    # One step from this reproduces initial_sequence().
    return FareySequence(1, [0, 1], [1, 1], [1, 0])


def iter_step(triples: Iterable) -> Iterator[FareyTriple]:
    """Literal streaming form of one recursion step.

    Consumes the triples of ``F_m`` and yields those of ``F_{m+1}`` with one
    triple of look-ahead.  Only the terminal ``(1,1,0)`` is checked.
    """
    it = iter(triples)
    try:
        cur = FareyTriple(*next(it))
    except StopIteration:
        raise InvariantError("empty sequence") from None
    for nxt in it:
        nxt = FareyTriple(*nxt)
        n, d, s = cur
        if s > 1:
            yield FareyTriple(n, d, s - 1)
        else:
            yield FareyTriple(n, d, d)
            cn, cd = n + nxt.n, d + nxt.d
            check_word(cn, cd)
            yield FareyTriple(cn, cd, nxt.d)
        cur = nxt
    if tuple(cur) != (1, 1, 0):
        raise InvariantError(f"sequence must end with (1,1,0), got {tuple(cur)}")
    yield FareyTriple(1, 1, 0)


@dataclass(frozen=True, eq=False)
class CreationRegistry:
    """Creation metadata for every fraction of ``F_order``, aligned with it.

    ``s_f[i]`` and ``i_f[i]`` belong to the i-th fraction of the sequence.
    Seeds follow the ``F_1`` convention: ``0/1`` has ``s_f = 1, i_f = 1``
    and ``1/1`` has ``i_f = 2`` with ``s_f = 0`` as a sentinel.
    """

    sequence: FareySequence
    s_f: np.ndarray
    i_f: np.ndarray

    @property
    def order(self) -> int:
        return self.sequence.order

    def position(self, f) -> int:
        """0-based position of fraction ``f`` in the sequence."""
        n, d = int(f[0]), int(f[1])
        seq = self.sequence
        # fractions are increasing, so bisect on the cross-multiplied sign
        lo, hi = 0, len(seq)
        sn, sd = seq.n, seq.d
        while lo < hi:
            mid = (lo + hi) // 2
            if int(sn[mid]) * d < n * int(sd[mid]):
                lo = mid + 1
            else:
                hi = mid
        if lo == len(seq) or (int(sn[lo]), int(sd[lo])) != (n, d):
            raise InvariantError(f"{n}/{d} is not in F_{seq.order}")
        return lo

    def created_fraction(self, f) -> CreatedFraction:
        i = self.position(f)
        if self.sequence.d[i] < 2:
            raise InvariantError(f"{f[0]}/{f[1]} is a seed, not a created fraction")
        return CreatedFraction(Fraction(int(f[0]), int(f[1])), int(self.s_f[i]), int(self.i_f[i]))


class _Engine:
    """Mutable array state advanced in place of repeated object building."""

    __slots__ = ("order", "n", "d", "s", "sf", "idx")

    def __init__(self):
        self.order = 1
        self.n = np.array([0, 1], dtype=np.int64)
        self.d = np.array([1, 1], dtype=np.int64)
        self.s = np.array([1, 0], dtype=np.int64)
        self.sf = np.array([1, 0], dtype=np.int64)
        self.idx = np.array([1, 2], dtype=np.int64)

    def advance(self, track: bool = True) -> np.ndarray:
        """Step to the next order; returns the insertion points of new entries."""
        n, d, s = self.n, self.d, self.s
        at = np.flatnonzero(s[:-1] == 1)
        s = s - 1
        s[at] = d[at]
        s[-1] = 0
        succ_d = d[at + 1]
        self.n = np.insert(n, at + 1, n[at] + n[at + 1])
        self.d = np.insert(d, at + 1, d[at] + succ_d)
        self.s = np.insert(s, at + 1, succ_d)
        self.order += 1
        if self.order > MAX_ORDER:
            raise ComputationCapExceeded(f"order {self.order} exceeds MAX_ORDER={MAX_ORDER}")
        # positions (0-based) of the new entries in the new arrays
        born = at + 1 + np.arange(len(at))
        if track:
            self.sf = np.insert(self.sf, at + 1, succ_d)
            self.idx = np.insert(self.idx, at + 1, born + 1)
        return born

    @classmethod
    def from_sequence(cls, seq: FareySequence) -> "_Engine":
        eng = cls.__new__(cls)
        eng.order, eng.n, eng.d, eng.s = seq.order, seq.n, seq.d, seq.s
        return eng

    def sequence(self) -> FareySequence:
        return FareySequence(self.order, self.n, self.d, self.s)

    def registry(self) -> CreationRegistry:
        return CreationRegistry(self.sequence(), self.sf.copy(), self.idx.copy())

    def created(self, born: np.ndarray) -> list[CreatedFraction]:
        return [
            CreatedFraction(Fraction(a, b), c, i + 1)
            for a, b, c, i in zip(
                self.n[born].tolist(), self.d[born].tolist(), self.s[born].tolist(), born.tolist()
            )
        ]


def step(seq: FareySequence, validate: bool = True) -> tuple[FareySequence, list[CreatedFraction]]:
    """Advance ``F_m`` to ``F_{m+1}``; also return ``C_m`` in increasing order.

    Each created fraction carries ``s_f`` (its successor's denominator) and
    ``i_f`` (1-based position in the new sequence).
    """
    if validate:
        seq.validate()
    elif (seq.n[-1], seq.d[-1], seq.s[-1]) != (1, 1, 0):
        raise InvariantError("sequence must end with (1,1,0)")
    if seq.order + 1 > MAX_ORDER:
        raise ComputationCapExceeded(f"order {seq.order + 1} exceeds MAX_ORDER={MAX_ORDER}")
    eng = _Engine.from_sequence(seq)
    born = eng.advance(track=False)
    return eng.sequence(), eng.created(born)


def iter_sequences(m_max: int, with_registry: bool = False) -> Iterator:
    """Yield ``F_1, ..., F_{m_max}`` (or their registries) in one pass."""
    _check_order(m_max)
    eng = _Engine()
    yield eng.registry() if with_registry else eng.sequence()
    while eng.order < m_max:
        eng.advance(track=with_registry)
        yield eng.registry() if with_registry else eng.sequence()


def iter_following(seq: FareySequence, m_max: int) -> Iterator[FareySequence]:
    """Yield ``F_{m+1}, ..., F_{m_max}`` starting from a trusted ``F_m``."""
    _check_order(m_max)
    eng = _Engine.from_sequence(seq)
    while eng.order < m_max:
        eng.advance(track=False)
        yield eng.sequence()


def iter_created(m_max: int) -> Iterator[tuple[int, list[CreatedFraction]]]:
    """Yield ``(m, C_m)`` for ``m = 1 .. m_max``."""
    _check_order(m_max + 1)
    eng = _Engine()
    while eng.order <= m_max:
        m = eng.order
        born = eng.advance(track=False)
        yield m, eng.created(born)


def generate(m: int) -> FareySequence:
    """``F_m`` with its s annotations, iterated from ``F_1``."""
    _check_order(m)
    eng = _Engine()
    while eng.order < m:
        eng.advance(track=False)
    return eng.sequence()


def registry(m: int) -> CreationRegistry:
    _check_order(m)
    eng = _Engine()
    while eng.order < m:
        eng.advance()
    return eng.registry()


def created(m: int) -> list[CreatedFraction]:
    """``C_m``: the fractions inserted going from ``F_m`` to ``F_{m+1}``."""
    _check_order(m + 1)
    eng = _Engine()
    while eng.order < m:
        eng.advance(track=False)
    return eng.created(eng.advance(track=False))


def iter_triples(m: int) -> Iterator[FareyTriple]:
    """Stream the triples of ``F_m`` without materialising the sequence.

    Fractions come from :func:`iter_classic`; each countdown follows from
    the periodic law ``s = d - ((m - s_f) mod d)`` with ``s_f`` recovered as
    ``-n^{-1} mod d``.  Both shortcuts are checked against :func:`generate`
    in the test suite.
    """
    for n, d in iter_classic(m):
        if d == 1:
            yield FareyTriple(n, 1, 1 - n)
            continue
        s_f = (-pow(n, -1, d)) % d
        yield FareyTriple(n, d, d - (m - s_f) % d)


def is_unimodular_chain(fracs: list) -> bool:
    return all(c[0] * b[1] - b[0] * c[1] == 1 for b, c in zip(fracs, fracs[1:]))


__all__ = [
    "MAX_ORDER",
    "CreationRegistry",
    "created",
    "generate",
    "generate_classic",
    "initial_sequence",
    "is_unimodular_chain",
    "iter_classic",
    "iter_created",
    "iter_following",
    "iter_sequences",
    "iter_step",
    "iter_triples",
    "mediant",
    "next_term",
    "registry",
    "step",
    "totient",
    "totient_summatory",
]
