"""Value types: fractions, annotated triples, sequences and created fractions."""

from __future__ import annotations

import fractions
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, NamedTuple

import numpy as np

from .errors import FareyOverflowError, InvariantError

#: Largest value any numerator/denominator may take (unsigned 64-bit word).
WORD_MAX = 2**64 - 1


def check_word(*values: int) -> None:
    for v in values:
        if v > WORD_MAX or v < 0:
            raise FareyOverflowError(f"value {v} outside the 64-bit word range")


class Fraction(NamedTuple):
    """Irreducible fraction ``n/d`` with ``0 <= n <= d``.

    Instances compare by rational value, not lexicographically.  Use
    :meth:`of` to build a validated instance from untrusted integers.
    """

    n: int
    d: int

    @classmethod
    def of(cls, n: int, d: int) -> "Fraction":
        n, d = int(n), int(d)
        check_word(n, d)
        if d < 1 or n < 0 or n > d:
            raise InvariantError(f"{n}/{d} is not in [0, 1] with positive denominator")
        if gcd(n, d) != 1:
            raise InvariantError(f"{n}/{d} is not irreducible")
        return cls(n, d)

    @classmethod
    def parse(cls, text: str) -> "Fraction":
        """Parse ``"n/d"``."""
        num, sep, den = text.strip().partition("/")
        if not sep:
            raise InvariantError(f"expected n/d, got {text!r}")
        return cls.of(int(num), int(den))

    def value(self) -> fractions.Fraction:
        return fractions.Fraction(self.n, self.d)

    def __float__(self) -> float:
        return self.n / self.d

    def __str__(self) -> str:
        return f"{self.n}/{self.d}"

    def __lt__(self, other):  # type: ignore[override]
        return self.n * other[1] < other[0] * self.d

    def __le__(self, other):  # type: ignore[override]
        return self.n * other[1] <= other[0] * self.d

    def __gt__(self, other):  # type: ignore[override]
        return self.n * other[1] > other[0] * self.d

    def __ge__(self, other):  # type: ignore[override]
        return self.n * other[1] >= other[0] * self.d


class FareyTriple(NamedTuple):
    """A Farey fraction ``n/d`` with its countdown ``s``.

    ``s`` counts the orders remaining until a new fraction is created
    immediately after this one.  The terminal ``1/1`` carries ``s = 0``.
    """

    n: int
    d: int
    s: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.n, self.d)


@dataclass(frozen=True)
class CreatedFraction:
    """A mediant born in the transition from ``F_{d-1}`` to ``F_d``.

    ``s_f`` is its initial countdown (the successor's denominator at birth)
    and ``i_f`` its 1-based position in the birth sequence ``F_d``.
    """

    fraction: Fraction
    s_f: int
    i_f: int

    @property
    def birth_order(self) -> int:
        return self.fraction.d

    @property
    def n(self) -> int:
        return self.fraction.n

    @property
    def d(self) -> int:
        return self.fraction.d


def _frozen(a) -> np.ndarray:
    arr = np.ascontiguousarray(a, dtype=np.int64)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class FareySequence:
    """``F_m`` as three parallel read-only integer arrays.

    Iterating yields :class:`FareyTriple` values in increasing order.
    Construct via :func:`fareyseq.core.generate` or :meth:`from_triples`
    (which validates); the raw constructor trusts its arguments.
    """

    order: int
    n: np.ndarray
    d: np.ndarray
    s: np.ndarray
    _entries: list = field(default=None, repr=False, compare=False)  # type: ignore[assignment]

    def __post_init__(self):
        object.__setattr__(self, "n", _frozen(self.n))
        object.__setattr__(self, "d", _frozen(self.d))
        object.__setattr__(self, "s", _frozen(self.s))

    @classmethod
    def from_triples(cls, order: int, triples) -> "FareySequence":
        rows = [tuple(int(x) for x in t) for t in triples]
        if not rows:
            raise InvariantError("empty sequence")
        arr = np.array(rows, dtype=np.int64).reshape(-1, 3)
        seq = cls(int(order), arr[:, 0], arr[:, 1], arr[:, 2])
        seq.validate()
        return seq

    @property
    def entries(self) -> list[FareyTriple]:
        if self._entries is None:
            rows = [FareyTriple(*t) for t in zip(self.n.tolist(), self.d.tolist(), self.s.tolist())]
            object.__setattr__(self, "_entries", rows)
        return self._entries

    def fractions(self) -> list[Fraction]:
        return [Fraction(a, b) for a, b in zip(self.n.tolist(), self.d.tolist())]

    def __len__(self) -> int:
        return len(self.n)

    def __iter__(self) -> Iterator[FareyTriple]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FareySequence):
            return NotImplemented
        return (
            self.order == other.order
            and np.array_equal(self.n, other.n)
            and np.array_equal(self.d, other.d)
            and np.array_equal(self.s, other.s)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"FareySequence(order={self.order}, len={len(self)})"

    def validate(self) -> None:
        """Raise :class:`InvariantError` unless this is a well-formed ``F_order``.

        Neighbouring fractions must be unimodular (``c*b - a*d == 1``), which
        gives reducedness and strict increase, and every mediant of
        neighbours must overflow the order, which rules out missing fractions.
        """
        m = self.order
        n, d, s = self.n, self.d, self.s
        if m < 1:
            raise InvariantError(f"order must be positive, got {m}")
        if len(n) < 2:
            raise InvariantError("a Farey sequence has at least two entries")
        if (n[0], d[0], s[0]) != (0, 1, 1):
            raise InvariantError(f"first entry must be (0,1,1), got {self.entries[0]}")
        if (n[-1], d[-1], s[-1]) != (1, 1, 0):
            raise InvariantError(f"last entry must be (1,1,0), got {self.entries[-1]}")
        if d.min() < 1 or d.max() > m:
            raise InvariantError(f"denominators must lie in 1..{m}")
        if d.max() > WORD_MAX // 2:
            raise FareyOverflowError("denominators too large for checked arithmetic")
        det = n[1:] * d[:-1] - n[:-1] * d[1:]
        bad = np.flatnonzero(det != 1)
        if bad.size:
            i = int(bad[0])
            raise InvariantError(f"entries {i} and {i + 1} are not Farey neighbours")
        gaps = np.flatnonzero(d[:-1] + d[1:] <= m)
        if gaps.size:
            i = int(gaps[0])
            raise InvariantError(f"a fraction of order <= {m} is missing after entry {i}")
        body_s, body_d = s[:-1], d[:-1]
        bad = np.flatnonzero((body_s < 1) | (body_s > body_d))
        if bad.size:
            raise InvariantError(f"entry {int(bad[0])} has s outside 1..d")
