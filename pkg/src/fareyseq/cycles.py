"""Orders at which a fraction's countdown takes a given value.

For a fraction ``f = n/d`` born in ``F_d`` with initial countdown ``s_f``,
the orders ``m`` at which its countdown equals ``c`` are::

    m_c(f, k) = k*d + s_f - c        if c <= s_f
              = (k+1)*d + s_f - c    if c >  s_f        (k = 1, 2, ...)

an arithmetic progression with modulus ``d``.  The union over all
fractions of denominator ``d`` is a :class:`ResidueClassSet`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from . import core
from .errors import InvariantError


def _check_fraction(f) -> tuple[int, int]:
    n, d = int(f[0]), int(f[1])
    if d < 1 or not 0 <= n <= d or gcd(n, d) != 1:
        raise InvariantError(f"{n}/{d} is not an irreducible fraction in [0, 1]")
    if (n, d) == (1, 1):
        raise InvariantError("1/1 has no initial countdown (its s is the 0 sentinel)")
    return n, d


def s_initial(f, method: str = "fast") -> int:
    """Initial countdown ``s_f`` of ``f``.

    ``method="reference"`` runs the recursion up to ``F_d`` and reads the
    recorded creation; ``method="fast"`` uses ``s_f = -n^{-1} mod d``.
    Seeds ``0/1`` and ``1/2`` give 1 either way.
    """
    n, d = _check_fraction(f)
    if d == 1:
        return 1
    if method == "fast":
        return (-pow(n, -1, d)) % d
    if method == "reference":
        for cf in core.created(d - 1):
            if cf.fraction == (n, d):
                return cf.s_f
        raise AssertionError(f"{n}/{d} was not created in C_{d - 1}")  # pragma: no cover
    raise ValueError(f"unknown method {method!r}")


def _prime_factors(d: int) -> list[int]:
    out, p = [], 2
    while p * p <= d:
        if d % p == 0:
            out.append(p)
            while d % p == 0:
                d //= p
        p += 1
    if d > 1:
        out.append(d)
    return out


def _units(d: int) -> np.ndarray:
    keep = np.ones(d, dtype=bool)
    keep[0] = False
    for p in _prime_factors(d):
        keep[::p] = False
    return np.flatnonzero(keep).astype(np.int64)


def s_initial_table(d: int) -> tuple[np.ndarray, np.ndarray]:
    """Numerators coprime to ``d`` and their ``s_f`` values (fast path, vectorised)."""
    if d < 1:
        raise InvariantError("denominator must be >= 1")
    if d == 1:
        return np.array([0], dtype=np.int64), np.array([1], dtype=np.int64)
    nums = _units(d)
    # n^(phi(d) - 1) is the inverse of n modulo d
    inv = _powmod(nums, len(nums) - 1, d)
    return nums, (-inv) % d


def _powmod(base: np.ndarray, exp: int, mod: int) -> np.ndarray:
    if mod > 3_000_000_000:
        # products of residues must stay inside int64
        return np.array([pow(int(b), exp, mod) for b in base], dtype=np.int64)
    result = np.ones_like(base)
    b = base % mod
    while exp:
        if exp & 1:
            result = result * b % mod
        exp >>= 1
        if exp:
            b = b * b % mod
    return result % mod


def _check_c(c: int, d: int) -> None:
    if not 1 <= c <= d:
        raise InvariantError(f"c={c} out of range 1..{d}: no triple with denominator {d} carries it")


def m_c(f, c: int, k: int, s_f: int | None = None) -> int:
    """The k-th order (k >= 1) at which the countdown of ``f`` equals ``c``."""
    n, d = _check_fraction(f)
    _check_c(c, d)
    if k < 1:
        raise InvariantError("k starts at 1")
    if s_f is None:
        s_f = s_initial((n, d))
    if c <= s_f:
        return k * d + s_f - c
    return (k + 1) * d + s_f - c


@dataclass(frozen=True)
class Progression:
    """``{m >= min_element : m ≡ residue (mod modulus)}``."""

    modulus: int
    residue: int
    min_element: int

    def __post_init__(self):
        if self.modulus < 1 or not 0 <= self.residue < self.modulus:
            raise InvariantError(f"bad progression {self}")
        if self.min_element % self.modulus != self.residue:
            raise InvariantError(f"min_element {self.min_element} not ≡ {self.residue} (mod {self.modulus})")
        if self.min_element < self.modulus:
            raise InvariantError("min_element must be at least the modulus")

    def __contains__(self, m: int) -> bool:
        return m >= self.min_element and m % self.modulus == self.residue

    def take(self, k_max: int) -> list[int]:
        return [self.min_element + j * self.modulus for j in range(k_max)]

    def render(self) -> str:
        return f"{{m ≡ {self.residue} (mod {self.modulus}), m ≥ {self.min_element}}}"


class ResidueClassSet:
    """A finite union of progressions sharing one modulus, distinct residues."""

    __slots__ = ("modulus", "progressions", "_by_residue", "label")

    def __init__(self, modulus: int, progressions, label: str = ""):
        progs = tuple(sorted(progressions, key=lambda p: p.residue))
        by_res = {}
        for p in progs:
            if p.modulus != modulus:
                raise InvariantError("all progressions must share the modulus")
            if p.residue in by_res:
                raise InvariantError(f"duplicate residue {p.residue} (mod {modulus})")
            by_res[p.residue] = p.min_element
        self.modulus = modulus
        self.progressions = progs
        self._by_residue = by_res
        self.label = label

    def __contains__(self, m: int) -> bool:
        lo = self._by_residue.get(m % self.modulus)
        return lo is not None and m >= lo

    def __len__(self) -> int:
        return len(self.progressions)

    def __eq__(self, other):
        if not isinstance(other, ResidueClassSet):
            return NotImplemented
        return self.modulus == other.modulus and self.progressions == other.progressions

    def __repr__(self) -> str:
        return f"ResidueClassSet(modulus={self.modulus}, progressions={list(self.progressions)})"

    @property
    def residues(self) -> list[int]:
        return [p.residue for p in self.progressions]

    def render(self) -> str:
        body = " ∪ ".join(p.render() for p in self.progressions) or "∅"
        return f"{self.label} :: {body}" if self.label else body


def contains(s, m: int) -> bool:
    """Membership of order ``m`` in a :class:`Progression` or :class:`ResidueClassSet`."""
    return m in s


def cycle_set(f, c: int, s_f: int | None = None) -> Progression:
    """All orders at which the countdown of ``f`` equals ``c``."""
    n, d = _check_fraction(f)
    _check_c(c, d)
    if s_f is None:
        s_f = s_initial((n, d))
    return Progression(d, (s_f - c) % d, m_c((n, d), c, 1, s_f))


def cycle_set_for_denominator(d: int, c: int) -> ResidueClassSet:
    """Orders at which some fraction with denominator ``d`` has countdown ``c``."""
    _check_c(c, d)
    nums, sfs = s_initial_table(d)
    progs = [cycle_set((n, d), c, s) for n, s in zip(nums.tolist(), sfs.tolist())]
    return ResidueClassSet(d, progs, label=f"d={d} c={c}")


@lru_cache(maxsize=None)
def _sf_residues(d: int) -> bytes:
    """Byte ``x`` is 1 when some fraction with denominator ``d`` has ``s_f ≡ x (mod d)``."""
    _, sfs = s_initial_table(d)
    table = np.zeros(d, dtype=np.uint8)
    table[sfs % d] = 1
    return table.tobytes()


def table_contains(d: int, c: int, m: int) -> bool:
    """``m in cycle_set_for_denominator(d, c)`` without building the set.

    The progression containing ``m`` (if any) belongs to the fraction with
    ``s_f ≡ m + c (mod d)``; it is unique because a denominator's ``s_f``
    values are pairwise distinct.
    """
    if not 1 <= c <= d:
        _check_c(c, d)
    x = (m + c) % d
    if not _sf_residues(d)[x]:
        return False
    s_f = x or d
    start = d + s_f - c if c <= s_f else 2 * d + s_f - c
    return m >= start


def ems_array(d: int, c: int, k_max: int) -> np.ndarray:
    _check_c(c, d)
    if k_max < 1:
        raise InvariantError("k_max must be >= 1")
    nums, sfs = s_initial_table(d)
    first = np.where(c <= sfs, d + sfs - c, 2 * d + sfs - c)
    ks = np.arange(k_max, dtype=np.int64) * d
    return np.sort((first[:, None] + ks[None, :]).ravel())


def ems(d: int, c: int, k_max: int) -> list[int]:
    """``{m_c(f, k) : d_f = d, 1 <= k <= k_max}`` as a sorted list."""
    return ems_array(d, c, k_max).tolist()


def ems_horizon(d: int, c: int, k_max: int) -> int:
    """Largest order up to which ``ems(d, c, k_max)`` agrees with the full set.

    The first element missing from the truncation is some progression's
    ``(k_max + 1)``-th term.
    """
    _, sfs = s_initial_table(d)
    first = np.where(c <= sfs, d + sfs - c, 2 * d + sfs - c)
    return int(first.min()) + k_max * d - 1


__all__ = [
    "Progression",
    "ResidueClassSet",
    "contains",
    "cycle_set",
    "cycle_set_for_denominator",
    "ems",
    "ems_array",
    "ems_horizon",
    "m_c",
    "s_initial",
    "s_initial_table",
    "table_contains",
]
