"""Checks of the structural properties of the triple recursion, plus the
gap formula, the order-index formula and the Franel-Landau sum."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from math import gcd
from typing import IO, Iterator

import numpy as np

from . import core, oracle
from .cycles import s_initial
from .errors import InvariantError
from .model import CreatedFraction, FareyTriple, Fraction
from .serialize import triple_json

PROPERTY_IDS = tuple(range(1, 8))


@dataclass(frozen=True)
class PropertyReport:
    property_id: int
    order: int
    holds: bool
    counterexample: tuple[FareyTriple, ...] | None = None
    detail: str = ""

    def __post_init__(self):
        if not self.holds and not self.counterexample:
            raise ValueError("a failing report needs a counterexample")

    def to_json(self) -> str:
        ce = None
        if self.counterexample is not None:
            ce = [json.loads(triple_json(*t)) for t in self.counterexample]
        return json.dumps(
            {"property": self.property_id, "order": self.order, "holds": self.holds,
             "counterexample": ce, "detail": self.detail},
            separators=(",", ":"),
        )


def _triple(seq, i) -> FareyTriple:
    return FareyTriple(int(seq.n[i]), int(seq.d[i]), int(seq.s[i]))


def _ok(pid, m):
    return PropertyReport(pid, m, True)


def _fail(pid, m, triples, detail):
    return PropertyReport(pid, m, False, tuple(triples), detail)


def _prop1(reg, m):
    """C_m consists exactly of the n/(m+1) with n < m+1 and gcd(n, m+1) = 1."""
    nxt, cm = core.step(reg.sequence, validate=False)
    try:
        nxt.validate()
    except InvariantError as exc:
        return _fail(1, m, [nxt[-1]], f"F_{m + 1} is not a Farey sequence: {exc}")
    got = {(cf.n, cf.d): cf for cf in cm}
    want = {(n, m + 1) for n in range(m + 1) if gcd(n, m + 1) == 1}
    for key, cf in got.items():
        if key not in want:
            return _fail(1, m, [FareyTriple(cf.n, cf.d, cf.s_f)], "created but not expected")
    for key in sorted(want - got.keys()):
        return _fail(1, m, [FareyTriple(key[0], key[1], 0)], "expected but not created (s shown as 0)")
    return _ok(1, m)


def _prop2(reg, m):
    """Triples sharing a denominator carry distinct s."""
    seq = reg.sequence
    order = np.lexsort((seq.s, seq.d))
    d, s = seq.d[order], seq.s[order]
    dup = np.flatnonzero((d[1:] == d[:-1]) & (s[1:] == s[:-1]))
    if dup.size:
        i, j = order[dup[0]], order[dup[0] + 1]
        return _fail(2, m, [_triple(seq, i), _triple(seq, j)], "same denominator, same s")
    return _ok(2, m)


def _prop3(reg, m):
    """Past the premise order, (n, d, s) in F_m reappears in F_{m+d} (k = 1)."""
    seq = reg.sequence
    body = slice(0, len(seq) - 1)
    d, sf = seq.d[body], reg.s_f[body]
    eligible = m >= (d - 1) + sf
    for nxt in core.iter_following(seq, 2 * m):
        j = nxt.order - m
        mask = (d == j) & eligible
        if not mask.any():
            continue
        later = nxt.s[:-1][nxt.d[:-1] == j]
        here_idx = np.flatnonzero(d == j)
        here_s = seq.s[here_idx]
        bad = np.flatnonzero((here_s != later) & mask[here_idx])
        if bad.size:
            i = int(here_idx[bad[0]])
            return _fail(3, m, [_triple(seq, i)], f"s differs in F_{nxt.order}")
    return _ok(3, m)


def _prop4(reg, m):
    """s = d - (m - s_f) mod d for every non-terminal triple."""
    seq = reg.sequence
    d, s, sf = seq.d[:-1], seq.s[:-1], reg.s_f[:-1]
    bad = np.flatnonzero(s != d - (m - sf) % d)
    if bad.size:
        return _fail(4, m, [_triple(seq, int(bad[0]))], "s disagrees with the cycle law")
    return _ok(4, m)


def _prop5(reg, m):
    """s = 1 exactly when (m - s_f + 1) mod d = 0."""
    seq = reg.sequence
    d, s, sf = seq.d[:-1], seq.s[:-1], reg.s_f[:-1]
    bad = np.flatnonzero((s == 1) != ((m - sf + 1) % d == 0))
    if bad.size:
        return _fail(5, m, [_triple(seq, int(bad[0]))], "s = 1 disagrees with the divisibility test")
    return _ok(5, m)


def _prop6(reg, m):
    """s = 1 triples have pairwise distinct denominators."""
    seq = reg.sequence
    ones = np.flatnonzero(seq.s == 1)
    dens = seq.d[ones]
    order = np.argsort(dens, kind="stable")
    dup = np.flatnonzero(dens[order][1:] == dens[order][:-1])
    if dup.size:
        i, j = ones[order[dup[0]]], ones[order[dup[0] + 1]]
        return _fail(6, m, [_triple(seq, i), _triple(seq, j)], "two s = 1 triples share a denominator")
    return _ok(6, m)


def _prop7(reg, m):
    """m + 1 is prime iff every denominator 1..m has an s = 1 triple."""
    seq = reg.sequence
    covered = set(seq.d[seq.s == 1].tolist())
    all_covered = covered >= set(range(1, m + 1))
    prime = oracle.trial_division_is_prime(m + 1)
    if prime == all_covered:
        return _ok(7, m)
    if prime:
        missing = min(set(range(1, m + 1)) - covered)
        i = int(np.flatnonzero(seq.d == missing)[0])
        return _fail(7, m, [_triple(seq, i)], f"{m + 1} is prime but denominator {missing} has no s = 1")
    first = int(np.flatnonzero(seq.s == 1)[0])
    return _fail(7, m, [_triple(seq, first)], f"{m + 1} is composite yet all denominators have s = 1")


_CHECKS = {1: _prop1, 2: _prop2, 3: _prop3, 4: _prop4, 5: _prop5, 6: _prop6, 7: _prop7}


def check_property(property_id: int, m: int, reg: core.CreationRegistry | None = None) -> PropertyReport:
    """Evaluate one of the seven properties exhaustively at order ``m``.

    Pass ``reg`` (a registry for ``F_m``) to skip regeneration when
    checking many properties at the same order.
    """
    if property_id not in _CHECKS:
        raise InvariantError(f"property id must be in 1..7, got {property_id}")
    if m < 2:
        raise InvariantError("properties are stated for m >= 2")
    if reg is None:
        reg = core.registry(m)
    elif reg.order != m:
        raise InvariantError(f"registry is for F_{reg.order}, not F_{m}")
    return _CHECKS[property_id](reg, m)


def check_all(m: int, ids=PROPERTY_IDS, reg: core.CreationRegistry | None = None) -> list[PropertyReport]:
    reg = reg if reg is not None else core.registry(m)
    return [check_property(i, m, reg) for i in ids]


# -- gaps and indices ---------------------------------------------------------

def gap(cf, m: int, s_f: int | None = None) -> Fraction:
    """Distance from a fraction to its successor in ``F_m``.

    ``cf`` is a :class:`CreatedFraction` or a plain fraction (whose ``s_f``
    is then looked up, seeds included).
    """
    if isinstance(cf, CreatedFraction):
        f, s_f = cf.fraction, cf.s_f if s_f is None else s_f
    else:
        f = Fraction(int(cf[0]), int(cf[1]))
        if s_f is None:
            s_f = s_initial(f)
    d = f.d
    if m < d:
        raise InvariantError(f"{f} is not in F_{m}")
    return Fraction(1, ((m - s_f) // d) * d * d + s_f * d)


def _window_terms(reg: core.CreationRegistry, m: int, d_f: int, below: np.ndarray) -> int:
    seq = reg.sequence
    d, sf = seq.d[below], reg.s_f[below]
    now = np.maximum((m - sf) // d, 0)
    then = np.maximum((d_f - sf) // d, 0)
    return int((now - then).sum())


def order_index(f, m: int, reg: core.CreationRegistry) -> int:
    """1-based position of ``f`` in ``F_m`` from creation counts alone.

    Adds to the birth index ``i_f`` the number of insertions made right
    after each smaller fraction ``g`` between orders ``d_f`` and ``m``.
    Each count is a floor clamped at zero, so fractions born after ``F_{d_f}``
    contribute only their own later insertions.
    """
    if reg.order != m:
        raise InvariantError(f"registry is for F_{reg.order}, not F_{m}")
    n, d_f = int(f[0]), int(f[1])
    pos = reg.position((n, d_f))
    i_f = int(reg.i_f[pos])
    seq = reg.sequence
    below = seq.n * d_f < n * seq.d
    return i_f + _window_terms(reg, m, d_f, below)


# -- Franel-Landau --------------------------------------------------------------

@dataclass(frozen=True)
class FranelRow:
    order: int
    statistic: float
    count: int

    def __post_init__(self):
        if self.statistic < 0:
            raise ValueError("the statistic is a sum of squares")


def _franel_sum(index: np.ndarray, n: np.ndarray, d: np.ndarray) -> float:
    total = len(index)
    terms = (index / total - n / d) ** 2
    return math.fsum(terms.tolist())


def franel_statistic(m: int, method: str = "position") -> float:
    """Sum over ``F_m`` of ``(I_m(f) / (Phi(m) + 1) - f)**2``.

    ``method="position"`` takes ``I_m(f)`` as the position in the generated
    sequence; ``method="formula"`` rebuilds every index with :func:`order_index`.
    """
    if method == "position":
        seq = core.generate(m)
        return _franel_sum(np.arange(1, len(seq) + 1), seq.n, seq.d)
    if method == "formula":
        reg = core.registry(m)
        seq = reg.sequence
        idx = np.array([order_index((a, b), m, reg) for a, b in zip(seq.n.tolist(), seq.d.tolist())])
        return _franel_sum(idx, seq.n, seq.d)
    raise ValueError(f"unknown method {method!r}")


class _IndexEngine(core._Engine):
    """Engine that also carries the m-independent part of the index formula.

    ``base[i] = i_f - sum_{g < f} max(0, floor((d_f - s_g) / d_g))``, fixed at
    the birth of ``f``.  Smaller ``g`` born after ``F_{d_f}`` contribute 0 to
    that sum (``d_f - s_g > -d_g``), so it can be taken over ``F_{d_f}``.
    """

    __slots__ = ("base",)

    def __init__(self):
        super().__init__()
        self.base = np.array([1, 2], dtype=np.int64)

    def advance(self, track: bool = True) -> np.ndarray:
        born = super().advance(track=True)
        m = self.order
        clamp = np.maximum((m - self.sf) // self.d, 0)
        before = np.concatenate(([0], np.cumsum(clamp)[:-1]))
        old = np.delete(np.arange(len(self.d)), born)
        base = np.empty(len(self.d), dtype=np.int64)
        base[old] = self.base
        base[born] = self.idx[born] - before[born]
        self.base = base
        return born

    def formula_index(self) -> np.ndarray:
        m = self.order
        now = np.maximum((m - self.sf) // self.d, 0)
        before = np.concatenate(([0], np.cumsum(now)[:-1]))
        return self.base + before


def franel_dual(m_max: int) -> Iterator[tuple[int, float, float, int]]:
    """Yield ``(m, positional, formula, len(F_m))`` for ``m = 1 .. m_max`` in one pass."""
    core._check_order(m_max)
    eng = _IndexEngine()
    while True:
        m, n, d = eng.order, eng.n, eng.d
        pos = _franel_sum(np.arange(1, len(n) + 1), n, d)
        yield m, pos, _franel_sum(eng.formula_index(), n, d), len(n)
        if m == m_max:
            return
        eng.advance()


def franel_table(m_max: int, verify: bool = False, rtol: float = 1e-12) -> list[FranelRow]:
    """Rows ``(m, statistic, Phi(m) + 1)`` for ``m = 1 .. m_max``.

    With ``verify`` every row is recomputed through the index formula and
    an ``AssertionError`` is raised if the two disagree beyond ``rtol``.
    """
    if m_max < 1:
        raise InvariantError("m_max must be >= 1")
    if verify:
        rows = []
        for m, pos, form, count in franel_dual(m_max):
            if abs(pos - form) > rtol * abs(pos):
                raise AssertionError(f"franel paths disagree at m={m}: {pos!r} vs {form!r}")
            rows.append(FranelRow(m, pos, count))
        return rows
    return [
        FranelRow(seq.order, _franel_sum(np.arange(1, len(seq) + 1), seq.n, seq.d), len(seq))
        for seq in core.iter_sequences(m_max)
    ]


def write_franel_csv(rows, fp: IO[str]) -> None:
    w = csv.writer(fp, lineterminator="\n")
    w.writerow(["m", "statistic", "count"])
    for r in rows:
        w.writerow([r.order, f"{r.statistic:.15g}", r.count])
