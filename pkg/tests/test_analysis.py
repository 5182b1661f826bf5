import io
from fractions import Fraction as Q

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fareyseq import analysis, core
from fareyseq.analysis import PropertyReport
from fareyseq.core import CreationRegistry
from fareyseq.errors import InvariantError
from fareyseq.model import CreatedFraction, Fraction


def test_property_examples(registries):
    # s = 3 - (5 - 2) mod 3 = 3 for 1/3 in F_5, with s_f(1/3) = 2
    assert (1, 3, 3) in registries[5].sequence.entries
    assert analysis.check_property(4, 5).holds
    r7 = analysis.check_property(7, 4)
    assert r7.holds
    ones = {d for _, d, s in registries[4].sequence.entries if s == 1}
    assert ones == {1, 2, 3, 4}
    assert analysis.check_property(2, 2).holds


def test_all_properties_hold_small(registries):
    for m in range(2, 41):
        reports = analysis.check_all(m, reg=registries[m])
        assert all(r.holds for r in reports), [r for r in reports if not r.holds]


def test_invalid_property_id():
    with pytest.raises(InvariantError):
        analysis.check_property(8, 5)
    with pytest.raises(InvariantError):
        analysis.check_property(1, 1)


def _tampered(reg, pos, s=None, s_f=None):
    seq = reg.sequence
    ss, sf = seq.s.copy(), reg.s_f.copy()
    if s is not None:
        ss[pos] = s
    if s_f is not None:
        sf[pos] = s_f
    bad = type(seq)(seq.order, seq.n, seq.d, ss)
    return CreationRegistry(bad, sf, reg.i_f)


def _den(seq, d, k=0):
    return int(np.flatnonzero(seq.d == d)[k])


TAMPERS = {
    # a sibling's s copied onto another denominator-7 fraction
    2: lambda reg: _tampered(reg, _den(reg.sequence, 7, 0), s=int(reg.sequence.s[_den(reg.sequence, 7, 1)])),
    # s above d cannot recur with period d
    3: lambda reg: _tampered(reg, _den(reg.sequence, 7), s=9),
    4: lambda reg: _tampered(reg, _den(reg.sequence, 7), s_f=int(reg.s_f[_den(reg.sequence, 7)]) % 6 + 1),
    # moves the s = 1 fraction of denominator 5 off its divisibility slot
    5: lambda reg: _tampered(reg, int(np.flatnonzero((reg.sequence.d == 5) & (reg.sequence.s == 1))[0]), s_f=1),
}


@pytest.mark.parametrize("pid", sorted(TAMPERS))
def test_checks_detect_corruption(registries, pid):
    report = analysis.check_property(pid, 12, TAMPERS[pid](registries[12]))
    assert not report.holds
    assert report.counterexample


def test_property6_detects_duplicate_ones(registries):
    reg = registries[12]
    seq = reg.sequence
    fives = np.flatnonzero(seq.d == 5)
    target = next(int(i) for i in fives if seq.s[i] != 1)
    report = analysis.check_property(6, 12, _tampered(reg, target, s=1))
    assert not report.holds and len(report.counterexample) == 2


def test_property7_detects_composite_mismatch(registries):
    reg = registries[8]  # 9 is composite: some denominator lacks s = 1
    assert analysis.check_property(7, 8, reg).holds
    seq = reg.sequence
    ss = seq.s.copy()
    # force an s = 1 on every missing denominator
    for d in range(1, 9):
        if not ((seq.d == d) & (seq.s == 1)).any():
            ss[int(np.flatnonzero(seq.d == d)[0])] = 1
    fake = CreationRegistry(type(seq)(8, seq.n, seq.d, ss), reg.s_f, reg.i_f)
    assert not analysis.check_property(7, 8, fake).holds


def test_report_json():
    rep = PropertyReport(2, 5, False, ((1, 5, 4), (2, 5, 4)), "x")
    assert rep.to_json() == (
        '{"property":2,"order":5,"holds":false,"counterexample":'
        '[{"n":1,"d":5,"s":4},{"n":2,"d":5,"s":4}],"detail":"x"}'
    )
    with pytest.raises(ValueError):
        PropertyReport(2, 5, False)


def test_gap_examples():
    assert analysis.gap(CreatedFraction(Fraction(1, 3), 2, 2), 4) == (1, 6)
    assert analysis.gap(CreatedFraction(Fraction(1, 3), 2, 2), 5) == (1, 15)
    assert analysis.gap((0, 1), 7) == (1, 7)
    assert Q(1, 2) - Q(1, 3) == Q(1, 6) and Q(2, 5) - Q(1, 3) == Q(1, 15)
    with pytest.raises(InvariantError):
        analysis.gap((1, 5), 4)


def test_gap_matches_successor_differences(registries):
    for m, reg in registries.items():
        seq = reg.sequence
        fr = seq.fractions()
        for i in range(len(fr) - 1):
            g = analysis.gap(fr[i], m, int(reg.s_f[i]))
            assert g.value() == fr[i + 1].value() - fr[i].value()


def test_order_index_examples(registries):
    assert analysis.order_index((1, 2), 7, registries[7]) == 10
    assert analysis.order_index((2, 3), 5, registries[5]) == 8
    assert analysis.order_index((1, 2), 2, registries[2]) == 2
    with pytest.raises(InvariantError):
        analysis.order_index((1, 2), 7, registries[6])
    with pytest.raises(InvariantError):
        analysis.order_index((2, 9), 7, registries[7])


def test_unclamped_reading_would_fail(registries):
    # m = 4, f = 1/2: without clamping, 2/3 is absent but 1/3 (born at 3 > 2)
    # contributes floor((2 - 2)/3) = 0 and 1/4 contributes floor((2-3)/4) = -1
    reg = registries[4]
    seq = reg.sequence
    below = seq.n * 2 < 1 * seq.d
    d, sf = seq.d[below], reg.s_f[below]
    raw = int(((4 - sf) // d - (2 - sf) // d).sum()) + 2
    assert raw == 5
    assert analysis.order_index((1, 2), 4, reg) == 4


def test_order_index_matches_positions(registries):
    for m in range(2, 31):
        reg = registries[m]
        fr = reg.sequence.fractions()
        assert [analysis.order_index(f, m, reg) for f in fr] == list(range(1, len(fr) + 1))


def test_franel_examples():
    assert analysis.franel_statistic(1) == pytest.approx(0.25, abs=1e-15)
    assert analysis.franel_statistic(2) == pytest.approx(5 / 36, abs=1e-15)
    a, b = analysis.franel_statistic(50), analysis.franel_statistic(50, method="formula")
    assert a == pytest.approx(b, rel=1e-12)
    with pytest.raises(ValueError):
        analysis.franel_statistic(3, method="nope")


def test_franel_statistic_exact_small():
    for m in range(1, 9):
        fr = core.generate(m).fractions()
        exact = sum((Q(i + 1, len(fr)) - f.value()) ** 2 for i, f in enumerate(fr))
        assert analysis.franel_statistic(m) == pytest.approx(float(exact), rel=1e-14)


def test_franel_table_and_csv():
    rows = analysis.franel_table(2)
    assert [(r.order, r.count) for r in rows] == [(1, 2), (2, 3)]
    assert rows[0].statistic == 0.25
    assert rows[1].statistic == pytest.approx(0.138889, abs=1e-6)
    assert len(analysis.franel_table(1)) == 1
    assert len(analysis.franel_table(17)) == 17
    buf = io.StringIO()
    analysis.write_franel_csv(rows, buf)
    assert buf.getvalue() == "m,statistic,count\n1,0.25,2\n2,0.138888888888889,3\n"


def test_franel_dual_paths_agree():
    rows = analysis.franel_table(80, verify=True)
    plain = analysis.franel_table(80)
    assert rows == plain
    for m, pos, form, count in analysis.franel_dual(60):
        assert pos >= 0
        assert form == pytest.approx(pos, rel=1e-12)
        assert count == core.totient_summatory(m) + 1


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=2, max_value=45))
def test_franel_formula_path_property(m):
    assert analysis.franel_statistic(m, "formula") == pytest.approx(analysis.franel_statistic(m), rel=1e-12)
