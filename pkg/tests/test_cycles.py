from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fareyseq import core, cycles
from fareyseq.cycles import Progression, ResidueClassSet
from fareyseq.errors import InvariantError


def test_s_initial_examples():
    assert cycles.s_initial((1, 3)) == 2
    assert [cycles.s_initial((n, 5)) for n in (1, 2, 3, 4)] == [4, 2, 3, 1]
    assert cycles.s_initial((0, 1)) == 1
    assert cycles.s_initial((1, 2)) == 1
    assert cycles.s_initial((2, 5), method="reference") == 2
    with pytest.raises(InvariantError):
        cycles.s_initial((1, 1))
    with pytest.raises(InvariantError):
        cycles.s_initial((2, 4))


def test_fast_s_initial_matches_recorded_creations():
    for m, cm in core.iter_created(300):
        nums, sfs = cycles.s_initial_table(m + 1)
        assert [cf.n for cf in cm] == nums.tolist()
        assert [cf.s_f for cf in cm] == sfs.tolist()
        assert all(cycles.s_initial(cf.fraction) == cf.s_f for cf in cm[:5])


def test_m_c_examples(registries):
    assert cycles.m_c((1, 3), 1, 1) == 4
    assert cycles.m_c((1, 3), 3, 1) == 5
    assert cycles.m_c((1, 3), 2, 1) == 3
    assert (1, 3, 1) in registries[4].sequence.entries
    assert (1, 3, 3) in registries[5].sequence.entries
    with pytest.raises(InvariantError):
        cycles.m_c((1, 3), 4, 1)
    with pytest.raises(InvariantError):
        cycles.m_c((1, 3), 0, 1)


def test_cycle_set_examples(registries):
    assert cycles.cycle_set((1, 3), 1) == Progression(3, 1, 4)
    assert cycles.cycle_set((2, 3), 1) == Progression(3, 0, 3)
    assert cycles.cycle_set((0, 1), 1) == Progression(1, 0, 1)
    for m in (4, 7, 10):
        assert (1, 3, 1) in registries[m].sequence.entries
    for m in (3, 6):
        assert (2, 3, 1) in registries[m].sequence.entries


def test_cycle_set_for_denominator_examples():
    s31 = cycles.cycle_set_for_denominator(3, 1)
    assert s31.progressions == (Progression(3, 0, 3), Progression(3, 1, 4))
    s43 = cycles.cycle_set_for_denominator(4, 3)
    assert s43.progressions == (Progression(4, 0, 4), Progression(4, 2, 6))
    s11 = cycles.cycle_set_for_denominator(1, 1)
    assert all(m in s11 for m in range(1, 50))


def test_contains_examples(registries):
    s31 = cycles.cycle_set_for_denominator(3, 1)
    assert cycles.contains(s31, 4)
    assert not cycles.contains(s31, 2)
    s51 = cycles.cycle_set_for_denominator(5, 1)
    assert not cycles.contains(s51, 9)
    f9 = registries[9].sequence
    assert not any(d == 5 and s == 1 for _, d, s in f9.entries)


def test_render_is_stable():
    assert cycles.cycle_set_for_denominator(3, 1).render() == (
        "d=3 c=1 :: {m ≡ 0 (mod 3), m ≥ 3} ∪ {m ≡ 1 (mod 3), m ≥ 4}"
    )


def test_ems_examples():
    assert cycles.ems(3, 1, 2) == [3, 4, 6, 7]
    assert cycles.ems(1, 1, 3) == [1, 2, 3]
    assert cycles.ems(4, 3, 1) == [4, 6]


def test_progression_validation():
    with pytest.raises(InvariantError):
        Progression(3, 1, 5)
    with pytest.raises(InvariantError):
        Progression(5, 2, 2)
    with pytest.raises(InvariantError):
        ResidueClassSet(3, [Progression(3, 1, 4), Progression(3, 1, 7)])


def test_cycle_sets_match_generation(registries):
    for m, reg in registries.items():
        seq = reg.sequence
        for d in range(1, min(m, 25) + 1):
            present = set(seq.s[seq.d == d].tolist())
            for c in range(1, d + 1):
                s = cycles.cycle_set_for_denominator(d, c)
                assert (m in s) == (c in present), (d, c, m)
                assert cycles.table_contains(d, c, m) == (c in present)


def test_m_c_lands_on_c():
    for d in range(1, 13):
        for n in range(d):
            if gcd(n, d) != 1:
                continue
            for c in range(1, d + 1):
                for k in (1, 2, 3):
                    m = cycles.m_c((n, d), c, k)
                    seq = core.generate(m)
                    i = seq.fractions().index((n, d))
                    assert seq.s[i] == c


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=200), st.data())
def test_residue_sets_have_phi_distinct_residues(d, data):
    c = data.draw(st.integers(min_value=1, max_value=d))
    s = cycles.cycle_set_for_denominator(d, c)
    assert len(s) == core.totient(d)
    assert len(set(s.residues)) == len(s)
    k = data.draw(st.integers(min_value=1, max_value=6))
    for m in cycles.ems(d, c, k):
        assert cycles.contains(s, m)
    assert len(cycles.ems(d, c, k)) == k * core.totient(d)
