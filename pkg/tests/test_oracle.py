import itertools
import math

import pytest

from degseq import BadParameters, DegreeSequence, Refused, erdos_gallai_check
from degseq.oracle import count_sequences, cross_check, enumerate_sequences, sharpness_scan


def texts(stream):
    return [str(s) for s in stream]


def test_enumerate_small():
    assert texts(enumerate_sequences(3, 2)) == ["2^3", "2^2,1", "2,1^2", "1^3"]
    assert texts(enumerate_sequences(2, 2, even_only=True)) == ["2^2", "1^2"]


def test_enumerate_even_count():
    # independent count: multisets of size 4 over {1,2,3} with even sum
    expected = sum(1 for t in itertools.combinations_with_replacement((1, 2, 3), 4) if sum(t) % 2 == 0)
    assert expected == 9
    assert len(list(enumerate_sequences(4, 3, even_only=True))) == 9


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("dmax", range(1, 7))
def test_enumerate_complete_and_ordered(n, dmax):
    got = [tuple(s) for s in enumerate_sequences(n, dmax)]
    expected = sorted(itertools.combinations_with_replacement(range(dmax, 0, -1), n), reverse=True)
    assert got == expected
    assert len(got) == count_sequences(n, dmax) == math.comb(n + dmax - 1, dmax - 1)
    assert len(set(texts(enumerate_sequences(n, dmax)))) == len(got)


def test_enumerate_sums_and_runs():
    for s in enumerate_sequences(7, 5):
        rebuilt = DegreeSequence(s.runs)
        assert (rebuilt.n, rebuilt.sum) == (s.n, s.sum)


def test_enumerate_first_partition():
    whole = texts(enumerate_sequences(6, 4))
    parts = []
    for f in range(4, 0, -1):
        part = texts(enumerate_sequences(6, 4, first=f))
        assert all(t.split(",")[0].split("^")[0] == str(f) for t in part)
        parts += part
    assert parts == whole


def test_enumerate_cursor_resume():
    whole = list(enumerate_sequences(6, 4))
    for i, cursor in enumerate(whole):
        assert list(enumerate_sequences(6, 4, after=cursor)) == whole[i + 1:]
    part = list(enumerate_sequences(6, 4, first=3))
    assert list(enumerate_sequences(6, 4, first=3, after=part[2])) == part[3:]


def test_enumerate_bad():
    with pytest.raises(BadParameters):
        list(enumerate_sequences(0, 3))
    with pytest.raises(BadParameters):
        list(enumerate_sequences(3, 2, after=DegreeSequence(((1, 4),))))


def test_cross_check_trivial():
    r = cross_check(1, 1)
    assert r.sequences_checked == 1 and r.graphic_count == 0 and r.clean


def test_cross_check_8_5():
    r = cross_check(8, 5)
    assert r.sequences_checked == sum(count_sequences(n, 5) for n in range(1, 9))
    assert r.clean
    assert r.realizations_checked == r.graphic_count


def test_cross_check_parallel_identical():
    assert cross_check(7, 5, jobs=3) == cross_check(7, 5, jobs=1)


def test_cross_check_bad():
    with pytest.raises(BadParameters):
        cross_check(0, 3)


def _even_with_top(d1, length):
    return sum(1 for t in itertools.combinations_with_replacement(range(d1, 0, -1), length)
               if t[0] == d1 and sum(t) % 2 == 0)


def test_sharpness_d2():
    r = sharpness_scan(2, 2)
    assert r.threshold == 3
    assert str(r.witness_at_threshold_minus_1) == "2^2"
    assert r.lengths_confirmed == [3, 4, 5]
    assert r.sequences_checked == {L: _even_with_top(2, L) for L in (3, 4, 5)}
    assert r.confirmed


def test_sharpness_d4():
    r = sharpness_scan(4, 1)
    assert r.threshold == 8
    assert str(r.witness_at_threshold_minus_1) == "4^3,1^4"
    assert r.confirmed and r.lengths_confirmed == [8, 9]


def test_sharpness_d5():
    r = sharpness_scan(5, 0)
    assert (r.threshold, str(r.witness_at_threshold_minus_1), r.confirmed) == (11, "5^3,1^7", True)


def test_sharpness_counts_match_filter():
    r = sharpness_scan(4, 0)
    assert r.sequences_checked == {8: _even_with_top(4, 8)}


def test_sharpness_detects_non_threshold():
    # Below the threshold the scan must find the witness among its counterexamples.
    from degseq.oracle import _scan_length

    count, bad = _scan_length((4, 7, False))
    assert "4^3,1^4" in bad


def test_sharpness_parallel_identical():
    assert sharpness_scan(5, 2, jobs=2) == sharpness_scan(5, 2, jobs=1)


def test_sharpness_naive_identical():
    assert sharpness_scan(5, 1, naive=True) == sharpness_scan(5, 1)


def test_sharpness_guard():
    with pytest.raises(Refused):
        sharpness_scan(13, 0)
    with pytest.raises(BadParameters):
        sharpness_scan(1, 0)
    with pytest.raises(BadParameters):
        sharpness_scan(3, -1)


def test_sharpness_force(monkeypatch):
    from degseq import oracle

    monkeypatch.setattr(oracle, "SCAN_GUARD", 3)
    with pytest.raises(Refused):
        sharpness_scan(4, 0)
    assert sharpness_scan(4, 0, force=True).confirmed
