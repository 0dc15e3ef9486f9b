import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphic_by_enumeration, rle_sequences, sequences
from degseq import (
    DegreeSequence,
    EmptySequence,
    IndexOutOfRange,
    Malformed,
    NotGraphic,
    Overflow,
    Violation,
    ZeroEntry,
    eg_terms,
    erdos_gallai_check,
    flatten_at,
    format_sequence,
    havel_hakimi_realize,
    parse_sequence,
    realization_problems,
)
from degseq.oracle import enumerate_sequences


def seq(text):
    return parse_sequence(text)


def naive_eg_violations(values):
    """Straight transcription of the inequality over a plain list."""
    out = []
    for k in range(1, len(values) + 1):
        lhs = sum(values[:k])
        rhs = k * (k - 1) + sum(min(k, d) for d in values[k:])
        if lhs > rhs:
            out.append((k, lhs, rhs))
    return out


# -- parsing ---------------------------------------------------------------------


@pytest.mark.parametrize("text, runs, n, total", [
    ("3,3,1,1", ((3, 2), (1, 2)), 4, 8),
    ("4^2,1^6", ((4, 2), (1, 6)), 8, 14),
    ("2,3,1", ((3, 1), (2, 1), (1, 1)), 3, 6),
    (" 5 ^ 2 ,\t1", ((5, 2), (1, 1)), 3, 11),
    ("1,2^2,1^3", ((2, 2), (1, 4)), 6, 8),
])
def test_parse(text, runs, n, total):
    s = parse_sequence(text)
    assert s.runs == runs
    assert (s.n, s.sum) == (n, total)


@pytest.mark.parametrize("text, exc", [
    ("0,1", ZeroEntry),
    ("3^0", ZeroEntry),
    ("", EmptySequence),
    ("   ", EmptySequence),
    ("1,,2", Malformed),
    ("1,2,", Malformed),
    ("a", Malformed),
    ("-1", Malformed),
    ("2^", Malformed),
    ("2^3^4", Malformed),
    ("1.5", Malformed),
    ("٣", Malformed),
    (str(2**63), Overflow),
    (f"1^{2**63}", Overflow),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_sequence(text)


def test_parse_accepts_int64_max():
    assert parse_sequence(f"{2**63 - 1}").d1 == 2**63 - 1


@given(sequences())
def test_print_parse_round_trip(s):
    assert parse_sequence(format_sequence(s)) == s


@given(rle_sequences())
def test_round_trip_large_runs(s):
    assert parse_sequence(str(s)) == s


def test_sequence_invariants_enforced():
    with pytest.raises(ValueError):
        DegreeSequence(((1, 2), (3, 1)))
    with pytest.raises(ValueError):
        DegreeSequence(((3, 0),))
    with pytest.raises(ValueError):
        DegreeSequence(())
    with pytest.raises(ValueError):
        DegreeSequence.from_values([2, 0])


# -- Erdős–Gallai ----------------------------------------------------------------


def test_eg_single_edge():
    r = erdos_gallai_check(seq("1,1"))
    assert r.graphic and r.parity_even and r.first_violation is None


def test_eg_two_twos():
    r = erdos_gallai_check(seq("2,2"))
    assert not r.graphic
    assert r.first_violation == Violation(1, 2, 1)


def test_eg_3311_matches_enumeration():
    assert (3, 3, 1, 1) not in graphic_by_enumeration(4)
    r = erdos_gallai_check(seq("3,3,1,1"))
    assert not r.graphic
    assert r.first_violation == Violation(2, 6, 4)


def test_eg_odd_sum():
    r = erdos_gallai_check(seq("3,2,1,1"))
    assert not r.parity_even
    assert not r.graphic


@pytest.mark.parametrize("n", range(1, 7))
def test_eg_against_graph_enumeration(n):
    realizable = graphic_by_enumeration(n)
    for values in itertools.combinations_with_replacement(range(n - 1, 0, -1), n):
        s = DegreeSequence.from_values(values)
        assert erdos_gallai_check(s).graphic == (tuple(values) in realizable), values


def test_eg_entry_at_least_n_never_graphic():
    assert not erdos_gallai_check(seq("4,1,1,1")).graphic
    assert erdos_gallai_check(seq("3,1,1,1")).graphic


@settings(max_examples=300)
@given(sequences(max_value=15, max_len=25))
def test_rle_matches_list_transcription(s):
    expected = naive_eg_violations(s.to_list())
    for naive in (False, True):
        r = erdos_gallai_check(s, naive=naive, all_violations=True)
        assert [tuple(v) for v in r.violations] == expected
        first = erdos_gallai_check(s, naive=naive).first_violation
        assert (tuple(first) if first else None) == (expected[0] if expected else None)


def test_rle_equals_naive_exhaustive():
    for n in range(1, 11):
        for s in enumerate_sequences(n, 7):
            assert erdos_gallai_check(s, all_violations=True) == \
                erdos_gallai_check(s, naive=True, all_violations=True), str(s)


@settings(max_examples=200)
@given(rle_sequences(max_value=400, max_runs=5, max_count=3000))
def test_rle_equals_naive_on_long_sequences(s):
    assert erdos_gallai_check(s, all_violations=True) == \
        erdos_gallai_check(s, naive=True, all_violations=True)


def test_eg_huge_values_exact():
    # a star on 2**40 vertices
    big = 2**40
    assert erdos_gallai_check(DegreeSequence(((big - 1, 1), (1, big - 1)))).graphic
    r = erdos_gallai_check(DegreeSequence(((big, 1), (1, big - 2))))
    assert r.parity_even and r.first_violation == Violation(1, big, big - 2)
    s = DegreeSequence(((2**62, 3), (1, 5)))
    r = erdos_gallai_check(s)
    assert r.first_violation == Violation(1, 2**62, 7)


def test_eg_terms_matches_report():
    s = seq("4^3,1^4")
    assert eg_terms(s, 3) == (12, 10)
    with pytest.raises(IndexOutOfRange):
        eg_terms(s, 8)


def test_eg_report_invariants_exhaustive():
    for n in range(1, 9):
        for s in enumerate_sequences(n, 6):
            r = erdos_gallai_check(s)
            assert r.graphic == (r.parity_even and r.first_violation is None)
            if r.first_violation:
                k, lhs, rhs = r.first_violation
                assert lhs > rhs
                assert all(a <= b for a, b in (eg_terms(s, j) for j in range(1, k)))


# -- Havel–Hakimi ------------------------------------------------------------------


def test_hh_triangle():
    real = havel_hakimi_realize(seq("2,2,2"))
    assert real.n == 3
    assert set(real.edges) == {(0, 1), (0, 2), (1, 2)}


def test_hh_k4():
    real = havel_hakimi_realize(seq("3,3,3,3"))
    assert len(real.edges) == 6
    assert set(real.edges) == set(itertools.combinations(range(4), 2))


@pytest.mark.parametrize("text", ["3,3,1,1", "2,2", "1", "3,2,1,1", "4^3,1^4"])
def test_hh_not_graphic(text):
    with pytest.raises(NotGraphic):
        havel_hakimi_realize(seq(text))


def test_hh_deterministic_edges():
    # pivot 0 (degree 3) takes 1, 2, 3; then 1 and 2 tie at 1 and join
    real = havel_hakimi_realize(seq("3,2,2,1"))
    assert real.edges == ((0, 1), (0, 2), (0, 3), (1, 2))


def test_hh_agrees_with_eg_exhaustive():
    for n in range(1, 10):
        for s in enumerate_sequences(n, 7):
            eg = erdos_gallai_check(s).graphic
            try:
                real = havel_hakimi_realize(s)
            except NotGraphic:
                assert not eg, str(s)
            else:
                assert eg, str(s)
                assert realization_problems(real, s) == []


@settings(max_examples=150)
@given(sequences(max_value=20, max_len=40))
def test_hh_realizations_valid(s):
    try:
        real = havel_hakimi_realize(s)
    except NotGraphic:
        assert not erdos_gallai_check(s).graphic
    else:
        assert realization_problems(real, s) == []


def test_realization_problems_detects_defects():
    from degseq import Realization

    s = seq("1,1")
    assert realization_problems(Realization(2, ((0, 1),)), s) == []
    assert realization_problems(Realization(2, ((0, 0),)), s)
    assert realization_problems(Realization(3, ((0, 1),)), s)
    assert realization_problems(Realization(2, ((0, 1), (0, 1))), seq("2,2"))


# -- flattening ------------------------------------------------------------------


@pytest.mark.parametrize("text, k, expected", [
    ("3,2,2,1", 2, "3^2,1^2"),
    ("4,4,1,1", 2, "4^2,1^2"),
    ("5,3,2,2,1", 1, "5,1^4"),
    ("2,2,2", 2, "2^3"),
    ("3,1", 2, "3^2"),
])
def test_flatten(text, k, expected):
    out = flatten_at(seq(text), k)
    assert str(out) == expected
    assert out.n == seq(text).n


@pytest.mark.parametrize("k", [0, 5])
def test_flatten_range(k):
    with pytest.raises(IndexOutOfRange):
        flatten_at(seq("3,2,2,1"), k)


@given(sequences(max_value=12, max_len=20), st.data())
def test_flatten_preserves_violation(s, data):
    k = data.draw(st.integers(1, s.n))
    lhs, rhs = eg_terms(s, k)
    flat = flatten_at(s, k)
    assert (flat.n, flat.d1) == (s.n, s.d1)
    assert flat.dn == (s.dn if k < s.n else s.d1)
    if lhs > rhs:
        flhs, frhs = eg_terms(flat, k)
        assert flhs > frhs
