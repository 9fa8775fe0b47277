"""Partitions, shapes, words, tableaux, enumeration, restriction, splicing."""

import pytest
from hypothesis import given, settings, strategies as st

from shifted_crystal import (
    EMPTY_TABLEAU,
    ShiftedTableau,
    SkewShape,
    StrictPartition,
    Word,
    canonicalize,
    enumerate_tableaux,
    letter,
    splice,
    strict_partitions_inside,
)
from shifted_crystal.core import (
    canonicalize_codes,
    is_primed,
    letter_str,
    letter_value,
    parse_letter,
    standardize_codes,
)


# ---------------------------------------------------------------------------
# letters

def test_letter_roundtrip():
    assert letter(3, True) == 5 and letter(3) == 6
    assert letter_value(5) == 3 and is_primed(5)
    assert letter_str(5) == "3'" and letter_str(6) == "3"
    assert parse_letter("3'") == 5 and parse_letter(" 3 ") == 6
    with pytest.raises(ValueError):
        parse_letter("x")
    with pytest.raises(ValueError):
        letter(0)


def test_letter_order_is_alphabet_order():
    # 1' < 1 < 2' < 2 < 3' < 3
    seq = [letter(1, True), letter(1), letter(2, True), letter(2), letter(3, True), letter(3)]
    assert seq == sorted(seq)


# ---------------------------------------------------------------------------
# partitions and shapes

def test_strict_partition_validation():
    assert StrictPartition((3, 1)).parts == (3, 1)
    assert StrictPartition(()).size == 0
    with pytest.raises(ValueError):
        StrictPartition((1, 2))
    with pytest.raises(ValueError):
        StrictPartition((2, 2))
    assert StrictPartition.parse("") == ()
    assert str(StrictPartition.parse("4,2,1")) == "4,2,1"


def test_complement_golden():
    assert StrictPartition.parse("5,3,2").complement(5) == (4, 1)
    assert StrictPartition.parse("3,2,1").complement(3) == ()
    assert StrictPartition.parse("2").complement(2) == (1,)
    with pytest.raises(ValueError):
        StrictPartition.parse("3").complement(2)


def test_complement_involution_up_to_stair_6():
    for m in range(0, 7):
        stair = StrictPartition(range(m, 0, -1))
        for lam in strict_partitions_inside(stair):
            assert lam.complement(m).complement(m) == lam


def test_skew_shape_cells():
    sh = SkewShape.parse("6,4,2/3,1")
    assert sh.size == 3 + 3 + 2
    assert sh.row_span(1) == (4, 6)
    assert sh.row_span(2) == (3, 5)
    assert sh.row_span(3) == (3, 4)
    # reading order: bottom row first
    assert sh.cells_reading[0] == (3, 3)
    with pytest.raises(ValueError):
        SkewShape.parse("2,1/3")
    assert str(SkewShape.parse("5,3,1")) == "5,3,1/"


# ---------------------------------------------------------------------------
# words

def test_canonicalize_golden():
    w = canonicalize("1 2' 2' 1 1 2 3' 2' 2")
    assert str(w) == "1 2 2' 1 1 2 3 2' 2"
    assert str(canonicalize("1'")) == "1"
    assert str(canonicalize("2' 1'")) == "2 1"


def test_weight_examples():
    assert Word.parse("3 3 2 3' 3 1 1 2'").weight() == (2, 2, 4)
    assert Word.parse("", n=3).weight() == (0, 0, 0)
    assert Word.parse("1 2 2' 1 1 2 3 2' 2").weight() == (3, 5, 1)


def test_standardize_examples():
    assert Word.parse("1").standardize() == (1,)
    assert Word.parse("2 1 2'").standardize() == (3, 1, 2)
    assert Word.parse("1 1").standardize() == (1, 2)


def test_word_out_of_range():
    with pytest.raises(ValueError):
        Word.parse("3", n=2)


@st.composite
def letter_codes(draw, max_value=3, max_len=8):
    return draw(st.lists(st.integers(1, 2 * max_value), max_size=max_len))


@settings(max_examples=80, deadline=None)
@given(letter_codes())
def test_canonicalize_idempotent_weight_preserving(codes):
    once = canonicalize_codes(codes)
    assert canonicalize_codes(once) == once
    before = [letter_value(x) for x in codes]
    after = [letter_value(x) for x in once]
    assert before == after
    assert standardize_codes(tuple(codes)) == standardize_codes(once)


@settings(max_examples=80, deadline=None)
@given(letter_codes())
def test_standardize_invariant_under_representatives(codes):
    # priming any leftmost occurrence gives another representative
    word = canonicalize_codes(codes)
    std = standardize_codes(word)
    seen = set()
    for j, x in enumerate(word):
        v = letter_value(x)
        if v in seen:
            continue
        seen.add(v)
        rep = list(word)
        rep[j] = letter(v, True)
        assert standardize_codes(tuple(rep)) == std


# ---------------------------------------------------------------------------
# tableaux

def test_reading_word_golden():
    T = ShiftedTableau.parse("6,4,2/3,1", "1 1 2' / 2 3' 3 / 3 3")
    assert str(T.reading_word()) == "3 3 2 3' 3 1 1 2'"
    assert T.weight(3) == (2, 2, 4)
    single = ShiftedTableau.parse("1", "1")
    assert str(single.reading_word()) == "1"
    T2 = ShiftedTableau.parse("2,1", "1 2' / 2")
    assert str(T2.reading_word()) == "2 1 2'"


def test_tableau_validation():
    with pytest.raises(ValueError):
        ShiftedTableau.parse("2,1", "2 1 / 2")          # row decreasing
    with pytest.raises(ValueError):
        ShiftedTableau.parse("2,1", "1 2 / 2")          # two unprimed 2 in a column
    with pytest.raises(ValueError):
        ShiftedTableau.parse("2", "2' 2")               # non-canonical word
    with pytest.raises(ValueError):
        ShiftedTableau.parse("3", "1 2' 2'")            # two primes in a row


def test_enumerate_small_golden():
    assert [str(t) for t in enumerate_tableaux(SkewShape.parse("1"), 1)] == ["1"]
    two_one = enumerate_tableaux(SkewShape.parse("2,1"), 2)
    assert [str(t) for t in two_one] == ["1 1 / 2", "1 2' / 2"]
    row_two = enumerate_tableaux(SkewShape.parse("2"), 2)
    assert [str(t) for t in row_two] == ["1 1", "1 2", "2 2"]
    assert len(enumerate_tableaux(SkewShape.parse("2,1"), 3)) == 7
    skew = enumerate_tableaux(SkewShape.parse("3,1/1"), 2)
    assert [str(t.reading_word()) for t in skew] == [
        "1 1' 1", "1 1' 2", "2 1 1", "2 1 2'", "2 1 2", "2 2' 2",
    ]


def test_enumerate_members_valid_and_sorted():
    for shape_text, n in [("3,2/1", 3), ("4,2/2", 2), ("3,2,1", 2)]:
        ts = enumerate_tableaux(SkewShape.parse(shape_text), n)
        words = [t.word_codes for t in ts]
        assert words == sorted(words)
        assert len(set(ts)) == len(ts)
        for t in ts:
            t.check()
            assert t.word_codes == canonicalize_codes(t.word_codes)


def test_enumerate_empty_cases():
    assert enumerate_tableaux(SkewShape.parse(""), 3) == (EMPTY_TABLEAU,)
    # one-column shape too tall for the alphabet
    assert enumerate_tableaux(SkewShape.parse("2,1"), 1) == ()


def test_restrict_examples():
    T = ShiftedTableau.parse("2,1", "1 2' / 2")
    R = T.restrict(2, 2)
    assert str(R.shape) == "2,1/1"
    assert R.entry(1, 2) == letter(2, True) and R.entry(2, 2) == letter(2)
    assert T.restrict(1, 2) == T
    Y = ShiftedTableau.parse("2,1", "1 1 / 2")
    assert Y.restrict(3, 3) == EMPTY_TABLEAU
    assert Y.restrict(1, 0) == EMPTY_TABLEAU


def test_restrict_keeps_canonical_form():
    # restriction keeps all letters of the retained values, so canonical
    # form is inherited: the leftmost 3 stays the unprimed one at (3,3)
    T = ShiftedTableau.parse("6,4,2/3,1", "1 1 2' / 2 3' 3 / 3 3")
    R = T.restrict(3, 3)
    assert str(R.reading_word()) == "3 3 3' 3"
    assert str(R.shape) == "6,4,2/6,2"
    R.check()


def test_relabel():
    T = ShiftedTableau.parse("2,1", "1 2' / 2")
    up = T.relabel(2)
    assert str(up.reading_word()) == "4 3 4'"
    assert up.relabel(-2) == T
    with pytest.raises(ValueError):
        T.relabel(-1)


def test_splice_roundtrip_and_errors():
    T = ShiftedTableau.parse("2,1", "1 2' / 2")
    assert splice([T.restrict(1, 1), T.restrict(2, 2)], shape=T.shape) == T
    assert splice([EMPTY_TABLEAU, T], shape=T.shape) == T
    with pytest.raises(ValueError):
        splice([T, T])
    # valid pieces whose union breaks a row at the seam
    bad_low = ShiftedTableau.parse("1", "2")
    bad_high = ShiftedTableau.parse("2/1", "1")
    with pytest.raises(ValueError):
        splice([bad_low, bad_high], shape=SkewShape.parse("2"))


def test_splice_interval_compositions():
    # splitting [1,n] at every point and splicing back is the identity
    for shape_text, n in [("3,2/1", 3), ("2,1", 3)]:
        shape = SkewShape.parse(shape_text)
        for T in enumerate_tableaux(shape, n):
            for cut1 in range(0, n + 1):
                parts = [T.restrict(1, cut1), T.restrict(cut1 + 1, n)]
                assert splice(parts, shape=T.shape) == T
            parts = [T.restrict(k, k) for k in range(1, n + 1)]
            assert splice(parts, shape=T.shape) == T


def test_value_boundary_chain_is_nested():
    for T in enumerate_tableaux(SkewShape.parse("3,2/1"), 3):
        prev = T.shape.inner
        for v in range(1, 4):
            cur = T.value_boundary(v)
            assert cur.contains(prev)
            prev = cur
        assert prev == T.shape.outer


def test_text_format_roundtrip():
    T = ShiftedTableau.parse("6,4,2/3,1", "1 1 2' / 2 3' 3 / 3 3")
    again = ShiftedTableau.parse(str(T.shape), str(T))
    assert again == T
