"""Braid words: parsing, invariants, rewriting, rendering."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modalkit.braid import (
    BraidWord,
    concatenate,
    free_reduce,
    invariants,
    parse_word,
    render_ascii,
    rewrite_step,
    serialize_word,
)
from modalkit.errors import (
    IndexOutOfRange,
    ParseError,
    PatternMismatch,
    StrandMismatch,
)


def word_strategy(max_strands=5, max_len=12):
    def build(strands):
        letters = st.tuples(
            st.integers(min_value=1, max_value=strands - 1),
            st.sampled_from((1, -1)),
        )
        return st.lists(letters, max_size=max_len).map(
            lambda ls: BraidWord(strands, tuple(ls))
        )

    return st.integers(min_value=2, max_value=max_strands).flatmap(build)


def test_word_validation():
    with pytest.raises(IndexOutOfRange):
        BraidWord(3, ((3, 1),))
    with pytest.raises(ValueError):
        BraidWord(3, ((1, 2),))
    with pytest.raises(ValueError):
        BraidWord(0)
    assert len(BraidWord.identity(4)) == 0


def test_invariants_single_crossing():
    inv = invariants(BraidWord(3, ((1, 1),)))
    assert inv.permutation == (2, 1, 3)
    assert inv.writhe == 1


def test_invariants_sigma1_sigma2():
    # the strand starting at 1 walks to 3
    inv = invariants(BraidWord(3, ((1, 1), (2, 1))))
    assert inv.permutation == (3, 1, 2)
    assert inv.writhe == 2


def test_inverse_crossing_same_permutation_opposite_writhe():
    plus = invariants(BraidWord(4, ((2, 1),)))
    minus = invariants(BraidWord(4, ((2, -1),)))
    assert plus.permutation == minus.permutation
    assert plus.writhe == -minus.writhe


@given(word_strategy())
def test_writhe_is_sign_sum(w):
    assert invariants(w).writhe == sum(s for _i, s in w.letters)


@given(word_strategy())
def test_permutation_is_bijection(w):
    perm = invariants(w).permutation
    assert sorted(perm) == list(range(1, w.strands + 1))


def test_concatenate_requires_same_strands():
    with pytest.raises(StrandMismatch):
        concatenate(BraidWord(3), BraidWord(4))


@given(word_strategy(max_len=6))
def test_word_times_inverse_reduces_to_identity(w):
    inverse = BraidWord(w.strands, tuple((i, -s) for i, s in reversed(w.letters)))
    assert free_reduce(concatenate(w, inverse)) == BraidWord.identity(w.strands)


@given(word_strategy())
def test_free_reduce_preserves_invariants(w):
    assert invariants(free_reduce(w)) == invariants(w)


def test_free_reduce_cascades():
    w = BraidWord(3, ((1, 1), (2, 1), (2, -1), (1, -1)))
    assert free_reduce(w) == BraidWord.identity(3)


def test_rewrite_free_cancel():
    w = BraidWord(3, ((1, 1), (1, -1), (2, 1)))
    assert rewrite_step(w, "free_cancel", 0) == BraidWord(3, ((2, 1),))
    with pytest.raises(PatternMismatch):
        rewrite_step(w, "free_cancel", 1)


def test_rewrite_p1_swap():
    w = BraidWord(5, ((1, 1), (3, -1)))
    swapped = rewrite_step(w, "p1_swap", 0)
    assert swapped.letters == ((3, -1), (1, 1))
    with pytest.raises(PatternMismatch):
        rewrite_step(BraidWord(5, ((1, 1), (2, 1))), "p1_swap", 0)


def test_rewrite_p2_slide_both_directions():
    w = BraidWord(4, ((1, 1), (2, 1), (1, 1)))
    slid = rewrite_step(w, "p2_slide", 0)
    assert slid.letters == ((2, 1), (1, 1), (2, 1))
    assert rewrite_step(slid, "p2_slide", 0) == w
    with pytest.raises(PatternMismatch):
        rewrite_step(BraidWord(4, ((1, 1), (2, -1), (1, 1))), "p2_slide", 0)
    with pytest.raises(ValueError):
        rewrite_step(w, "nonsense", 0)


def test_parse_and_serialize_round_trip():
    text = "s3 s1^-1 s2"
    w = parse_word(text, strands=4)
    assert w.letters == ((3, 1), (1, -1), (2, 1))
    assert serialize_word(w) == text
    assert serialize_word(w, header=True) == "strands=4 " + text
    assert serialize_word(BraidWord.identity(4), header=True) == "strands=4"


def test_parse_header():
    w = parse_word("strands=12 s11 s1")
    assert w.strands == 12
    with pytest.raises(ParseError):
        parse_word("strands=12 s1", strands=4)
    with pytest.raises(ParseError):
        parse_word("s1")  # no strand count anywhere


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_word("s1 x2", strands=3)
    with pytest.raises(IndexOutOfRange):
        parse_word("s9", strands=4)


@given(word_strategy())
def test_serialize_parse_round_trip(w):
    assert parse_word(serialize_word(w), strands=w.strands) == w


def test_render_ascii_shape():
    w = BraidWord(3, ((1, 1), (2, -1)))
    lines = render_ascii(w).splitlines()
    assert len(lines) == 3 * len(w) + 1
    assert lines[0] == "| | |"
    assert all(len(ln) == 2 * w.strands - 1 for ln in lines)
    assert "/" in lines[2] and "\\" in lines[5]
