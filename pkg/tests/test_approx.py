"""Octatonic approximation by admissible modes."""

from modalkit.approximate import approximate, hs_ws_scale
from modalkit.pitch import ChordQuality


def test_hs_ws_scale_shape():
    scale = hs_ws_scale(0)
    assert scale == frozenset({0, 1, 3, 4, 6, 7, 9, 10})
    assert len(scale) == 8
    # the scale is invariant under minor-third transposition
    assert hs_ws_scale(3) == scale
    assert hs_ws_scale(11) == frozenset({11, 0, 2, 3, 5, 6, 8, 9})


def test_ranking_covers_all_admissible_modes():
    ranked = approximate(hs_ws_scale(11), ChordQuality.DOM7, 11)
    assert len(ranked) == 8
    shared = [a.shared for a in ranked]
    assert shared == sorted(shared, reverse=True)


def test_hs_ws_on_b_is_best_matched_by_mixolydian_b2_sharp4():
    ranked = approximate(hs_ws_scale(11), ChordQuality.DOM7, 11)
    best = ranked[0]
    assert best.candidate.name == "mixolydian b2 #4"
    assert best.candidate.is_special
    assert best.shared == 7
    assert best.dropped == frozenset({2})
    assert best.added == frozenset()
    assert ranked[1].shared < 7


def test_accounting_is_consistent():
    for a in approximate(hs_ws_scale(4), ChordQuality.MIN7, 4):
        assert a.shared == len(a.target & a.notes)
        assert a.dropped == a.target - a.notes
        assert a.added == a.notes - a.target
        assert len(a.notes) == 7


def test_base_chord_always_fully_inside_candidate():
    root = 7
    target = hs_ws_scale(root)
    for a in approximate(target, ChordQuality.DOM7, root):
        base = {(root + i) % 12 for i in ChordQuality.DOM7.intervals}
        assert base <= set(a.notes)
