"""Crossing-free voice leadings and their braid words on 12 strands.

A voice leading between two equal-size chords assigns each source voice a
target voice so that higher voices never end up below lower ones
(p_i > p_j implies q_i >= q_j).  On pitch classes written as integers in
[0, 11] this forces the order-preserving assignment: sorted source paired
with sorted target.  That assignment is also the unique displacement
minimizer among crossing-free bijections, which the test suite checks
against a brute-force oracle.

Braids live on 12 strands, one per pitch class; a voice moving from pitch
class p to q occupies strand slot p+1 and walks to slot q+1 through
adjacent crossings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braid import BraidWord, concatenate
from .errors import ParseError, SizeMismatch
from .pitch import Chord, PitchClass, parse_chord_symbol, pc

STRANDS = 12


def arc_distance(a: int, b: int) -> int:
    """Shorter arc between two pitch classes on the 12-cycle."""
    return min(pc(a - b), pc(b - a))


@dataclass(frozen=True)
class VoiceLeading:
    """Order-preserving voice assignment between two sorted note lists."""

    source: tuple[PitchClass, ...]
    target: tuple[PitchClass, ...]

    def __post_init__(self):
        if len(self.source) != len(self.target):
            raise SizeMismatch(f"{len(self.source)} voices vs {len(self.target)}")

    def pairs(self) -> tuple[tuple[PitchClass, PitchClass], ...]:
        return tuple(zip(self.source, self.target))

    def assignment(self) -> tuple[int, ...]:
        """Index map source -> target (identity on the sorted representation)."""
        return tuple(range(len(self.source)))

    def total_displacement(self) -> int:
        return sum(arc_distance(s, t) for s, t in self.pairs())

    def is_crossing_free(self) -> bool:
        for i, (si, ti) in enumerate(self.pairs()):
            for sj, tj in self.pairs()[i + 1:]:
                if si > sj and ti < tj:
                    return False
                if sj > si and tj < ti:
                    return False
        return True

    def reverse(self) -> "VoiceLeading":
        return VoiceLeading(self.target, self.source)


def voice_leading(
    a: Chord,
    b: Chord,
    a_root: PitchClass | None = None,
    b_root: PitchClass | None = None,
    pad: bool = True,
) -> VoiceLeading:
    """The crossing-free, displacement-minimal leading from a to b.

    Unequal sizes are reconciled by doubling the smaller chord's root
    (lowest pitch class when no root is declared); ``pad=False`` raises
    SizeMismatch instead.
    """
    source = list(a.notes)
    target = list(b.notes)
    if len(source) != len(target):
        if not pad:
            raise SizeMismatch(f"{len(source)} notes vs {len(target)}")
        while len(source) < len(target):
            source.append(a_root if a_root is not None else min(source))
        while len(target) < len(source):
            target.append(b_root if b_root is not None else min(target))
    return VoiceLeading(tuple(sorted(source)), tuple(sorted(target)))


def _reduced_moves(v: VoiceLeading) -> list[tuple[int, int]]:
    """Distinct (source slot, target slot) moves realizable by strands.

    Padding can duplicate a pitch class on either side; a physical strand
    can only make one move, so duplicate sources and duplicate targets
    each keep the single move with the smallest displacement (ties go to
    ascending motion).  The result is strictly increasing in both slots.
    """

    def badness(move: tuple[int, int]) -> tuple[int, int]:
        d = move[1] - move[0]
        return (abs(d), 0 if d >= 0 else 1)

    by_source: dict[int, tuple[int, int]] = {}
    for s, t in v.pairs():
        move = (s + 1, t + 1)
        if move[0] not in by_source or badness(move) < badness(by_source[move[0]]):
            by_source[move[0]] = move
    by_target: dict[int, tuple[int, int]] = {}
    for move in by_source.values():
        if move[1] not in by_target or badness(move) < badness(by_target[move[1]]):
            by_target[move[1]] = move
    return sorted(by_target.values())


def braid_of_leading(v: VoiceLeading) -> BraidWord:
    """Emit the braid word realizing a voice leading on 12 strands.

    Each moving voice walks from slot a to slot b through adjacent
    crossings: ascending voices emit s_a .. s_{b-1}, descending voices
    s_{a-1}^-1 .. s_b^-1.  Descending voices are emitted first in
    ascending slot order, then ascending voices in descending slot order;
    with an order-preserving move set this ordering never walks a run
    through a slot another voice still occupies, so every chord strand
    lands exactly on its target slot.
    """
    letters: list[tuple[int, int]] = []
    moves = _reduced_moves(v)
    descending = [m for m in moves if m[1] < m[0]]
    ascending = [m for m in moves if m[1] > m[0]]
    for a, b in descending:
        letters.extend((i, -1) for i in range(a - 1, b - 1, -1))
    for a, b in reversed(ascending):
        letters.extend((i, 1) for i in range(a, b))
    return BraidWord(STRANDS, tuple(letters))


@dataclass(frozen=True)
class Progression:
    """A sequence of labelled chords."""

    chords: tuple[tuple[str, PitchClass, Chord], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not self.chords:
            raise ValueError("a progression needs at least one chord")

    def leadings(self) -> list[VoiceLeading]:
        result = []
        for (_, ra, a), (_, rb, b) in zip(self.chords, self.chords[1:]):
            result.append(voice_leading(a, b, a_root=ra, b_root=rb))
        return result


def braids_of_progression(p: Progression) -> list[BraidWord]:
    """One braid word per chord transition."""
    return [braid_of_leading(v) for v in p.leadings()]


def braid_of_progression(p: Progression) -> BraidWord:
    """Concatenation of the per-transition words; identity for one chord."""
    word = BraidWord.identity(STRANDS)
    for part in braids_of_progression(p):
        word = concatenate(word, part)
    return word


def parse_progression(text: str) -> Progression:
    """One chord per line: a chord symbol, or ``name: pc,pc,...``.

    Blank lines and ``#`` comments are ignored.
    """
    chords: list[tuple[str, PitchClass, Chord]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" in line:
            name, _, body = line.partition(":")
            try:
                values = [int(tok) for tok in body.split(",") if tok.strip()]
            except ValueError:
                raise ParseError(f"bad pitch-class list on line {lineno}", lineno)
            if not values or any(not 0 <= v <= 11 for v in values):
                raise ParseError(f"pitch classes must be in 0..11 on line {lineno}", lineno)
            chords.append((name.strip(), values[0], Chord(values)))
        else:
            root, chord = parse_chord_symbol(line)
            chords.append((line, root, chord))
    return Progression(tuple(chords))
