"""Pitch-class arithmetic, chords as multisets mod 12, and chord-symbol parsing.

Pitch classes are integers in [0, 11] (semitones above C, octave equivalent).
A chord is an unordered multiset of pitch classes; equality ignores order.
Enharmonic spelling is erased at this layer: note names exist only as a
display convenience and never affect equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import ParseError

PitchClass = int

NOTE_TO_PC = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}

# Display-only spelling; parsing accepts any enharmonic input.
PC_NAMES = ("C", "Db", "D", "Eb", "E", "F", "F#", "G", "Ab", "A", "Bb", "B")


def pc(value: int) -> PitchClass:
    """Reduce an integer to its pitch class in [0, 11]."""
    return value % 12


def pc_name(value: PitchClass) -> str:
    return PC_NAMES[pc(value)]


def parse_note(text: str, position: int = 0) -> PitchClass:
    """Parse a note name like ``C``, ``F#`` or ``Bb`` into a pitch class."""
    m = re.fullmatch(r"([A-G])([#b]?)", text)
    if not m:
        raise ParseError(f"unknown note name {text!r}", position)
    value = NOTE_TO_PC[m.group(1)]
    if m.group(2) == "#":
        value += 1
    elif m.group(2) == "b":
        value -= 1
    return pc(value)


class Chord:
    """An unordered multiset of pitch classes.

    Stored as a sorted tuple so that equality and hashing are order-free.
    Duplicate pitch classes are legal (they arise from voice padding).
    """

    __slots__ = ("notes",)

    def __init__(self, notes: Iterable[int]):
        self.notes: tuple[PitchClass, ...] = tuple(sorted(pc(n) for n in notes))

    @property
    def cardinality(self) -> int:
        return len(self.notes)

    def __len__(self) -> int:
        return len(self.notes)

    def __iter__(self):
        return iter(self.notes)

    def __contains__(self, value: int) -> bool:
        return pc(value) in self.notes

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Chord) and self.notes == other.notes

    def __hash__(self) -> int:
        return hash(self.notes)

    def __repr__(self) -> str:
        return f"Chord({list(self.notes)})"

    def display(self) -> str:
        return " ".join(pc_name(n) for n in self.notes)


class ChordQuality(Enum):
    """The seven seventh-chord types arising from scale harmonization."""

    DIM7 = ("o7", (0, 3, 6, 9))
    MAJ7_SHARP5 = ("maj7#5", (0, 4, 8, 11))
    MINMAJ7 = ("-maj7", (0, 3, 7, 11))
    MAJ7 = ("maj7", (0, 4, 7, 11))
    DOM7 = ("7", (0, 4, 7, 10))
    MIN7 = ("-7", (0, 3, 7, 10))
    MIN7_FLAT5 = ("-7b5", (0, 3, 6, 10))

    def __init__(self, symbol: str, intervals: tuple[int, int, int, int]):
        self.symbol = symbol
        self.intervals = intervals

    @classmethod
    def from_symbol(cls, symbol: str) -> "ChordQuality":
        for q in cls:
            if q.symbol == symbol:
                return q
        raise KeyError(symbol)

    @classmethod
    def from_intervals(cls, intervals: tuple[int, ...]) -> "ChordQuality | None":
        for q in cls:
            if q.intervals == tuple(intervals):
                return q
        return None

    def on_root(self, root: int) -> Chord:
        return Chord(pc(root + i) for i in self.intervals)


class TriadQuality(Enum):
    MAJOR = ("", (0, 4, 7))
    MINOR = ("-", (0, 3, 7))
    DIMINISHED = ("-b5", (0, 3, 6))
    AUGMENTED = ("#5", (0, 4, 8))

    def __init__(self, symbol: str, intervals: tuple[int, int, int]):
        self.symbol = symbol
        self.intervals = intervals

    @classmethod
    def from_intervals(cls, intervals: tuple[int, ...]) -> "TriadQuality | None":
        for q in cls:
            if q.intervals == tuple(intervals):
                return q
        return None


@dataclass(frozen=True)
class Triad:
    root: PitchClass
    quality: TriadQuality

    def chord(self) -> Chord:
        return Chord(pc(self.root + i) for i in self.quality.intervals)

    def symbol(self) -> str:
        return f"{pc_name(self.root)}{self.quality.symbol}"


def transpose(c: Chord, k: int) -> Chord:
    """Shift every note of a chord by k semitones, mod 12."""
    return Chord(pc(n + k) for n in c)


def chord_intersection(a: Chord, b: Chord) -> Chord:
    """Multiset intersection: the largest chord contained in both inputs."""
    remaining = list(b.notes)
    common = []
    for n in a:
        if n in remaining:
            remaining.remove(n)
            common.append(n)
    return Chord(common)


# Quality tokens of the chord-symbol grammar, plus tension extensions.
# Extensions are semitone offsets added on top of a quality's four notes.
_SYMBOL_QUALITIES: dict[str, tuple[ChordQuality | None, tuple[int, ...]]] = {
    "maj7#5": (ChordQuality.MAJ7_SHARP5, ()),
    "-maj7": (ChordQuality.MINMAJ7, ()),
    "maj7": (ChordQuality.MAJ7, ()),
    "-7b5": (ChordQuality.MIN7_FLAT5, ()),
    "-9": (ChordQuality.MIN7, (2,)),
    "-7": (ChordQuality.MIN7, ()),
    "13b9": (ChordQuality.DOM7, (1, 9)),
    "o7": (ChordQuality.DIM7, ()),
    "7": (ChordQuality.DOM7, ()),
    "6/9": (None, (0, 4, 7, 9, 2)),
}


def parse_chord_symbol(text: str) -> tuple[PitchClass, Chord]:
    """Parse a chord symbol like ``Cmaj7``, ``B-7b5`` or ``F-9``.

    Returns (root pitch class, full pitch-class chord).
    """
    m = re.match(r"([A-G])([#b]?)", text)
    if not m:
        raise ParseError(f"expected a root note in {text!r}", 0)
    root = parse_note(m.group(0))
    rest = text[m.end():]
    for token, (quality, extensions) in _SYMBOL_QUALITIES.items():
        if rest == token:
            if quality is None:
                notes = [pc(root + i) for i in extensions]
            else:
                notes = [pc(root + i) for i in quality.intervals]
                notes += [pc(root + i) for i in extensions]
            return root, Chord(notes)
    raise ParseError(f"unknown chord quality {rest!r}", m.end())
