"""Base-chord graphs: construction, topology and admissible-mode enumeration.

Each seventh-chord quality gets an oriented planar graph whose vertices are
the scale-degree labels reachable by the standard modes built on that
quality, with every root-to-seventh connection between consecutive degrees.
Degrees 2, 4 and 6 carry one or two labels; each two-label degree creates a
"diamond" and contributes one generator to the fundamental group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalError
from .modes import ScaleType, all_standard_modes, harmonize, standard_modes
from .pitch import ChordQuality, PitchClass, pc, pc_name

# Label spelling per (degree, semitone offset), following the figure
# convention M=major, m=minor, P=perfect, a=augmented, d=diminished.
_LABEL_NAMES: dict[tuple[int, int], str] = {
    (1, 0): "I",
    (2, 1): "mII", (2, 2): "MII", (2, 3): "aII",
    (3, 3): "mIII", (3, 4): "MIII",
    (4, 4): "dIV", (4, 5): "PIV", (4, 6): "aIV",
    (5, 6): "dV", (5, 7): "PV", (5, 8): "aV",
    (6, 8): "mVI", (6, 9): "MVI",
    (7, 9): "dVII", (7, 10): "mVII", (7, 11): "MVII",
}

# The graph for maj7 spells its 3-semitone second degree aII (augmented
# second), not mIII: the minor third is forbidden over a major-third chord.
_AUGMENTED_SECOND_QUALITIES = {ChordQuality.MAJ7}


@dataclass(frozen=True, order=True)
class DegreeLabel:
    degree: int
    semitones: int

    @property
    def name(self) -> str:
        return _LABEL_NAMES[(self.degree, self.semitones)]

    def note_name(self, root: PitchClass) -> str:
        """Spell this degree over a root: letter from the degree, accidental
        from the offset against the major scale."""
        letters = "CDEFGAB"
        root_letter = pc_name(root)[0]
        letter = letters[(letters.index(root_letter) + self.degree - 1) % 7]
        natural = pc(_letter_pc(letter) - root)
        acc = self.semitones - natural
        if acc > 6:
            acc -= 12
        if acc < -6:
            acc += 12
        return letter + ("#" * acc if acc >= 0 else "b" * (-acc))

    def __str__(self) -> str:
        return self.name


def _letter_pc(letter: str) -> int:
    return {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}[letter]


@dataclass(frozen=True)
class ModeGraph:
    quality: ChordQuality
    vertices: tuple[DegreeLabel, ...]
    edges: tuple[tuple[DegreeLabel, DegreeLabel], ...]

    def labels_by_degree(self) -> dict[int, tuple[DegreeLabel, ...]]:
        result: dict[int, list[DegreeLabel]] = {d: [] for d in range(1, 8)}
        for v in self.vertices:
            result[v.degree].append(v)
        return {d: tuple(sorted(vs)) for d, vs in result.items()}


@dataclass(frozen=True)
class AdmissiblePath:
    labels: tuple[DegreeLabel, ...]
    is_special: bool
    name: str = ""

    def offsets(self) -> tuple[int, ...]:
        return tuple(label.semitones for label in self.labels)

    def label_names(self) -> tuple[str, ...]:
        return tuple(label.name for label in self.labels)


def _label(degree: int, semitones: int, quality: ChordQuality) -> DegreeLabel:
    if degree == 2 and semitones == 3 and quality not in _AUGMENTED_SECOND_QUALITIES:
        raise InternalError("3-semitone second degree only occurs on maj7")
    return DegreeLabel(degree, semitones)


def standard_patterns(q: ChordQuality) -> dict[tuple[int, ...], str]:
    """Offset tuples (and names) of the standard modes whose base chord is q."""
    patterns: dict[tuple[int, ...], str] = {}
    for scale_type in ScaleType:
        for degree in range(1, 8):
            if harmonize(scale_type, degree) is q:
                mode = standard_modes(scale_type, 0)[degree - 1]
                patterns.setdefault(mode.offsets(), mode.name)
    return patterns


def build_graph(q: ChordQuality) -> ModeGraph:
    """The oriented graph of all degree choices the standard modes allow on q."""
    choices: dict[int, set[int]] = {d: set() for d in range(1, 8)}
    for offsets in standard_patterns(q):
        for degree, semitones in enumerate(offsets, start=1):
            choices[degree].add(semitones)
    vertices: list[DegreeLabel] = []
    per_degree: dict[int, list[DegreeLabel]] = {}
    for degree in range(1, 8):
        labels = [_label(degree, s, q) for s in sorted(choices[degree])]
        per_degree[degree] = labels
        vertices.extend(labels)
    edges = [
        (a, b)
        for degree in range(1, 7)
        for a in per_degree[degree]
        for b in per_degree[degree + 1]
    ]
    return ModeGraph(q, tuple(vertices), tuple(edges))


def euler_characteristic(g: ModeGraph) -> int:
    """Vertices minus edges."""
    return len(g.vertices) - len(g.edges)


def maximal_tree(g: ModeGraph) -> tuple[tuple[DegreeLabel, DegreeLabel], ...]:
    """A deterministic spanning tree: first-reached edges in vertex order."""
    seen = {g.vertices[0]}
    tree: list[tuple[DegreeLabel, DegreeLabel]] = []
    # Edges connect consecutive degrees only, so one left-to-right sweep
    # reaches every vertex.
    for edge in g.edges:
        a, b = edge
        if (a in seen) != (b in seen):
            tree.append(edge)
            seen.update(edge)
    if len(tree) != len(g.vertices) - 1:
        raise InternalError("graph is not connected")
    return tuple(tree)


def tcm(q: ChordQuality) -> int:
    """Topological complexity: rank of the fundamental group, 1 - chi."""
    return 1 - euler_characteristic(build_graph(q))


# Canonical names for the twelve special modes, keyed by offset tuple.
SPECIAL_NAMES: dict[tuple[int, ...], str] = {
    (0, 3, 4, 5, 7, 9, 11): "ionian #2",
    (0, 1, 4, 5, 7, 9, 10): "mixolydian b2",
    (0, 1, 4, 6, 7, 9, 10): "mixolydian b2 #4",
    (0, 2, 4, 6, 7, 8, 10): "mixolydian #4 b6",
    (0, 1, 4, 6, 7, 8, 10): "mixolydian b2 #4 b6",
    (0, 2, 3, 6, 7, 8, 10): "eolian #4",
    (0, 1, 3, 6, 7, 8, 10): "phrygian #4",
    (0, 1, 3, 6, 7, 9, 10): "dorian b2 #4",
    (0, 2, 3, 5, 6, 9, 10): "locrian #2 #6",
    (0, 2, 3, 4, 6, 8, 10): "superlocrian #2",
    (0, 1, 3, 4, 6, 9, 10): "superlocrian #6",
    (0, 2, 3, 4, 6, 9, 10): "superlocrian #2 #6",
}


def enumerate_admissible(g: ModeGraph) -> list[AdmissiblePath]:
    """All root-to-seventh paths taking one label per degree.

    Deterministic order: lexicographic over the per-degree choices with the
    flatter alteration first.
    """
    per_degree = g.labels_by_degree()
    standard = standard_patterns(g.quality)
    paths: list[AdmissiblePath] = [AdmissiblePath((), False)]
    for degree in range(1, 8):
        paths = [
            AdmissiblePath(p.labels + (label,), False)
            for p in paths
            for label in per_degree[degree]
        ]
    result = []
    for p in paths:
        offsets = p.offsets()
        if offsets in standard:
            result.append(AdmissiblePath(p.labels, False, standard[offsets]))
        else:
            name = SPECIAL_NAMES.get(offsets, "")
            if not name:
                raise InternalError(f"unnamed special pattern {offsets}")
            result.append(AdmissiblePath(p.labels, True, name))
    return result


def special_modes(q: ChordQuality) -> list[AdmissiblePath]:
    """Admissible paths that are not standard modes."""
    return [p for p in enumerate_admissible(build_graph(q)) if p.is_special]


# Degree lists printed in the source classification for the special modes.
# Two of them (eolian b2 and locrian #2 #6) coincide with standard patterns
# (phrygian and locrian) and disagree with the set-difference computation;
# they are kept verbatim here for the --paper-compat diagnostic.
PUBLISHED_SPECIALS: dict[ChordQuality, tuple[tuple[str, tuple[str, ...]], ...]] = {
    ChordQuality.MAJ7: (
        ("ionian #2", ("I", "aII", "MIII", "PIV", "PV", "MVI", "MVII")),
    ),
    ChordQuality.DOM7: (
        ("mixolydian b2", ("I", "mII", "MIII", "PIV", "PV", "MVI", "mVII")),
        ("mixolydian b2 #4", ("I", "mII", "MIII", "aIV", "PV", "MVI", "mVII")),
        ("mixolydian #4 b6", ("I", "MII", "MIII", "aIV", "PV", "mVI", "mVII")),
        ("mixolydian b2 #4 b6", ("I", "mII", "MIII", "aIV", "PV", "mVI", "mVII")),
    ),
    ChordQuality.MIN7: (
        ("eolian b2", ("I", "mII", "mIII", "PIV", "PV", "mVI", "mVII")),
        ("eolian #4", ("I", "MII", "mIII", "aIV", "PV", "mVI", "mVII")),
        ("phrygian #4", ("I", "mII", "mIII", "aIV", "PV", "mVI", "mVII")),
    ),
    ChordQuality.MIN7_FLAT5: (
        ("locrian #2 #6", ("I", "mII", "mIII", "PIV", "dV", "mVI", "mVII")),
        ("superlocrian #2", ("I", "MII", "mIII", "dIV", "dV", "mVI", "mVII")),
        ("superlocrian #6", ("I", "mII", "mIII", "dIV", "dV", "MVI", "mVII")),
        ("superlocrian #2 #6", ("I", "MII", "mIII", "dIV", "dV", "MVI", "mVII")),
    ),
}


def emit_dot(g: ModeGraph, root: PitchClass | None = None) -> str:
    """Render the graph as a DOT digraph; note names when a root is given."""

    def node(v: DegreeLabel) -> str:
        return v.name if root is None else v.note_name(root)

    lines = [f'digraph "{g.quality.symbol}" {{', "  rankdir=LR;"]
    for v in g.vertices:
        lines.append(f'  "{node(v)}";')
    for a, b in g.edges:
        lines.append(f'  "{node(a)}" -> "{node(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def mode_graphs() -> list[ModeGraph]:
    """The seven graphs in the order of the complexity table."""
    order = [
        ChordQuality.DIM7,
        ChordQuality.MAJ7_SHARP5,
        ChordQuality.MINMAJ7,
        ChordQuality.MAJ7,
        ChordQuality.DOM7,
        ChordQuality.MIN7,
        ChordQuality.MIN7_FLAT5,
    ]
    return [build_graph(q) for q in order]


def find_mode_by_name(name: str) -> tuple[ChordQuality, AdmissiblePath] | None:
    """Look up any admissible mode (standard or special) by canonical name."""
    for g in mode_graphs():
        for p in enumerate_admissible(g):
            if p.name == name:
                return g.quality, p
    return None


def path_notes(p: AdmissiblePath, root: PitchClass) -> tuple[PitchClass, ...]:
    return tuple(pc(root + s) for s in p.offsets())


def all_admissible_count() -> int:
    return sum(len(enumerate_admissible(g)) for g in mode_graphs())


def braid_of_graph(
    q: ChordQuality,
    index_map: dict[int, int] | None = None,
    strands: int = 4,
) -> "BraidWord":
    """Best-effort braid picture of a base-chord graph.

    Interpretive reconstruction: each two-choice degree (a diamond in the
    graph, one generator of the fundamental group) contributes one positive
    generator, indexed by its degree through ``index_map`` (default
    2, 4, 6 -> 1, 2, 3).
    """
    from .braid import BraidWord

    if index_map is None:
        index_map = {2: 1, 4: 2, 6: 3}
    per_degree = build_graph(q).labels_by_degree()
    letters = tuple(
        (index_map[d], 1) for d in sorted(index_map) if len(per_degree[d]) > 1
    )
    return BraidWord(strands, letters)
