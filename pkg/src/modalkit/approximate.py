"""Approximating arbitrary scales by admissible modes over a fixed base chord."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import AdmissiblePath, build_graph, enumerate_admissible, path_notes
from .pitch import ChordQuality, PitchClass, pc


def hs_ws_scale(root: PitchClass) -> frozenset[PitchClass]:
    """The half-step/whole-step octatonic scale on a root."""
    return frozenset(pc(root + k) for k in (0, 1, 3, 4, 6, 7, 9, 10))


@dataclass(frozen=True)
class ScaleApproximation:
    target: frozenset[PitchClass]
    candidate: AdmissiblePath
    root: PitchClass
    notes: frozenset[PitchClass]
    shared: int
    dropped: frozenset[PitchClass]
    added: frozenset[PitchClass]


def approximate(
    target: frozenset[PitchClass] | set[PitchClass],
    q: ChordQuality,
    root: PitchClass,
) -> list[ScaleApproximation]:
    """Rank every admissible mode on (q, root) by shared-note count.

    Shared count descending, then fewer added tensions, then name.
    """
    target = frozenset(pc(n) for n in target)
    ranked = []
    for path in enumerate_admissible(build_graph(q)):
        notes = frozenset(path_notes(path, root))
        shared = len(target & notes)
        ranked.append(
            ScaleApproximation(
                target=target,
                candidate=path,
                root=pc(root),
                notes=notes,
                shared=shared,
                dropped=target - notes,
                added=notes - target,
            )
        )
    ranked.sort(key=lambda a: (-a.shared, len(a.added), a.candidate.name))
    return ranked
