"""Command-line front end.

Every verb is a thin adapter over the library; output is byte-deterministic
for a fixed input.  Exit codes: 0 success, 2 usage error, 1 domain error
(the error class name goes to stderr).

Output is never styled, so setting MODAL_NO_COLOR changes nothing; the
variable is honored by construction.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import braid as braid_mod
from . import graph as graph_mod
from . import leading as leading_mod
from . import modes as modes_mod
from .approximate import approximate
from .errors import ModalkitError
from .pitch import Chord, ChordQuality, parse_note, pc_name

ROMAN = ("I", "II", "III", "IV", "V", "VI", "VII")

QUALITY_ORDER = [
    ChordQuality.DIM7,
    ChordQuality.MAJ7_SHARP5,
    ChordQuality.MINMAJ7,
    ChordQuality.MAJ7,
    ChordQuality.DOM7,
    ChordQuality.MIN7,
    ChordQuality.MIN7_FLAT5,
]


def _quality(token: str) -> ChordQuality:
    try:
        return ChordQuality.from_symbol(token)
    except KeyError:
        raise argparse.ArgumentTypeError(f"unknown chord quality {token!r}")


def _scale(token: str) -> modes_mod.ScaleType:
    try:
        return modes_mod.ScaleType.from_label(token)
    except KeyError:
        raise argparse.ArgumentTypeError(f"unknown scale {token!r}")


def _pcs(token: str) -> list[int]:
    try:
        values = [int(t) for t in token.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad pitch-class list {token!r}")
    if not values or any(not 0 <= v <= 11 for v in values):
        raise argparse.ArgumentTypeError("pitch classes must be integers in 0..11")
    return values


def _emit_table(rows: list[dict[str, str]], fmt: str, out) -> None:
    if not rows:
        return
    keys = list(rows[0])
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        widths = {k: max(len(k), *(len(r[k]) for r in rows)) for k in keys}
        for row in rows:
            out.write("  ".join(row[k].ljust(widths[k]) for k in keys).rstrip() + "\n")


def _cmd_modes(args, out) -> int:
    rows = []
    for i, mode in enumerate(modes_mod.standard_modes(args.scale, args.root)):
        rows.append(
            {
                "degree": ROMAN[i],
                "name": mode.name,
                "pitch_classes": " ".join(str(d) for d in mode.degrees),
                "notes": " ".join(pc_name(d) for d in mode.degrees),
            }
        )
    _emit_table(rows, args.format, out)
    return 0


def _cmd_harmonize(args, out) -> int:
    degrees = [args.degree] if args.degree else list(range(1, 8))
    rows = [
        {
            "degree": ROMAN[d - 1],
            "quality": modes_mod.harmonize(args.scale, d).symbol,
        }
        for d in degrees
    ]
    _emit_table(rows, args.format, out)
    return 0


def _cmd_decompose(args, out) -> int:
    degrees = sorted(set(args.notes), key=lambda n: (n - args.root) % 12)
    scale = modes_mod.ModalScale(args.root, tuple(degrees))
    mode = modes_mod.decompose(scale)
    triad = mode.tension_triad()
    out.write(f"scale:   {' '.join(str(d) for d in scale.degrees)}\n")
    out.write(
        f"base:    {pc_name(args.root)}{mode.base_quality().symbol}"
        f"  {' '.join(str(n) for n in mode.base.notes)}\n"
    )
    out.write(
        f"tension: {triad.symbol()}  {' '.join(str(n) for n in mode.tension.notes)}\n"
    )
    return 0


def _cmd_graph(args, out) -> int:
    g = graph_mod.build_graph(args.quality)
    if args.dot:
        out.write(graph_mod.emit_dot(g, args.root))
    else:
        per_degree = g.labels_by_degree()
        for degree in range(1, 8):
            names = " ".join(v.name for v in per_degree[degree])
            out.write(f"{ROMAN[degree - 1]}: {names}\n")
        out.write(
            f"vertices={len(g.vertices)} edges={len(g.edges)} "
            f"chi={graph_mod.euler_characteristic(g)} tau={graph_mod.tcm(args.quality)}\n"
        )
    return 0


def _cmd_tcm(args, out) -> int:
    qualities = QUALITY_ORDER if args.all else [args.quality]
    rows = []
    for q in qualities:
        g = graph_mod.build_graph(q)
        rows.append(
            {
                "quality": q.symbol,
                "chi": str(graph_mod.euler_characteristic(g)),
                "tau": str(graph_mod.tcm(q)),
                "admissible": str(len(graph_mod.enumerate_admissible(g))),
            }
        )
    _emit_table(rows, args.format, out)
    return 0


def _path_rows(paths) -> list[dict[str, str]]:
    return [
        {
            "name": p.name,
            "kind": "special" if p.is_special else "standard",
            "labels": " ".join(p.label_names()),
        }
        for p in paths
    ]


def _cmd_admissible(args, out) -> int:
    paths = graph_mod.enumerate_admissible(graph_mod.build_graph(args.quality))
    _emit_table(_path_rows(paths), args.format, out)
    return 0


def _cmd_special(args, out) -> int:
    paths = graph_mod.special_modes(args.quality)
    _emit_table(_path_rows(paths), args.format, out)
    if args.paper_compat:
        published = graph_mod.PUBLISHED_SPECIALS.get(args.quality, ())
        computed = {p.label_names() for p in paths}
        out.write("\npublished degree lists:\n")
        for name, labels in published:
            marker = "agrees" if labels in computed else "DIFFERS from computation"
            out.write(f"  {name}: {' '.join(labels)}  [{marker}]\n")
    return 0


def _cmd_braid(args, out) -> int:
    text = open(args.file, encoding="utf-8").read()
    progression = leading_mod.parse_progression(text)
    out.write(f"strands={leading_mod.STRANDS}\n")
    words = leading_mod.braids_of_progression(progression)
    labels = [label for label, _root, _chord in progression.chords]
    for (a, b), word in zip(zip(labels, labels[1:]), words):
        out.write(f"{a} -> {b}: {braid_mod.serialize_word(word)}\n")
        if args.ascii:
            out.write(braid_mod.render_ascii(word))
    return 0


def _cmd_approx(args, out) -> int:
    ranked = approximate(set(args.target), args.quality, args.root)
    rows = [
        {
            "rank": str(i + 1),
            "name": a.candidate.name,
            "kind": "special" if a.candidate.is_special else "standard",
            "shared": str(a.shared),
            "dropped": " ".join(str(n) for n in sorted(a.dropped)) or "-",
            "added": " ".join(str(n) for n in sorted(a.added)) or "-",
        }
        for i, a in enumerate(ranked)
    ]
    _emit_table(rows, args.format, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modalkit",
        description="Modal scales, base-chord graphs, braid words and voice leadings.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p = sub.add_parser("modes", help="list the seven modes of a parent scale")
    p.add_argument("--scale", type=_scale, required=True)
    p.add_argument("--root", type=parse_note, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_modes)

    p = sub.add_parser("harmonize", help="seventh-chord quality per scale degree")
    p.add_argument("--scale", type=_scale, required=True)
    p.add_argument("--degree", type=int, choices=range(1, 8))
    add_format(p)
    p.set_defaults(func=_cmd_harmonize)

    p = sub.add_parser("decompose", help="split a scale into base chord + tension triad")
    p.add_argument("--notes", type=_pcs, required=True)
    p.add_argument("--root", type=int, choices=range(0, 12), required=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("graph", help="show or export a base-chord graph")
    p.add_argument("--quality", type=_quality, required=True)
    p.add_argument("--root", type=parse_note)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("tcm", help="topological complexity per quality")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--quality", type=_quality)
    group.add_argument("--all", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_tcm)

    p = sub.add_parser("admissible", help="all admissible modes on a quality")
    p.add_argument("--quality", type=_quality, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_admissible)

    p = sub.add_parser("special", help="special (non-standard) admissible modes")
    p.add_argument("--quality", type=_quality, required=True)
    p.add_argument("--paper-compat", action="store_true")
    add_format(p)
    p.set_defaults(func=_cmd_special)

    p = sub.add_parser("braid", help="braid words for a progression file")
    p.add_argument("--file", required=True)
    p.add_argument("--ascii", action="store_true")
    p.set_defaults(func=_cmd_braid)

    p = sub.add_parser("approx", help="approximate a scale by admissible modes")
    p.add_argument("--target", type=_pcs, required=True)
    p.add_argument("--quality", type=_quality, required=True)
    p.add_argument("--root", type=parse_note, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_approx)

    return parser


def run(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except ModalkitError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
