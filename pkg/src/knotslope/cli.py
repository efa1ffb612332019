"""Command-line front end.

Subcommands: validate, invariants, mirror, moves, report, fixtures.
Exit codes: 0 success, 1 validation failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corpus import FixtureError, fixture_corpus, knot_record, diagrams_for_knot
from .diagram import (
    DiagramError,
    SurfaceDiagram,
    checkerboard_coloring,
    ingest_pd_code,
    mirror,
    parse_diagram,
    serialize_diagram,
    surface_genus,
    trace_faces,
)
from .ga import validate_ga
from .invariants import build_surfaces
from .moves import InvariantTriple, MoveSequence, apply_moves
from .reports import counterexample_report, report_to_json

__all__ = ["main"]

USAGE_ERROR = 2
VALIDATION_FAILURE = 1


def _load_diagram(path_str: str) -> SurfaceDiagram:
    path = Path(path_str)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DiagramError(f"cannot read {path}: {exc}") from exc
    if text.lstrip().startswith("X["):
        return ingest_pd_code(text, name=path.stem)
    return parse_diagram(text)


def _triple_str(surface) -> str:
    kind = "non-orientable" if not surface.orientable else "orientable"
    return f"slope {surface.slope:+d}, chi {surface.euler}, {kind}"


def _cmd_validate(args) -> int:
    d = _load_diagram(args.file)
    verdict = validate_ga(d)
    for field in ("alternating", "cellular", "prime", "reduced", "overall"):
        print(f"{field:12s} {getattr(verdict, field)}")
    return 0 if verdict.overall else VALIDATION_FAILURE


def _cmd_invariants(args) -> int:
    d = _load_diagram(args.file)
    faces = trace_faces(d)
    coloring = checkerboard_coloring(d, faces)
    black, white = build_surfaces(d, coloring, faces)
    if args.format == "json":
        import json

        doc = {
            "schema": 1,
            "name": d.name,
            "crossings": d.crossing_count,
            "genus": surface_genus(d, faces),
            "faces": len(faces),
            "black_faces": len(coloring.faces_of(black.color)),
            "white_faces": len(coloring.faces_of(white.color)),
            "black": {"slope": black.slope, "euler": black.euler,
                      "orientable": black.orientable},
            "white": {"slope": white.slope, "euler": white.euler,
                      "orientable": white.orientable},
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"diagram   {d.name}")
        print(f"crossings {d.crossing_count}")
        print(f"genus     {surface_genus(d, faces)}")
        print(f"faces     {len(faces)} "
              f"({len(coloring.faces_of(black.color))} black, "
              f"{len(coloring.faces_of(white.color))} white)")
        print(f"black     {_triple_str(black)}")
        print(f"white     {_triple_str(white)}")
    return 0


def _cmd_mirror(args) -> int:
    d = _load_diagram(args.file)
    out = serialize_diagram(mirror(d))
    Path(args.output).write_text(out)
    print(f"wrote {args.output}")
    return 0


def _parse_from(spec: str) -> InvariantTriple:
    fields = {}
    for part in spec.split(","):
        if "=" not in part:
            raise DiagramError(f"malformed --from component {part!r}")
        key, _, value = part.partition("=")
        fields[key.strip()] = value.strip()
    extra = set(fields) - {"slope", "chi", "orientable"}
    if extra or set(fields) != {"slope", "chi", "orientable"}:
        raise DiagramError(
            "--from needs exactly slope=<int>,chi=<int>,orientable=<bool>"
        )
    low = fields["orientable"].lower()
    if low not in ("true", "false"):
        raise DiagramError(f"orientable must be true or false, got {low!r}")
    try:
        return InvariantTriple(
            slope=int(fields["slope"]),
            euler=int(fields["chi"]),
            orientable=low == "true",
        )
    except ValueError as exc:
        raise DiagramError(str(exc)) from exc


def _cmd_moves(args) -> int:
    start = _parse_from(args.start)
    try:
        seq = MoveSequence(
            handles=args.handles,
            crosscaps_plus=args.crosscaps_plus,
            crosscaps_minus=args.crosscaps_minus,
        )
    except ValueError as exc:
        raise DiagramError(str(exc)) from exc
    end = apply_moves(start, seq)
    print(f"{start} + [{seq}] = {end}")
    return 0


def _cmd_report(args) -> int:
    record = knot_record(args.knot)
    diagrams = [d for _, d in diagrams_for_knot(args.knot)]
    report = counterexample_report(record, diagrams)
    if args.format == "json":
        sys.stdout.write(report_to_json(report))
    else:
        print(f"knot       {record.name} (c = {record.crossing_number}, "
              f"2c = {report.two_c})")
        for r in report.diagrams:
            if r.error is not None:
                print(f"  {r.name}: error: {r.error}")
                continue
            tag = "GA" if r.counted else "not GA (excluded)"
            print(f"  {r.name}: genus {r.genus}, {r.crossings} crossings, {tag}")
            print(f"    black {_triple_str(r.black)}")
            print(f"    white {_triple_str(r.white)}")
        print(f"d_S lower  {report.d_s_lower}")
        if report.d_known is not None:
            print(f"d known    {report.d_known}")
        print(f"verdict    {report.verdict}")
    return 0


def _cmd_fixtures(args) -> int:
    if args.action != "list":
        raise DiagramError(f"unknown fixtures action {args.action!r}")
    for entry in fixture_corpus():
        print(f"{entry.id:20s} {entry.kind:16s} {entry.knot:8s} {entry.filename}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotslope",
        description="Checkerboard surface slopes of knot projections on surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check generalised-alternating conditions")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("invariants", help="print invariant triples of both surfaces")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("mirror", help="write the mirrored diagram")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_mirror)

    p = sub.add_parser("moves", help="apply handle/crosscap moves to a triple")
    p.add_argument("--from", dest="start", required=True,
                   metavar="slope=S,chi=C,orientable=B")
    p.add_argument("--handles", type=int, default=0)
    p.add_argument("--crosscaps-plus", type=int, default=0)
    p.add_argument("--crosscaps-minus", type=int, default=0)
    p.set_defaults(func=_cmd_moves)

    p = sub.add_parser("report", help="slope-diameter report from corpus diagrams")
    p.add_argument("--knot", required=True)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("fixtures", help="corpus management")
    p.add_argument("action", choices=("list",))
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DiagramError, FixtureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
