"""Bundled diagram corpus and named knot records.

The package ships a small corpus of diagrams used by the report command and
the test suite: planar PD codes (``.pd``) and positive-genus surface
diagrams (``.sdg``, the ``surface-diagram v1`` format).  Each entry carries
the invariants the diagram is expected to have, so a corrupted file is
detected at load time and reported by entry id.

Set the ``KNOTSLOPE_FIXTURES`` environment variable to a directory to load
the corpus files from there instead of the installed package data.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .diagram import DiagramError, SurfaceDiagram, ingest_pd_code, parse_diagram
from .reports import KnotRecord, SlopeSet

__all__ = [
    "FixtureEntry",
    "FixtureError",
    "fixtures_dir",
    "fixture_corpus",
    "load_fixture",
    "knot_record",
    "knot_records",
    "diagrams_for_knot",
]


class FixtureError(DiagramError):
    """A corpus file is missing, unreadable, or fails its expectations."""


@dataclass(frozen=True)
class FixtureEntry:
    """One corpus diagram plus the invariants it must exhibit."""

    id: str
    filename: str
    kind: str  # "planar-pd" or "surface-diagram"
    knot: str
    expectations: dict


_CORPUS = (
    FixtureEntry(
        id="trefoil-planar",
        filename="3_1.pd",
        kind="planar-pd",
        knot="3_1",
        expectations={"slopes": {-6, 0}, "ga_overall": True, "reduced": True},
    ),
    FixtureEntry(
        id="figure8-planar",
        filename="4_1.pd",
        kind="planar-pd",
        knot="4_1",
        expectations={"slopes": {-4, 4}, "eulers": {-1}, "ga_overall": True},
    ),
    FixtureEntry(
        id="granny-planar",
        filename="granny.pd",
        kind="planar-pd",
        knot="granny",
        expectations={"prime": False, "ga_overall": False},
    ),
    FixtureEntry(
        id="trefoil-kinked",
        filename="3_1_kinked.pd",
        kind="planar-pd",
        knot="3_1",
        expectations={"reduced": False},
    ),
    FixtureEntry(
        id="8_17-planar",
        filename="8_17_planar.pd",
        kind="planar-pd",
        knot="8_17",
        expectations={
            "slopes": {-8, 8},
            "eulers": {-3},
            "orientable": {False},
            "ga_overall": True,
            "reduced": True,
        },
    ),
    FixtureEntry(
        id="12a603-planar",
        filename="12a603_planar.pd",
        kind="planar-pd",
        knot="12a603",
        expectations={"slopes": {-10, 14}, "ga_overall": True, "reduced": True},
    ),
    FixtureEntry(
        id="10_161-planar",
        filename="10_161_planar.pd",
        kind="planar-pd",
        knot="10_161",
        expectations={"alternating": False, "ga_overall": False, "reduced": True},
    ),
    FixtureEntry(
        id="8_17-torus",
        filename="8_17_torus.sdg",
        kind="surface-diagram",
        knot="8_17",
        expectations={
            "genus": 1,
            "crossings": 11,
            "black_triple": (14, -8, False),
            "white_triple": (-8, -3, False),
            "ga_overall": True,
            "reduced": True,
        },
    ),
    FixtureEntry(
        id="8_17-torus-mirror",
        filename="8_17_torus_mirror.sdg",
        kind="surface-diagram",
        knot="8_17",
        expectations={
            "genus": 1,
            "crossings": 11,
            "slopes": {-14, 8},
            "ga_overall": True,
        },
    ),
    FixtureEntry(
        id="12a603-genus2",
        filename="12a603_genus2.sdg",
        kind="surface-diagram",
        knot="12a603",
        expectations={
            "genus": 2,
            "crossings": 13,
            "black_triple": (-10, -6, False),
            "white_triple": (16, -9, False),
            "ga_overall": True,
        },
    ),
    FixtureEntry(
        id="10_161-torus",
        filename="10_161_torus.sdg",
        kind="surface-diagram",
        knot="10_161",
        expectations={
            "genus": 1,
            "crossings": 11,
            "slopes": {-20, 2},
            "ga_overall": True,
        },
    ),
)


_RECORDS = {
    "3_1": KnotRecord(
        name="3_1", crossing_number=3, montesinos=True, alternating_knot=True,
        amphichiral=False,
    ),
    "4_1": KnotRecord(
        name="4_1", crossing_number=4, montesinos=True, alternating_knot=True,
        amphichiral=True,
        known_slopes=SlopeSet.of([-4, 0, 4], contains_infinity=True),
    ),
    "granny": KnotRecord(
        name="granny", crossing_number=6, montesinos=False, alternating_knot=True,
        amphichiral=False,
    ),
    "8_17": KnotRecord(
        name="8_17", crossing_number=8, montesinos=False, alternating_knot=True,
        amphichiral=True,
        known_slopes=SlopeSet.of(
            [-14, -8, -6, -4, -2, 0, 2, 4, 6, 8, 14], contains_infinity=True
        ),
    ),
    "10_161": KnotRecord(
        name="10_161", crossing_number=10, montesinos=False,
        alternating_knot=False, amphichiral=False,
        known_slopes=SlopeSet.of([-20, -18, -9, -8, 0, 2]),
    ),
    "12a603": KnotRecord(
        name="12a603", crossing_number=12, montesinos=False,
        alternating_knot=True, amphichiral=False,
    ),
}


def fixtures_dir() -> Path:
    """Directory holding the corpus files; honours KNOTSLOPE_FIXTURES."""
    override = os.environ.get("KNOTSLOPE_FIXTURES")
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "fixtures"


def fixture_corpus() -> tuple[FixtureEntry, ...]:
    """All bundled corpus entries, in a fixed order."""
    return _CORPUS


def knot_records() -> dict[str, KnotRecord]:
    return dict(_RECORDS)


def knot_record(name: str) -> KnotRecord:
    try:
        return _RECORDS[name]
    except KeyError:
        known = ", ".join(sorted(_RECORDS))
        raise FixtureError(f"no record for knot {name!r}; known: {known}") from None


def load_fixture(entry: FixtureEntry) -> SurfaceDiagram:
    """Parse one corpus entry, failing fast with the entry id on any defect."""
    path = fixtures_dir() / entry.filename
    try:
        text = path.read_text()
    except OSError as exc:
        raise FixtureError(f"fixture {entry.id}: cannot read {path}: {exc}") from exc
    try:
        if entry.kind == "planar-pd":
            return ingest_pd_code(text, name=entry.id)
        if entry.kind == "surface-diagram":
            return parse_diagram(text)
        raise FixtureError(f"fixture {entry.id}: unknown kind {entry.kind!r}")
    except FixtureError:
        raise
    except DiagramError as exc:
        raise FixtureError(f"fixture {entry.id}: {exc}") from exc


def diagrams_for_knot(name: str) -> list[tuple[FixtureEntry, SurfaceDiagram]]:
    """Corpus diagrams of one knot, loaded.

    Mirror fixtures are included: they only exist for amphichiral knots,
    where the reflected diagram presents the same knot.
    """
    out = []
    for entry in _CORPUS:
        if entry.knot == name:
            out.append((entry, load_fixture(entry)))
    if not out:
        raise FixtureError(f"no corpus diagrams for knot {name!r}")
    return out
