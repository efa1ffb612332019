"""Knot records, slope sets, slope diameters and counterexample reports.

The headline quantity is the slope diameter: the largest distance between
finite boundary slopes of a knot.  Checkerboard surfaces of generalised
alternating projections realise spanning slopes, so the spread of the
slopes collected from validated diagrams bounds the spanning-slope diameter
d_S from below; whenever that bound exceeds twice the crossing number the
knot contradicts the claim d_S(K) = 2c(K), and the report says so.

Reports are deterministic: the same records and diagrams produce the same
object and byte-identical JSON.  Slopes are kept as exact rationals
(integers or integer pairs), never floats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .diagram import DiagramError, SurfaceDiagram
from .ga import GAVerdict, validate_ga
from .invariants import CheckerboardSurface, build_surfaces

__all__ = [
    "KnotRecord",
    "SlopeSet",
    "SlopeReport",
    "DiagramReport",
    "diameter",
    "spanning_diameter_lower_bound",
    "counterexample_report",
    "report_to_json",
]

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class SlopeSet:
    """A finite set of boundary slopes, with the infinite slope tracked aside."""

    slopes: frozenset
    contains_infinity: bool = False

    @classmethod
    def of(cls, values: Sequence[Rational], contains_infinity: bool = False) -> "SlopeSet":
        return cls(frozenset(Fraction(v) for v in values), contains_infinity)

    def finite(self) -> frozenset:
        return self.slopes

    def negated(self) -> "SlopeSet":
        return SlopeSet(frozenset(-s for s in self.slopes), self.contains_infinity)


@dataclass(frozen=True)
class KnotRecord:
    """Named knot metadata; the identity of fixture diagrams is trusted."""

    name: str
    crossing_number: int
    montesinos: Optional[bool] = None
    alternating_knot: Optional[bool] = None
    amphichiral: Optional[bool] = None
    known_slopes: Optional[SlopeSet] = None

    def __post_init__(self) -> None:
        if self.crossing_number < 3:
            raise ValueError("nontrivial knots need crossing number at least 3")


@dataclass(frozen=True)
class DiagramReport:
    """Per-diagram slice of a report."""

    name: str
    genus: int
    crossings: int
    ga_verdict: Optional[GAVerdict]
    black: Optional[CheckerboardSurface]
    white: Optional[CheckerboardSurface]
    error: Optional[str] = None

    @property
    def counted(self) -> bool:
        """Whether this diagram's slopes enter the spanning-diameter bound."""
        return self.ga_verdict is not None and self.ga_verdict.overall


@dataclass(frozen=True)
class SlopeReport:
    knot: KnotRecord
    diagrams: tuple[DiagramReport, ...]
    d_s_lower: Optional[int]
    two_c: int
    verdict: str
    d_known: Optional[Rational]
    flags: tuple[str, ...] = field(default=())


def diameter(slopes: SlopeSet) -> Rational:
    """Largest distance between finite slopes; the infinite slope is ignored."""
    finite = slopes.finite()
    if not finite:
        raise ValueError("no finite slopes: diameter undefined")
    return max(finite) - min(finite)


def spanning_diameter_lower_bound(
    entries: Sequence[tuple[GAVerdict, Sequence[CheckerboardSurface]]],
) -> int:
    """max - min of checkerboard slopes over validated diagrams.

    Surfaces from diagrams whose verdict is not overall-valid are excluded:
    only generalised alternating projections are known to have essential
    checkerboard surfaces, so only their slopes witness the bound.
    """
    slopes = [
        s.slope
        for verdict, surfaces in entries
        if verdict.overall
        for s in surfaces
    ]
    if not slopes:
        raise ValueError("no surfaces from validated diagrams")
    return max(slopes) - min(slopes)


def _theorem_flags(knot: KnotRecord, d_s_lower: Optional[int], two_c: int) -> tuple[str, ...]:
    """Consistency notes comparing metadata against the classical bounds."""
    flags = []
    if knot.known_slopes is not None:
        d_known = diameter(knot.known_slopes)
        if knot.montesinos and d_known > two_c:
            flags.append("montesinos-record-exceeds-2c")
    if knot.alternating_knot and d_s_lower is not None and d_s_lower > two_c:
        flags.append("alternating-spanning-diameter-exceeds-2c")
    return tuple(flags)


def counterexample_report(
    knot: KnotRecord, diagrams: Sequence[SurfaceDiagram]
) -> SlopeReport:
    """Aggregate diagrams of one knot into a slope-diameter verdict.

    A diagram that fails to validate contributes an error entry instead of
    aborting the report; its surfaces are excluded from the bound.
    """
    per_diagram = []
    for d in diagrams:
        try:
            verdict = validate_ga(d)
            black, white = build_surfaces(d)
        except DiagramError as exc:
            per_diagram.append(
                DiagramReport(
                    name=d.name, genus=d.claimed_genus, crossings=d.crossing_count,
                    ga_verdict=None, black=None, white=None, error=str(exc),
                )
            )
            continue
        per_diagram.append(
            DiagramReport(
                name=d.name, genus=d.claimed_genus, crossings=d.crossing_count,
                ga_verdict=verdict, black=black, white=white,
            )
        )

    counted = [
        (r.ga_verdict, (r.black, r.white)) for r in per_diagram if r.counted
    ]
    two_c = 2 * knot.crossing_number
    if counted:
        d_s_lower = spanning_diameter_lower_bound(counted)
        verdict = "counterexample" if d_s_lower > two_c else "consistent"
    else:
        d_s_lower = None
        verdict = "inconclusive"

    d_known = None
    if knot.known_slopes is not None:
        d_known = diameter(knot.known_slopes)

    return SlopeReport(
        knot=knot,
        diagrams=tuple(per_diagram),
        d_s_lower=d_s_lower,
        two_c=two_c,
        verdict=verdict,
        d_known=d_known,
        flags=_theorem_flags(knot, d_s_lower, two_c),
    )


def _json_rational(value: Rational):
    f = Fraction(value)
    if f.denominator == 1:
        return int(f)
    return [f.numerator, f.denominator]


def _json_surface(s: CheckerboardSurface) -> dict:
    return {
        "slope": s.slope,
        "euler": s.euler,
        "orientable": s.orientable,
    }


def _json_verdict(v: GAVerdict) -> dict:
    return {
        "alternating": v.alternating,
        "cellular": v.cellular,
        "prime": v.prime,
        "reduced": v.reduced,
        "overall": v.overall,
    }


def report_to_json(report: SlopeReport) -> str:
    """Versioned machine-readable report; field order is part of the format."""
    diagrams = []
    for r in report.diagrams:
        entry = {"name": r.name, "genus": r.genus, "crossings": r.crossings}
        if r.error is not None:
            entry["error"] = r.error
        else:
            entry["ga_verdict"] = _json_verdict(r.ga_verdict)
            entry["black"] = _json_surface(r.black)
            entry["white"] = _json_surface(r.white)
        diagrams.append(entry)
    doc = {
        "schema": 1,
        "knot": report.knot.name,
        "crossing_number": report.knot.crossing_number,
        "two_c": report.two_c,
        "diagrams": diagrams,
        "d_S_lower": report.d_s_lower,
        "d_known": None if report.d_known is None else _json_rational(report.d_known),
        "verdict": report.verdict,
    }
    return json.dumps(doc, indent=2) + "\n"
