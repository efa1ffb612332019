"""Checkerboard surface slopes of knot projections on closed orientable surfaces.

The package encodes a knot projection on a closed orientable surface as a
combinatorial map, validates the generalised-alternating conditions, computes
the invariant triple (boundary slope, Euler characteristic, orientability) of
both checkerboard surfaces, models crosscap and handle moves on such triples,
and assembles slope-diameter reports comparing the spread of checkerboard
slopes against twice the crossing number.
"""

from .diagram import (
    BLACK,
    WHITE,
    Coloring,
    DiagramError,
    FaceSet,
    NotColorableError,
    ParseError,
    PortRef,
    StructureError,
    SurfaceDiagram,
    canonical_form,
    checkerboard_coloring,
    ingest_pd_code,
    is_alternating,
    is_isomorphic,
    mirror,
    parse_diagram,
    serialize_diagram,
    surface_genus,
    trace_faces,
)
from .ga import GAVerdict, primality_check, reduced_check, validate_ga
from .invariants import (
    SLOPE_CALIBRATION,
    CheckerboardSurface,
    CrossingType,
    SurfaceClass,
    boundary_slope,
    build_surfaces,
    classify_crossings,
    classify_surface,
    euler_characteristic,
    orientability,
)
from .moves import (
    GapDemo,
    InvariantTriple,
    MoveSequence,
    apply_moves,
    curtis_taylor_gap_demo,
    reachable,
)
from .oracle import pushoff_linking_oracle
from .reports import (
    DiagramReport,
    KnotRecord,
    SlopeReport,
    SlopeSet,
    counterexample_report,
    diameter,
    report_to_json,
    spanning_diameter_lower_bound,
)
from .corpus import (
    FixtureEntry,
    FixtureError,
    diagrams_for_knot,
    fixture_corpus,
    fixtures_dir,
    knot_record,
    knot_records,
    load_fixture,
)

__version__ = "0.1.0"

__all__ = [
    "BLACK",
    "WHITE",
    "Coloring",
    "DiagramError",
    "FaceSet",
    "NotColorableError",
    "ParseError",
    "PortRef",
    "StructureError",
    "SurfaceDiagram",
    "canonical_form",
    "checkerboard_coloring",
    "ingest_pd_code",
    "is_alternating",
    "is_isomorphic",
    "mirror",
    "parse_diagram",
    "serialize_diagram",
    "surface_genus",
    "trace_faces",
    "GAVerdict",
    "primality_check",
    "reduced_check",
    "validate_ga",
    "SLOPE_CALIBRATION",
    "CheckerboardSurface",
    "CrossingType",
    "SurfaceClass",
    "boundary_slope",
    "build_surfaces",
    "classify_crossings",
    "classify_surface",
    "euler_characteristic",
    "orientability",
    "GapDemo",
    "InvariantTriple",
    "MoveSequence",
    "apply_moves",
    "curtis_taylor_gap_demo",
    "reachable",
    "pushoff_linking_oracle",
    "DiagramReport",
    "KnotRecord",
    "SlopeReport",
    "SlopeSet",
    "counterexample_report",
    "diameter",
    "report_to_json",
    "spanning_diameter_lower_bound",
    "FixtureEntry",
    "FixtureError",
    "diagrams_for_knot",
    "fixture_corpus",
    "fixtures_dir",
    "knot_record",
    "knot_records",
    "load_fixture",
    "__version__",
]
