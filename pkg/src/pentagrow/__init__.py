"""Exact-arithmetic simulator and analysis toolkit for the random
pentagon cell-growth model: pentagons glued one at a time to uniformly
chosen free edges, with all geometry in the ring of cyclotomic integers
so every predicate is an exact integer sign test."""

from .errors import (ClassificationMismatch, InsufficientData,
                     InvariantViolation, NoFreeEdges, NoLabelingFound,
                     NonMultipleAngle, NonUnitSide, NotAGridDirection,
                     PentagrowError, StructureFormatError, VersionMismatch)
from .ring import PHI, SIDE_SQ, CycPoint, QSqrt5
from .predicates import (DOWN, UP, direction_class, interiors_overlap,
                         pentagon_vertices, verify_center_basis_relations)
from .growth import (GrowthState, Pentagon, Structure, attach, grow,
                     seed_structure)
from .subdivision import (SubdivisionGraph, build_subdivision, euler_holes,
                          extract_faces, perimeter)
from .holes import (Catalog, HoleSignature, StepWord, canonicalize, census,
                    enumerate_angle_types, load_catalog, save_catalog,
                    signature_of, verify_angle_sum)
from .stats import (BatchSummary, RunRecord, estimate_limits, run_batch,
                    write_csv)
from .export import load, save, to_svg, write_svg

__version__ = "0.1.0"
