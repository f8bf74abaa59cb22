"""Exception hierarchy for pentagrow."""


class PentagrowError(Exception):
    """Base class for all pentagrow errors."""


class NotAGridDirection(PentagrowError):
    """A vector is not parallel to any of the ten 36-degree grid directions.

    Edges produced by growth can never trigger this; it signals a
    corrupted or hand-built structure that violates the two-orientation
    invariant.
    """


class NoLabelingFound(PentagrowError):
    """No labeling of the five center-displacement vectors satisfies the
    golden-ratio basis relations."""


class ClassificationMismatch(PentagrowError):
    """Pentagon-interior faces do not biject with pentagons."""


class NonMultipleAngle(PentagrowError):
    """A hole corner angle is not a multiple of 36 degrees."""


class NonUnitSide(PentagrowError):
    """A hole side length is not an integer multiple of the pentagon side."""


class NoFreeEdges(PentagrowError):
    """The free-edge ledger is empty (cannot occur after seeding)."""


class StructureFormatError(PentagrowError):
    """A structure file is malformed."""


class VersionMismatch(StructureFormatError):
    """A structure file declares an unsupported format version."""


class InvariantViolation(PentagrowError):
    """A structure violates a model invariant (overlap, parity, Euler...)."""


class InsufficientData(PentagrowError):
    """Not enough data points for a statistical estimate."""
