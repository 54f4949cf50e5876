"""Failure categories shared across the package."""


class ClawgenusError(Exception):
    """Base class for all errors raised by this package."""


class StructureViolation(ClawgenusError):
    """A structural invariant that must hold by construction was broken."""


class ConsistencyError(ClawgenusError):
    """Two independent computation routes disagree."""


class FormulaIntegrityError(ClawgenusError):
    """A closed-form evaluation produced an impossible value (irrational
    residue, non-integer coefficient, or a mismatch between equivalent
    closed forms)."""


class InterlacingUndecided(ClawgenusError):
    """Interval refinement hit its depth cap before the two root sets could
    be separated; the roots may coincide."""


class OracleCapExceeded(ClawgenusError):
    """Exhaustive embedding enumeration was refused because it would be too
    expensive at the requested size."""
