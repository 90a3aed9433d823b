"""Exception hierarchy.

Every error raised by this package derives from :class:`TileGraphError`.
The three direct branches map onto the CLI exit codes: validation problems
exit with 2, size-cap refusals with 3, and internal invariant violations
(which indicate a bug, never bad input) with 4.

Class names double as the machine-readable error codes emitted by the CLI.
"""

from __future__ import annotations


class TileGraphError(Exception):
    """Base class for all package errors."""

    exit_code = 1

    @property
    def code(self) -> str:
        return type(self).__name__


class ValidationError(TileGraphError):
    """Input rejected while constructing or checking a domain object."""

    exit_code = 2


class SizeLimit(TileGraphError):
    """A configured size cap would be exceeded; nothing was computed."""

    exit_code = 3


class InvariantViolation(TileGraphError):
    """An internal consistency check failed; indicates a bug, not bad input."""

    exit_code = 4


# -- tile construction ------------------------------------------------------

class EmptyTile(ValidationError):
    pass


class NotHereditary(ValidationError):
    """Carries a witness point whose predecessor is missing."""

    def __init__(self, point, missing):
        self.point = point
        self.missing = missing
        super().__init__(
            f"tile is not hereditary: {point} is present but its "
            f"predecessor {missing} is missing"
        )


class DegenerateTile(ValidationError):
    pass


# -- basic-data validation --------------------------------------------------

class MissingPattern(ValidationError):
    pass


class NotBijective(ValidationError):
    pass


class UnknownSymbol(ValidationError):
    pass


class NotInvertible(ValidationError):
    pass


# -- graph operations -------------------------------------------------------

class SourceRangeMismatch(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class InconsistentInput(ValidationError):
    pass


# -- shift-space operations -------------------------------------------------

class NotAdmissible(ValidationError):
    pass


class RegionShapeMismatch(ValidationError):
    pass
