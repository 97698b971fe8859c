"""Exception types shared across the package.

The CLI maps these onto its exit-code contract, so keep the hierarchy
flat and the meanings distinct.
"""


class PgkError(Exception):
    """Base class for all errors raised by this package."""


class GroupSpecError(PgkError):
    """A group-spec string does not match the grammar."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class CayleyTableError(PgkError):
    """A Cayley table violates one of the group axioms."""


class GraphFormatError(PgkError):
    """A graph file does not follow the text format."""


class PipelineError(PgkError):
    """A detection/reduction/reconstruction stage found a structural
    violation, typically meaning the input is not in the declared class."""


class SizeCapError(PgkError):
    """An operation guarded by a size cap was asked to exceed it."""
