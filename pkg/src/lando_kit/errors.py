"""Exception hierarchy shared by every module of the toolkit."""

from __future__ import annotations


class LandoError(ValueError):
    """Base class for all input and validation errors raised by lando_kit."""


class TreeError(LandoError):
    pass


class EmptyInputError(TreeError):
    pass


class SelfLoopError(TreeError):
    pass


class ParallelEdgeError(TreeError):
    pass


class CycleError(TreeError):
    pass


class DisconnectedError(TreeError):
    pass


class DuplicateLabelError(TreeError):
    pass


class InvalidLabelError(TreeError):
    pass


class InvalidVertexError(TreeError):
    pass


class InvalidEdgeSetError(TreeError):
    pass


class DiagramSyntaxError(LandoError):
    """Malformed diagram or tree-file text.

    ``position`` is a 0-based character offset for diagrams and a 1-based
    line number for tree files; ``expected`` names what the parser wanted.
    """

    def __init__(self, message: str, position: int | None = None, expected: str | None = None):
        super().__init__(message)
        self.position = position
        self.expected = expected


class EmptyTreeNeedsVertexLineError(DiagramSyntaxError):
    pass


class BijectionError(LandoError):
    pass


class MissingAssignmentError(BijectionError):
    pass


class DuplicateAssignmentError(BijectionError):
    pass


class UnknownLabelError(BijectionError):
    pass


class SizeMismatchError(BijectionError):
    pass


class InvalidBijectionError(BijectionError):
    pass


class InvalidParameterError(LandoError):
    pass
