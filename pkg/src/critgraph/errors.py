"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CritGraphError(Exception):
    """Base class for all package errors."""


# graph surgery
class GraphError(CritGraphError):
    pass


class EdgeAbsent(GraphError):
    pass


class EdgeExists(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class SelfLoopWouldForm(GraphError):
    pass


class SameVertex(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class DuplicateNeighbor(GraphError):
    pass


class EmptyOperandList(GraphError):
    pass


# planarity
class PlanarityError(CritGraphError):
    pass


class InconsistentRotation(PlanarityError):
    pass


class Disconnected(PlanarityError):
    pass


class PathEdgesMissing(PlanarityError):
    pass


# coloring
class ColoringError(CritGraphError):
    pass


class ImproperFixedAssignment(ColoringError):
    pass


class BoundExceeded(ColoringError):
    pass


class PreconditionUncolorable(ColoringError):
    pass


class TooLarge(ColoringError):
    """Instance exceeds the exact solver's size guard."""


class CapExceeded(ColoringError):
    pass


class NotCritical(ColoringError):
    pass


# constructions
class ConstructionError(CritGraphError):
    pass


class InvalidFacePath(ConstructionError):
    pass


class IdentificationCollision(ConstructionError):
    pass


class CrossEdgeExists(ConstructionError):
    pass


# recipes
class RecipeError(CritGraphError):
    pass


class RecipeSyntaxError(RecipeError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class ArityError(RecipeError):
    pass


class UnknownBase(RecipeError):
    pass


class EvenOperandCount(ArityError, ConstructionError):
    """A ring composition was requested with an even number of operands."""

    def __init__(self, count: int) -> None:
        super().__init__(f"odd operand count required (got {count})")
        self.count = count


class DecodeError(CritGraphError):
    pass
