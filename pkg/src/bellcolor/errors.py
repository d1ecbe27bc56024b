"""Exception hierarchy.

Every error carries the CLI exit code it maps to, so the command layer
never has to guess.
"""

from __future__ import annotations


class BellError(Exception):
    exit_code = 1


class InputError(BellError):
    exit_code = 2


class PreconditionError(BellError, ValueError):
    exit_code = 3


class ReconstructionError(BellError):
    exit_code = 4


class CounterexampleFound(BellError):
    exit_code = 5


class MalformedGraph6(InputError, ValueError):
    pass


class MalformedInput(InputError, ValueError):
    pass


class IndexOutOfRange(PreconditionError, IndexError):
    pass


class BadFamilyParams(PreconditionError):
    pass


class BadBudget(PreconditionError):
    pass


class NotAClique(PreconditionError):
    pass


class NotNearPerfect(PreconditionError):
    pass


class TrianglePresent(PreconditionError):
    pass


class NotUniquelyUnmatched(PreconditionError):
    pass


class NotATree(PreconditionError):
    pass


class BadCycleLength(PreconditionError):
    pass


class ClassificationError(BellError):
    """A clique fell outside the five families; means a bug, not bad input."""


class NotPowerOfTwoOrder(ReconstructionError):
    pass


class NoBroomSolution(ReconstructionError):
    pass


class NotATreeResult(ReconstructionError):
    pass


class NotABellTreeGraph(ReconstructionError):
    pass


class NotALineGraph(ReconstructionError):
    pass


class NotABellMultigraph(ReconstructionError):
    pass
