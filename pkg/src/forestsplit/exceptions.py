"""Exception hierarchy.

Everything a caller can trigger with bad input derives from
:class:`ValidationError` (a ``ValueError``). Broken internal invariants raise
:class:`InvariantError`, which is deliberately *not* a ``ValueError``.
"""


class ValidationError(ValueError):
    """Input data violates a documented contract."""


class LoopEdge(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class VertexOutOfRange(ValidationError, IndexError):
    pass


class CycleDetected(ValidationError):
    pass


class VertexCountMismatch(ValidationError):
    pass


class InvalidRoots(ValidationError):
    pass


class NodeOutOfRange(ValidationError, IndexError):
    pass


class LengthMismatch(ValidationError):
    pass


class TooLarge(ValidationError):
    pass


class InvalidConfig(ValidationError):
    pass


class OddDegree(ValidationError):
    pass


class OddCircuitLength(ValidationError):
    pass


class InstanceSyntaxError(ValidationError):
    """Malformed instance text; carries a 1-based position."""

    def __init__(self, msg, line, col):
        super().__init__(f"{msg} (line {line}, column {col})")
        self.line = line
        self.col = col


class InstanceValidationError(ValidationError):
    """Well-formed instance text describing an invalid forest pair."""

    def __init__(self, msg, graph=None, rule=None):
        where = f"{graph}: " if graph else ""
        super().__init__(f"{where}{msg}")
        self.graph = graph
        self.rule = rule


class InvariantError(RuntimeError):
    """A guarantee of the construction did not hold. Always a bug."""
