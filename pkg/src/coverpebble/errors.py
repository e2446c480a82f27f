"""Exception hierarchy shared by every module."""


class PebblingError(Exception):
    """Base class for all errors raised by coverpebble."""


class FormatError(PebblingError, ValueError):
    """Malformed graph, distribution, or certificate text."""


class SelfLoopError(PebblingError, ValueError):
    def __init__(self, vertex):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class VertexOutOfRangeError(PebblingError, ValueError):
    def __init__(self, vertex, vertex_count):
        super().__init__(f"vertex {vertex} out of range 0..{vertex_count - 1}")
        self.vertex = vertex
        self.vertex_count = vertex_count


class DisconnectedError(PebblingError, ValueError):
    """Raised with the set of vertices unreachable from vertex 0."""

    def __init__(self, unreachable):
        self.unreachable = frozenset(unreachable)
        super().__init__(f"graph is disconnected; unreachable from 0: {sorted(self.unreachable)}")


class EmptySetError(PebblingError, ValueError):
    def __init__(self, what="vertex set"):
        super().__init__(f"{what} must be nonempty")


class LengthMismatchError(PebblingError, ValueError):
    def __init__(self, a, b):
        super().__init__(f"length mismatch: {a} != {b}")


class NotAdjacentError(PebblingError, ValueError):
    def __init__(self, source, target):
        super().__init__(f"vertices {source} and {target} are not adjacent")
        self.source = source
        self.target = target


class InsufficientPebblesError(PebblingError, ValueError):
    def __init__(self, source, count):
        super().__init__(f"vertex {source} holds {count} pebble(s); a move needs 2")
        self.source = source
        self.count = count


class IllegalMoveError(PebblingError, ValueError):
    """A move inside a sequence could not be applied."""

    def __init__(self, index, cause):
        super().__init__(f"illegal move at index {index}: {cause}")
        self.index = index
        self.cause = cause


class PreconditionViolated(PebblingError, ValueError):
    pass


class NonPositiveWeightError(PreconditionViolated):
    def __init__(self, vertex, value):
        super().__init__(f"weight at vertex {vertex} is {value}; positive weights required")
        self.vertex = vertex
        self.value = value


class SurplusExceedsStackError(PebblingError, RuntimeError):
    """Internal consistency failure in the single-node construction."""


class LimitExceeded(PebblingError):
    """A search ran out of its state or time budget; the verdict is unknown."""

    def __init__(self, reason, stats=None):
        super().__init__(f"search limit exceeded: {reason}")
        self.reason = reason
        self.stats = stats


class TooManyVerticesError(PebblingError, ValueError):
    def __init__(self, vertex_count, bound):
        super().__init__(f"{vertex_count} vertices exceeds the exhaustive bound {bound}")
        self.vertex_count = vertex_count
        self.bound = bound
