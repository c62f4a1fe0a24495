"""Exception hierarchy.

Every error carries an ``exit_code`` used by the CLI; the codes are part of
the documented command-line contract (see README).
"""


class CompactSpanError(Exception):
    exit_code = 1


class GraphInputError(CompactSpanError):
    exit_code = 4


class MalformedHeader(GraphInputError):
    pass


class MalformedEdgeLine(GraphInputError):
    pass


class NotSimple(CompactSpanError):
    exit_code = 5


class SelfLoop(NotSimple):
    pass


class DuplicateEdge(NotSimple):
    pass


class VertexOutOfRange(CompactSpanError):
    exit_code = 5


class Disconnected(CompactSpanError):
    exit_code = 6


class TooLarge(CompactSpanError):
    exit_code = 7


class NumericalFailure(CompactSpanError):
    exit_code = 8


class BridgeDowndate(NumericalFailure):
    """Rank-one downdate requested for an edge whose removal disconnects."""


class InvalidSpec(CompactSpanError):
    exit_code = 9


class ConnectivityRetriesExhausted(CompactSpanError):
    exit_code = 9
