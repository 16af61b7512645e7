"""
Exception hierarchy for dp-pursuit.

Library code raises these; only the command line turns them into exit
codes.
"""


class PursuitError(Exception):
    """Base class for every error raised by dp-pursuit."""


class GraphValidationError(PursuitError, ValueError):
    pass


class SelfLoopError(GraphValidationError):
    pass


class DuplicateEdgeError(GraphValidationError):
    pass


class VertexRangeError(GraphValidationError):
    pass


class PuncturedCenterError(GraphValidationError):
    pass


class EmptyVertexSetError(GraphValidationError):
    pass


class DisconnectedGraphError(PursuitError, ValueError):
    pass


class GuardError(PursuitError, ValueError):
    """A size or parameter guard refused the request."""


class NotBipartiteError(GuardError):
    pass


class HypothesisError(GuardError):
    pass


class GameSpecError(PursuitError, ValueError):
    pass


class CertificateError(PursuitError, ValueError):
    pass


class DecompositionError(PursuitError, ValueError):
    pass


class StrategyError(PursuitError, RuntimeError):
    pass


class GraphFileError(PursuitError, ValueError):
    pass
