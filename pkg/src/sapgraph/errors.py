"""Exception types shared across the package."""


class SapGraphError(Exception):
    """Base class for all package errors."""


# graph construction / queries
class LoopEdge(SapGraphError):
    pass


class DuplicateEdge(SapGraphError):
    pass


class VertexOutOfRange(SapGraphError):
    pass


class UnknownFamily(SapGraphError):
    pass


class BadParams(SapGraphError):
    pass


class TooSmall(SapGraphError):
    pass


class SearchBudgetExceeded(SapGraphError):
    pass


# linear algebra
class NonFinite(SapGraphError):
    pass


class DimensionMismatch(SapGraphError):
    pass


# well-signed matrices
class Disconnected(SapGraphError):
    pass


# SAP / quadric kernels
class EmptyEmbedding(SapGraphError):
    pass


class CorankZero(SapGraphError):
    pass


class ZeroForm(SapGraphError):
    pass


# embedding geometry
class EmptyKernel(SapGraphError):
    pass


class ZeroNormal(SapGraphError):
    pass


class CorankTooSmall(SapGraphError):
    pass


class WrongDimension(SapGraphError):
    pass


# constructions
class DependentConsecutive(SapGraphError):
    pass


class SidesConditionViolated(SapGraphError):
    pass


class HypothesisViolated(SapGraphError):
    pass


class WalkStuck(SapGraphError):
    pass


class SizeMismatch(SapGraphError):
    pass


class KernelNotContained(SapGraphError):
    pass


class BudgetExceeded(SapGraphError):
    pass
