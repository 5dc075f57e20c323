"""Exception hierarchy shared across the package."""


class OssaError(Exception):
    """Base class for all errors raised by this package."""


class WindowOutOfRange(OssaError, ValueError):
    """Window length violates 1 < L < N."""


class SeriesTooShort(OssaError, ValueError):
    """Series has too few samples for the requested operation."""


class NotSymmetric(OssaError, ValueError):
    """Matrix expected to be symmetric is not, beyond tolerance."""


class NegativeEigenvalue(OssaError, ValueError):
    """Matrix expected to be positive semi-definite has a negative eigenvalue."""


class RankDeficientBasis(OssaError, ValueError):
    """Basis matrix does not have full column rank."""


class RankDeficientStack(OssaError, ArithmeticError):
    """Stacked subspace bases lost full column rank during iteration."""


class InconsistentMetric(OssaError, ValueError):
    """Metric column spaces do not contain the decomposed matrix's spaces."""


class NonPositiveScale(OssaError, ValueError):
    """Rescaling factors must be strictly positive."""


class GroupingError(OssaError, ValueError):
    """Invalid grouping of decomposition components."""


class IndexOutOfRange(GroupingError):
    """Grouping references a component index outside the decomposition."""


class OverlappingGroups(GroupingError):
    """Groups are not pairwise disjoint."""


class IncompletePartition(GroupingError):
    """Grouping must cover every component but does not."""


class ShapeMismatch(OssaError, ValueError):
    """Operands have incompatible shapes."""


class TooFewColumns(OssaError, ValueError):
    """Matrix has too few columns for the requested operation."""


class ZeroNorm(OssaError, ValueError):
    """Correlation undefined because an operand has zero norm."""


class UnknownScenario(OssaError, LookupError):
    """Requested scenario name is not in the registry."""


class InconsistentMetricWarning(UserWarning):
    """Metrics are not consistent with the decomposed matrix; results measure projections only."""
