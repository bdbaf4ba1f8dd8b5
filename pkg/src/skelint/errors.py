"""Exception hierarchy shared across the package."""


class SkelintError(Exception):
    """Base class for all library-specific failures."""


class InvalidCluster(SkelintError):
    """Cluster construction from an empty or invalid index set."""


class DegenerateCluster(SkelintError):
    """Cluster has no usable radius (all points coincide)."""


class InvalidPartition(SkelintError):
    """Requested more clusters than there are points."""


class InvalidGeometry(SkelintError):
    """Generator parameters describe an impossible shape."""


class ParseError(SkelintError):
    """Malformed point-cloud file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SingularEvaluation(SkelintError):
    """Kernel evaluated at zero distance with no regularization floor."""


class SingularPivot(SkelintError):
    """LU hit an exactly zero pivot; the block is numerically rank-deficient."""


class ConvergenceFailure(SkelintError):
    """An iterative factorization did not converge."""


class DivisionByZeroNorm(SkelintError):
    """Relative error requested against a zero-norm reference."""


class EmptySkeleton(SkelintError):
    """Pivot selection returned rank zero (candidate matrix numerically zero)."""


class FactorizationFailure(SkelintError):
    """Pivot block stayed singular through all skeleton-shrinking retries."""


class UnsupportedProvenance(SkelintError):
    """Operation requires an endo candidate set (points drawn from the cluster)."""


class NoConvergence(SkelintError):
    """Adaptive loop exhausted its candidate-size budget.

    Carries the per-iteration trace: for some strategy/kernel combinations
    the blow-up of the candidate set is the measurement itself, so callers
    treat this as data rather than a hard error.
    """

    def __init__(self, trace, message="candidate set size cap reached"):
        super().__init__(message)
        self.trace = list(trace)
