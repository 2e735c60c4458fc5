"""Exception types shared across the package."""


class MoeLabError(Exception):
    """Base class for all package-specific errors."""


class ShapeError(MoeLabError):
    """Operands have incompatible shapes."""


class NonFiniteError(MoeLabError):
    """A kernel produced NaN or Inf; the enclosing pipeline step must abort."""


class ConfigError(MoeLabError):
    """Invalid model or run configuration."""


class InputError(MoeLabError):
    """Invalid or empty input data."""


class FormatError(MoeLabError):
    """A serialized artifact is malformed (bad magic, truncation, manifest mismatch)."""


class AblationDegenerateError(MoeLabError):
    """Ablating the only active expert leaves no surrogate distribution."""


class NotActivatedError(MoeLabError):
    """Rescue gain requested for an expert that was not in the original active set."""


class InsufficientDataError(MoeLabError):
    """Too few records to stratify."""


class StratificationError(MoeLabError):
    """Hard or easy token set is empty where a nonempty set is required."""


class AllocationError(MoeLabError):
    """Budget allocation is infeasible under the given bounds."""


class ComputeMismatchError(MoeLabError):
    """Runtime expert-activation counts differ between compute-matched modes."""
