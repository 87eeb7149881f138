"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Malformed or out-of-contract input."""


class ResourceLimitError(RuntimeError):
    """A construction or enumeration would exceed a configured size cap."""


class ConvergenceError(RuntimeError):
    """A dense or iterative solve failed to reach the requested accuracy."""


class DegeneratePerronError(RuntimeError):
    """The spectral radius of a nonnegative matrix is numerically zero."""


class GenerationError(RuntimeError):
    """A randomized generator exhausted its retry budget."""


class ZeroVectorError(ValueError):
    """Every entry of a vector fell below the zero threshold."""
