"""Exception types shared across the library."""


class ConfigurationError(ValueError):
    """A parameter or parameter combination is invalid for the operation."""


class FormatError(ValueError):
    """A file does not conform to its expected binary/text format."""


class ConsistencyError(ValueError):
    """Two inputs that must agree (e.g. image and label counts) do not."""


class ConvergenceError(RuntimeError):
    """An iterative solver failed to converge within its iteration budget."""
