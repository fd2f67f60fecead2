"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """Parameters violate a documented admissibility or hypothesis inequality."""


class RetryExhausted(RuntimeError):
    """A randomized generator ran out of retries before all checks passed."""


class CounterexampleError(RuntimeError):
    """A probe or property sweep found a configuration that should not exist.

    This signals an implementation bug, never new mathematics.
    """


class ConsistencyError(RuntimeError):
    """Two independent internal criteria disagreed; indicates a bug."""
