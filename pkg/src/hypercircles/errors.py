"""Exception hierarchy shared across the package."""


class HypercirclesError(Exception):
    """Base class for all package-specific errors."""


class InstanceError(HypercirclesError):
    """Malformed or unsupported input (files, fields, parametrizations)."""


class NonProperParametrization(HypercirclesError):
    """The parameter-sampling budget ran out without a usable sample.

    This is the runtime symptom of a non-proper (or degenerate) input
    parametrization: every candidate parameter keeps classifying as singular.
    """


class InternalInvariantError(HypercirclesError):
    """An internal consistency check failed; indicates a bug, not bad input."""
